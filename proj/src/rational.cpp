#include "scho/rational.hpp"

#include <cctype>

namespace scho {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid(s)) return std::nullopt;
        Rational r(s);
        r.canonicalize();
        return r;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid(num) || !valid(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

bool is_half_integer(const Rational& r) {
    return r.get_den() == 2;
}

long floor_long(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

}  // namespace scho
