#include "scho/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace scho {

std::optional<Gen> gen_from_char(char c) {
    for (int i = 0; i < kGenCount; ++i)
        if (kGenName[i] == c) return static_cast<Gen>(i);
    return std::nullopt;
}

int PbwMonomial::degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
}

int PbwMonomial::h_weight() const {
    int w = 0;
    for (int i = 0; i < kGenCount; ++i) w += kGenWeight[i] * exp[i];
    return w;
}

int PbwMonomial::pq_degree() const {
    return exp[static_cast<int>(Gen::q)] + exp[static_cast<int>(Gen::p)];
}

PbwMonomial PbwMonomial::generator(Gen g) {
    PbwMonomial m;
    m.exp[static_cast<int>(g)] = 1;
    return m;
}

AlgebraElement AlgebraElement::term(const PbwMonomial& m, const Rational& c) {
    AlgebraElement u;
    u.add_term(m, c);
    return u;
}

int AlgebraElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational AlgebraElement::coefficient(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const PbwMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    out += other;
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    return scaled(Rational(-1));
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

bool AlgebraElement::weight_homogeneous(int& w) const {
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            w = m.h_weight();
            first = false;
        } else if (m.h_weight() != w) {
            return false;
        }
    }
    if (first) w = 0;
    return true;
}

std::map<int, AlgebraElement> AlgebraElement::weight_components() const {
    std::map<int, AlgebraElement> out;
    for (const auto& [m, c] : terms_) out[m.h_weight()].add_term(m, c);
    return out;
}

AlgebraElement commutator_table(Gen x, Gen y) {
    // Brackets [x, y] for x > y in the canonical order; everything else by
    // antisymmetry. All unlisted brackets vanish and z is central.
    auto g = [](Gen a) { return AlgebraElement::generator(a); };
    if (static_cast<int>(x) < static_cast<int>(y)) return -commutator_table(y, x);
    if (x == y) return AlgebraElement::zero();
    switch (x) {
        case Gen::q:  // [q, f] = 0
            return AlgebraElement::zero();
        case Gen::h:
            if (y == Gen::f) return g(Gen::f).scaled(-2);  // [h,f] = -2f
            if (y == Gen::q) return -g(Gen::q);            // [h,q] = -q
            return AlgebraElement::zero();
        case Gen::z:
            return AlgebraElement::zero();
        case Gen::p:
            if (y == Gen::f) return -g(Gen::q);  // [p,f] = -[f,p] = -q
            if (y == Gen::q) return g(Gen::z);   // [p,q] = z
            if (y == Gen::h) return -g(Gen::p);  // [p,h] = -p
            return AlgebraElement::zero();
        case Gen::e:
            if (y == Gen::f) return g(Gen::h);             // [e,f] = h
            if (y == Gen::q) return g(Gen::p);             // [e,q] = p
            if (y == Gen::h) return g(Gen::e).scaled(-2);  // [e,h] = -2e
            return AlgebraElement::zero();                 // [e,p] = [e,z] = 0
        default:
            return AlgebraElement::zero();
    }
}

AlgebraElement gen_mul(Gen g, const PbwMonomial& m) {
    int gi = static_cast<int>(g);
    int first = -1;
    for (int i = 0; i < kGenCount; ++i)
        if (m.exp[i] > 0) {
            first = i;
            break;
        }
    if (first < 0 || gi <= first) {
        PbwMonomial out = m;
        ++out.exp[gi];
        return AlgebraElement::term(out, 1);
    }
    // m = x * rest with x the smallest generator present; g x = x g + [g, x].
    // Every bracket on the right involves only generators >= x, so prepending
    // x keeps normal form.
    PbwMonomial rest = m;
    --rest.exp[first];
    AlgebraElement tail = gen_mul(g, rest);
    AlgebraElement out;
    for (const auto& [mono, c] : tail.terms()) {
        PbwMonomial shifted = mono;
        ++shifted.exp[first];
        out.add_term(shifted, c);
    }
    AlgebraElement br = commutator_table(g, static_cast<Gen>(first));
    for (const auto& [bmono, bc] : br.terms()) {
        // brackets of generators are single generators
        Gen y = Gen::f;
        for (int i = 0; i < kGenCount; ++i)
            if (bmono.exp[i] > 0) y = static_cast<Gen>(i);
        out += gen_mul(y, rest).scaled(bc);
    }
    return out;
}

static AlgebraElement gen_mul_elem(Gen g, const AlgebraElement& u) {
    AlgebraElement out;
    for (const auto& [m, c] : u.terms()) out += gen_mul(g, m).scaled(c);
    return out;
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement out;
    for (const auto& [m, c] : u.terms()) {
        AlgebraElement acc = v;
        for (int i = kGenCount - 1; i >= 0; --i)
            for (int k = 0; k < m.exp[i]; ++k) acc = gen_mul_elem(static_cast<Gen>(i), acc);
        out += acc.scaled(c);
    }
    return out;
}

AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) {
    return multiply(u, v) - multiply(v, u);
}

AlgebraElement sigma(const AlgebraElement& u) {
    // On a monomial: reverse, map e <-> -f, p <-> q, fix h and z. The image
    // word f^t q^s z^d h^c p^b e^a reorders to normal form by commuting pairs
    // only, so the result is monomial-wise with sign (-1)^(a+t).
    AlgebraElement out;
    for (const auto& [m, c] : u.terms()) {
        const int a = m.exp[0], b = m.exp[1], cc = m.exp[2], d = m.exp[3], s = m.exp[4],
                  t = m.exp[5];
        PbwMonomial im;
        im.exp = {t, s, cc, d, b, a};
        out.add_term(im, ((a + t) % 2 == 0) ? c : -c);
    }
    return out;
}

AlgebraElement word_product(const std::vector<Gen>& word) {
    AlgebraElement acc = AlgebraElement::one();
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = gen_mul_elem(*it, acc);
    return acc;
}

namespace {

std::string monomial_string(const PbwMonomial& m) {
    std::string s;
    for (int i = 0; i < kGenCount; ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += kGenName[i];
        if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
    }
    return s;
}

// Print order: filtration degree descending, then exponent tuple descending.
bool print_before(const PbwMonomial& a, const PbwMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exp > b.exp;
}

}  // namespace

std::string to_string(const AlgebraElement& u) {
    if (u.is_zero()) return "0";
    std::vector<std::pair<PbwMonomial, Rational>> terms(u.terms().begin(), u.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return print_before(x.first, y.first); });
    std::ostringstream os;
    bool leading = true;
    for (const auto& [m, c] : terms) {
        Rational coeff = c;
        if (leading) {
            if (coeff < 0) {
                os << '-';
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        std::string ms = monomial_string(m);
        if (ms.empty()) {
            os << to_string(coeff);
        } else if (coeff == 1) {
            os << ms;
        } else {
            os << to_string(coeff) << '*' << ms;
        }
        leading = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    // number := digits [ '/' digits ]
    std::optional<Rational> number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        std::string num = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '/') {
            std::size_t save = pos;
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) {
                pos = save;
                return parse_rational(num);
            }
            return parse_rational(num + "/" + s.substr(dstart, pos - dstart));
        }
        return parse_rational(num);
    }

    std::optional<int> integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        int v = std::stoi(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    // term := [number] (['*'] factor)* ;  factor := gen ['^' int]
    std::optional<AlgebraElement> term() {
        Rational coeff(1);
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            auto n = number();
            if (!n) return std::nullopt;
            coeff = *n;
            any = true;
        }
        AlgebraElement prod = AlgebraElement::one();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                c = peek();
            }
            auto g = (c != '\0') ? gen_from_char(c) : std::nullopt;
            if (!g) break;
            ++pos;
            int e = 1;
            if (peek() == '^') {
                ++pos;
                auto n = integer();
                if (!n || *n < 0) return std::nullopt;
                e = *n;
            }
            for (int k = 0; k < e; ++k)
                prod = multiply(prod, AlgebraElement::generator(*g));
            any = true;
        }
        if (!any) return std::nullopt;
        return prod.scaled(coeff);
    }
};

}  // namespace

std::optional<AlgebraElement> parse_element(const std::string& text) {
    Parser p{text};
    AlgebraElement out;
    if (p.eof()) return std::nullopt;
    bool neg = false;
    if (p.peek() == '-') {
        neg = true;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    if (p.peek() == '0') {
        // allow a literal zero element
        std::size_t save = p.pos;
        auto n = p.number();
        if (n && *n == 0 && p.eof()) return AlgebraElement::zero();
        p.pos = save;
    }
    while (true) {
        auto t = p.term();
        if (!t) return std::nullopt;
        out += neg ? -*t : *t;
        if (p.eof()) break;
        char c = p.peek();
        if (c == '+')
            neg = false;
        else if (c == '-')
            neg = true;
        else
            return std::nullopt;
        ++p.pos;
    }
    return out;
}

}  // namespace scho
