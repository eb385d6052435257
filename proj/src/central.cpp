#include "scho/central.hpp"

#include "scho/qmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace scho {

HCPolynomial HCPolynomial::term(int h_exp, int z_exp, const Rational& c) {
    HCPolynomial p;
    p.add_term(h_exp, z_exp, c);
    return p;
}

void HCPolynomial::add_term(int h_exp, int z_exp, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(h_exp, z_exp);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HCPolynomial HCPolynomial::operator+(const HCPolynomial& other) const {
    HCPolynomial out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, c);
    return out;
}

HCPolynomial HCPolynomial::operator-(const HCPolynomial& other) const {
    HCPolynomial out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

HCPolynomial HCPolynomial::operator*(const HCPolynomial& other) const {
    HCPolynomial out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : other.terms_)
            out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return out;
}

Rational HCPolynomial::evaluate(const Weight& lambda) const {
    Rational out(0);
    for (const auto& [k, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < k.first; ++i) v *= lambda.h_val;
        for (int i = 0; i < k.second; ++i) v *= lambda.z_val;
        out += v;
    }
    return out;
}

std::string HCPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool leading = true;
    for (const auto& [k, c] : ts) {
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
        std::string mono;
        if (k.first > 0) {
            mono += 'h';
            if (k.first > 1) mono += '^' + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!mono.empty()) mono += ' ';
            mono += 'z';
            if (k.second > 1) mono += '^' + std::to_string(k.second);
        }
        if (mono.empty()) {
            os << to_string(coeff);
        } else if (coeff == 1) {
            os << mono;
        } else {
            os << to_string(coeff) << '*' << mono;
        }
        leading = false;
    }
    return os.str();
}

AlgebraElement casimir() {
    auto g = [](Gen x) { return AlgebraElement::generator(x); };
    AlgebraElement h = g(Gen::h), z = g(Gen::z), e = g(Gen::e), f = g(Gen::f);
    AlgebraElement sl2 = multiply(h, h) + h + multiply(f, e).scaled(4);
    return multiply(sl2, z) - kappa().scaled(2);
}

AlgebraElement kappa() {
    auto g = [](Gen x) { return AlgebraElement::generator(x); };
    AlgebraElement f = g(Gen::f), p = g(Gen::p), e = g(Gen::e), q = g(Gen::q), h = g(Gen::h);
    return multiply(f, multiply(p, p)) - multiply(e, multiply(q, q)) -
           multiply(h, multiply(p, q));
}

bool verify_central(const AlgebraElement& u) {
    for (int i = 0; i < kGenCount; ++i)
        if (!bracket(AlgebraElement::generator(static_cast<Gen>(i)), u).is_zero()) return false;
    return true;
}

bool verify_central_mod_z(const AlgebraElement& u) {
    for (int i = 0; i < kGenCount; ++i) {
        AlgebraElement b = bracket(AlgebraElement::generator(static_cast<Gen>(i)), u);
        for (const auto& [m, c] : b.terms())
            if (m.exp[static_cast<int>(Gen::z)] == 0) return false;
    }
    return true;
}

HCPolynomial hc_homomorphism(const AlgebraElement& u) {
    int w = 0;
    if (!u.weight_homogeneous(w) || w != 0)
        throw std::invalid_argument("hc_homomorphism: input must be weight-0 homogeneous");
    HCPolynomial out;
    for (const auto& [m, c] : u.terms()) {
        // weight 0 and no p, e factor forces no f, q factor either
        if (m.exp[static_cast<int>(Gen::p)] == 0 && m.exp[static_cast<int>(Gen::e)] == 0)
            out.add_term(m.exp[static_cast<int>(Gen::h)], m.exp[static_cast<int>(Gen::z)], c);
    }
    return out;
}

CentralCharacter central_character(const Weight& lambda) {
    Rational h = lambda.h_val;
    return CentralCharacter{(h * h + 3 * h + 2) * lambda.z_val, lambda.z_val};
}

std::vector<PbwMonomial> monomials_up_to_degree(int d) {
    std::vector<PbwMonomial> out;
    PbwMonomial m;
    // lexicographic enumeration over exponent tuples with degree <= d
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == kGenCount) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m.exp[slot] = e;
            self(self, slot + 1, remaining - e);
        }
        m.exp[slot] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AlgebraElement> center_basis(int d) {
    if (d < 0 || d > kCenterDegreeBound)
        throw std::invalid_argument("center_basis: degree bound exceeded");
    // [h, u] = 0 already forces u into the weight-0 part, so restrict there
    // and impose the four remaining nontrivial adjoint maps ([z, -] = 0).
    std::vector<PbwMonomial> basis;
    for (const auto& m : monomials_up_to_degree(d))
        if (m.h_weight() == 0) basis.push_back(m);

    std::vector<Gen> gens = {Gen::f, Gen::q, Gen::p, Gen::e};
    std::map<std::pair<int, PbwMonomial>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(basis.size());
    std::size_t nrows = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        AlgebraElement x = AlgebraElement::term(basis[j], 1);
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            AlgebraElement ad = bracket(AlgebraElement::generator(gens[gi]), x);
            for (const auto& [m, c] : ad.terms()) {
                auto [it, inserted] = row_of.emplace(std::make_pair(static_cast<int>(gi), m), nrows);
                if (inserted) ++nrows;
                cols[j].push_back({it->second, c});
            }
        }
    }
    QMatrix mat(nrows, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [r, c] : cols[j]) mat.at(r, j) += c;
    QMatrix ker = mat.kernel();
    std::vector<AlgebraElement> out;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        AlgebraElement u;
        for (std::size_t j = 0; j < basis.size(); ++j) u.add_term(basis[j], ker.at(j, k));
        out.push_back(u);
    }
    return out;
}

}  // namespace scho
