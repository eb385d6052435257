#include "scho/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace scho {

WeylElement WeylElement::one(const Rational& charge) {
    return monomial(charge, 0, 0, 1);
}

WeylElement WeylElement::monomial(const Rational& charge, int q_exp, int p_exp,
                                  const Rational& c) {
    WeylElement u(charge);
    u.add_term(q_exp, p_exp, c);
    return u;
}

void WeylElement::add_term(int q_exp, int p_exp, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(q_exp, p_exp);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WeylElement WeylElement::operator+(const WeylElement& other) const {
    if (charge_ != other.charge_) throw std::invalid_argument("weyl: charge mismatch");
    WeylElement out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, c);
    return out;
}

WeylElement WeylElement::operator-(const WeylElement& other) const {
    if (charge_ != other.charge_) throw std::invalid_argument("weyl: charge mismatch");
    WeylElement out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

WeylElement WeylElement::scaled(const Rational& c) const {
    WeylElement out(charge_);
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

std::string WeylElement::str() const {
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
            mono += 'q';
            if (k.first > 1) mono += '^' + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!mono.empty()) mono += ' ';
            mono += 'p';
            if (k.second > 1) mono += '^' + std::to_string(k.second);
        }
        if (mono.empty())
            os << to_string(coeff);
        else if (coeff == 1)
            os << mono;
        else
            os << to_string(coeff) << '*' << mono;
        leading = false;
    }
    return os.str();
}

WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v) {
    if (u.charge() != v.charge()) throw std::invalid_argument("weyl_multiply: charge mismatch");
    const Rational& zd = u.charge();
    WeylElement out(zd);
    // p^n q^m = sum_k k! C(n,k) C(m,k) zdot^k q^(m-k) p^(n-k)
    for (const auto& [k1, c1] : u.terms())
        for (const auto& [k2, c2] : v.terms()) {
            int m1 = k1.first, n1 = k1.second;
            int m2 = k2.first, n2 = k2.second;
            Rational coeff = c1 * c2;  // k = 0 term
            Rational binom(1);         // running k! C(n1,k) C(m2,k)
            for (int k = 0; k <= std::min(n1, m2); ++k) {
                if (k > 0) binom *= Rational(n1 - k + 1) * Rational(m2 - k + 1) / Rational(k);
                Rational term = coeff * binom;
                for (int j = 0; j < k; ++j) term *= zd;
                out.add_term(m1 + m2 - k, n1 + n2 - k, term);
            }
        }
    return out;
}

WeylElement weyl_bracket(const WeylElement& u, const WeylElement& v) {
    return weyl_multiply(u, v) - weyl_multiply(v, u);
}

WeylElement phi_generator(Gen g, const Rational& zdot) {
    if (zdot == 0) throw std::invalid_argument("phi: zero charge");
    switch (g) {
        case Gen::e:
            return WeylElement::monomial(zdot, 0, 2, Rational(1) / (2 * zdot));
        case Gen::f:
            return WeylElement::monomial(zdot, 2, 0, Rational(-1) / (2 * zdot));
        case Gen::h: {
            WeylElement u = WeylElement::monomial(zdot, 1, 1, Rational(-1) / zdot);
            u.add_term(0, 0, Rational(-1, 2));
            return u;
        }
        case Gen::z:
            return WeylElement::monomial(zdot, 0, 0, zdot);
        case Gen::p:
            return WeylElement::monomial(zdot, 0, 1, 1);
        case Gen::q:
            return WeylElement::monomial(zdot, 1, 0, 1);
    }
    return WeylElement::zero(zdot);
}

WeylElement phi(const AlgebraElement& u, const Rational& zdot) {
    if (zdot == 0) throw std::invalid_argument("phi: zero charge");
    WeylElement out(zdot);
    for (const auto& [m, c] : u.terms()) {
        WeylElement prod = WeylElement::one(zdot);
        for (int slot = 0; slot < kGenCount; ++slot)
            for (int k = 0; k < m.exp[slot]; ++k)
                prod = weyl_multiply(prod, phi_generator(static_cast<Gen>(slot), zdot));
        out = out + prod.scaled(c);
    }
    return out;
}

TruncatedModule weyl_module_m(const Rational& zdot, int D) {
    if (zdot == 0) throw std::invalid_argument("weyl_module_m: zero charge");
    if (D < 0) throw std::invalid_argument("weyl_module_m: negative depth");
    TruncatedModule M;
    M.highest = Weight(Rational(-1, 2), zdot);
    M.depth = D;
    M.dims.assign(D + 1, 1);
    M.labels.resize(D + 1);
    for (int n = 0; n <= D; ++n)
        M.labels[n].push_back(n == 0 ? "1" : (n == 1 ? "q 1" : "q^" + std::to_string(n) + " 1"));
    for (int gi = 0; gi < kGenCount; ++gi) M.act[gi].resize(D + 1);
    for (int n = 0; n <= D; ++n) {
        // p q^n 1 = n zdot q^(n-1) 1;   e = p^2/2zdot;   f = -q^2/2zdot
        if (n >= 1) {
            QMatrix P(1, 1);
            P.at(0, 0) = Rational(n) * zdot;
            M.act[static_cast<int>(Gen::p)][n] = std::move(P);
        }
        if (n >= 2) {
            QMatrix E(1, 1);
            E.at(0, 0) = Rational(n) * Rational(n - 1) * zdot / 2;
            M.act[static_cast<int>(Gen::e)][n] = std::move(E);
        }
        if (n + 1 <= D) {
            QMatrix Q(1, 1);
            Q.at(0, 0) = 1;
            M.act[static_cast<int>(Gen::q)][n] = std::move(Q);
        }
        if (n + 2 <= D) {
            QMatrix F(1, 1);
            F.at(0, 0) = Rational(-1) / (2 * zdot);
            M.act[static_cast<int>(Gen::f)][n] = std::move(F);
        }
        QMatrix H(1, 1);
        H.at(0, 0) = Rational(-n) - Rational(1, 2);
        M.act[static_cast<int>(Gen::h)][n] = std::move(H);
        QMatrix Z(1, 1);
        Z.at(0, 0) = zdot;
        M.act[static_cast<int>(Gen::z)][n] = std::move(Z);
    }
    return M;
}

TruncatedModule tensor_with_m(const Rational& a, int D, const Rational& zdot) {
    if (zdot == 0) throw std::invalid_argument("tensor_with_m: zero charge");
    if (D < 0) throw std::invalid_argument("tensor_with_m: negative depth");
    // basis q^n 1 (x) f^k v_a at depth n + 2k, ordered by k ascending
    TruncatedModule T;
    T.highest = Weight(a - Rational(1, 2), zdot);
    T.depth = D;
    T.dims.resize(D + 1);
    auto comps = [&](int i) {
        std::vector<std::pair<int, int>> out;  // (k, n)
        for (int k = 0; 2 * k <= i; ++k) out.push_back({k, i - 2 * k});
        return out;
    };
    for (int i = 0; i <= D; ++i) T.dims[i] = i / 2 + 1;
    auto index_of = [](int /*depth*/, int k) { return k; };
    for (int gi = 0; gi < kGenCount; ++gi) T.act[gi].resize(D + 1);
    for (int i = 0; i <= D; ++i) {
        auto basis = comps(i);
        // h and z are diagonal
        QMatrix H(T.dims[i], T.dims[i]), Z(T.dims[i], T.dims[i]);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            auto [k, n] = basis[c];
            H.at(c, c) = (Rational(-n) - Rational(1, 2)) + (a - 2 * k);
            Z.at(c, c) = zdot;
        }
        T.act[static_cast<int>(Gen::h)][i] = std::move(H);
        T.act[static_cast<int>(Gen::z)][i] = std::move(Z);
        // p, q act through the Weyl factor only
        if (i >= 1) {
            QMatrix P(T.dims[i - 1], T.dims[i]);
            for (std::size_t c = 0; c < basis.size(); ++c) {
                auto [k, n] = basis[c];
                if (n >= 1) P.at(index_of(i - 1, k), c) = Rational(n) * zdot;
            }
            T.act[static_cast<int>(Gen::p)][i] = std::move(P);
        }
        if (i + 1 <= D) {
            QMatrix Q(T.dims[i + 1], T.dims[i]);
            for (std::size_t c = 0; c < basis.size(); ++c) {
                auto [k, n] = basis[c];
                Q.at(index_of(i + 1, k), c) = 1;
            }
            T.act[static_cast<int>(Gen::q)][i] = std::move(Q);
        }
        // e, f act diagonally on the tensor
        if (i >= 2) {
            QMatrix E(T.dims[i - 2], T.dims[i]);
            for (std::size_t c = 0; c < basis.size(); ++c) {
                auto [k, n] = basis[c];
                if (n >= 2)
                    E.at(index_of(i - 2, k), c) += Rational(n) * Rational(n - 1) * zdot / 2;
                if (k >= 1)
                    E.at(index_of(i - 2, k - 1), c) += Rational(k) * (a - (k - 1));
            }
            T.act[static_cast<int>(Gen::e)][i] = std::move(E);
        }
        if (i + 2 <= D) {
            QMatrix F(T.dims[i + 2], T.dims[i]);
            for (std::size_t c = 0; c < basis.size(); ++c) {
                auto [k, n] = basis[c];
                F.at(index_of(i + 2, k), c) += Rational(-1) / (2 * zdot);  // to q^(n+2) (x) f^k
                F.at(index_of(i + 2, k + 1), c) += 1;                      // to q^n (x) f^(k+1)
            }
            T.act[static_cast<int>(Gen::f)][i] = std::move(F);
        }
    }
    return T;
}

}  // namespace scho
