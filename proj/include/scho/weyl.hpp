#pragma once

#include "scho/module.hpp"
#include "scho/pbw.hpp"
#include "scho/weight.hpp"

#include <map>
#include <string>
#include <utility>

namespace scho {

// Element of B_zdot = U(i)/(z - zdot), the first Weyl algebra at nonzero
// charge: normal form q-before-p with p q = q p + zdot.
class WeylElement {
public:
    explicit WeylElement(Rational charge) : charge_(std::move(charge)) {}

    static WeylElement zero(const Rational& charge) { return WeylElement(charge); }
    static WeylElement one(const Rational& charge);
    static WeylElement monomial(const Rational& charge, int q_exp, int p_exp,
                                const Rational& c);

    const Rational& charge() const { return charge_; }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    void add_term(int q_exp, int p_exp, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    WeylElement operator+(const WeylElement& other) const;
    WeylElement operator-(const WeylElement& other) const;
    WeylElement scaled(const Rational& c) const;
    bool operator==(const WeylElement& other) const = default;

    std::string str() const;  // "coeff*q^m p^n" sums

private:
    Rational charge_;
    std::map<std::pair<int, int>, Rational> terms_;
};

// Throws std::invalid_argument on charge mismatch.
WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v);
WeylElement weyl_bracket(const WeylElement& u, const WeylElement& v);

// The realization Phi: e -> p^2/2zdot, f -> -q^2/2zdot, h -> -qp/zdot - 1/2,
// z -> zdot, extended multiplicatively over PBW monomials.
// Throws std::invalid_argument when zdot = 0.
WeylElement phi(const AlgebraElement& u, const Rational& zdot);
WeylElement phi_generator(Gen g, const Rational& zdot);

// The module M = B_zdot / B_zdot p as a truncated highest weight module with
// highest weight (-1/2, zdot); basis q^n 1 at depth n.
TruncatedModule weyl_module_m(const Rational& zdot, int D);

// M (x) Delta^{sl2}(a) under the comultiplication, truncated at depth D.
// The sl2 Verma of highest weight a is an s-module through the projection
// (p, q, z acting by zero).
TruncatedModule tensor_with_m(const Rational& a, int D, const Rational& zdot);

}  // namespace scho
