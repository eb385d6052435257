#pragma once

#include "scho/pbw.hpp"
#include "scho/weight.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace scho {

// Commutative polynomial in h and z: the target of the Harish-Chandra
// projection. Keys are (h-exponent, z-exponent).
class HCPolynomial {
public:
    HCPolynomial() = default;

    static HCPolynomial term(int h_exp, int z_exp, const Rational& c);

    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    void add_term(int h_exp, int z_exp, const Rational& c);

    HCPolynomial operator+(const HCPolynomial& other) const;
    HCPolynomial operator-(const HCPolynomial& other) const;
    HCPolynomial operator*(const HCPolynomial& other) const;
    bool operator==(const HCPolynomial&) const = default;

    Rational evaluate(const Weight& lambda) const;
    std::string str() const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

// The Casimir c = (h^2 + h + 4fe)z - 2(fp^2 - eq^2 - hpq), in normal form.
AlgebraElement casimir();

// kappa = fp^2 - eq^2 - hpq, the generator of the center of the centerless algebra.
AlgebraElement kappa();

// True iff [x, u] = 0 for all six generators.
bool verify_central(const AlgebraElement& u);

// True iff [x, u] lies in the two-sided ideal (z) for all generators, i.e.
// every monomial of each bracket contains z. (In PBW coordinates (z) is a
// monomial ideal, so this is a coordinate test.)
bool verify_central_mod_z(const AlgebraElement& u);

// Harish-Chandra projection U_0 -> U(h): keeps the monomials lying in the
// subalgebra generated by h, z; the discarded part sits in U_0 \cap U n_+.
// Throws std::invalid_argument unless u is weight-homogeneous of weight 0.
HCPolynomial hc_homomorphism(const AlgebraElement& u);

// theta = (h^2 + 3h + 2) z evaluated at the weight.
CentralCharacter central_character(const Weight& lambda);

inline constexpr int kCenterDegreeBound = 8;

// Basis of {u in U_{<=d} : [x,u] = 0 for all generators}, by exact kernel of
// the adjoint maps on the filtered piece. Throws std::invalid_argument when
// d < 0 or d exceeds kCenterDegreeBound.
std::vector<AlgebraElement> center_basis(int d);

// All PBW monomials of filtration degree <= d (canonical order).
std::vector<PbwMonomial> monomials_up_to_degree(int d);

}  // namespace scho
