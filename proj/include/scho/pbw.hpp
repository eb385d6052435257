#pragma once

#include "scho/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scho {

// The six generators of the centrally extended Schrodinger algebra, in the
// canonical PBW order f < q < h < z < p < e (negative part, Cartan, positive
// part). The order is fixed for the whole library.
enum class Gen : int { f = 0, q = 1, h = 2, z = 3, p = 4, e = 5 };

inline constexpr int kGenCount = 6;
inline constexpr std::array<char, kGenCount> kGenName = {'f', 'q', 'h', 'z', 'p', 'e'};
// h-weight of each generator under ad h.
inline constexpr std::array<int, kGenCount> kGenWeight = {-2, -1, 0, 0, 1, 2};

std::optional<Gen> gen_from_char(char c);

// Ordered monomial f^a q^b h^c z^d p^s e^t.
struct PbwMonomial {
    std::array<int, kGenCount> exp{};

    int degree() const;     // filtration degree a+b+c+d+s+t
    int h_weight() const;   // -2a - b + s + 2t
    int pq_degree() const;  // b + s (grading with deg p = deg q = 1)

    bool is_one() const { return degree() == 0; }
    auto operator<=>(const PbwMonomial&) const = default;

    static PbwMonomial one() { return {}; }
    static PbwMonomial generator(Gen g);
};

// Element of U(s): finite Q-linear combination of PBW monomials.
// Canonical form never stores zero coefficients, so equality is map equality.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return term(PbwMonomial::one(), 1); }
    static AlgebraElement generator(Gen g) { return term(PbwMonomial::generator(g), 1); }
    static AlgebraElement term(const PbwMonomial& m, const Rational& c);

    const std::map<PbwMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max filtration degree, -1 for the zero element

    Rational coefficient(const PbwMonomial& m) const;

    void add_term(const PbwMonomial& m, const Rational& c);

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Rational& c) const;
    AlgebraElement& operator+=(const AlgebraElement& other);
    bool operator==(const AlgebraElement& other) const = default;

    // True if every monomial has the same h-weight; weight returned through w.
    bool weight_homogeneous(int& w) const;
    // Splits into h-weight homogeneous components.
    std::map<int, AlgebraElement> weight_components() const;

private:
    std::map<PbwMonomial, Rational> terms_;
};

// [x, y] for generators, straight from the structure constants. Antisymmetric,
// zero on all pairs not forced by the defining relations; z is central.
AlgebraElement commutator_table(Gen x, Gen y);

// Product of g with a monomial, in normal form.
AlgebraElement gen_mul(Gen g, const PbwMonomial& m);

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v);

// The involutive anti-automorphism with sigma(e) = -f, sigma(p) = q,
// sigma(z) = z (hence sigma(f) = -e, sigma(q) = p, sigma(h) = h).
AlgebraElement sigma(const AlgebraElement& u);

// Builds the product of a generator word, w[0] * w[1] * ... (normalized).
AlgebraElement word_product(const std::vector<Gen>& word);

// Wire format: sum of terms "coeff*f^a q^b h^c z^d p^s e^t" with unit
// coefficients and exponents elided; e.g. "f e + h", "-2*f p^2".
std::string to_string(const AlgebraElement& u);

// Accepts arbitrary generator words with rational coefficients (factors
// separated by spaces or '*', exponents with '^') and normalizes.
// Returns nullopt on malformed input.
std::optional<AlgebraElement> parse_element(const std::string& text);

}  // namespace scho
