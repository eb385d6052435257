#pragma once

#include "scho/central.hpp"
#include "scho/module.hpp"
#include "scho/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scho {

// The five mutually exclusive weight classes that determine the block shape.
enum class BlockType {
    NonzeroGeneric,      // charge != 0, h not in (1/2)Z
    NonzeroHalfInteger,  // charge != 0, h in Z + 1/2
    NonzeroInteger,      // charge != 0, h in Z
    ZeroNonIntegral,     // charge = 0, h not in Z
    ZeroIntegral,        // charge = 0, h in Z
};

BlockType block_type(const Weight& lambda);
std::string block_type_name(BlockType t);

// The named quivers of the block classification.
enum class QuiverKind {
    Point,            // semisimple block with one simple
    TwoPoints,        // semisimple block with two simples
    TwoVertexAbZero,  // a, b with relation ab = 0
    InftyQ,           // A-type line toward vertex 0, ab = ba, ab = 0 at 0
    QInfty,           // A-type line away from vertex 0, ab = ba, ba = 0 at 0
    Gamma,            // integral zero-charge quiver; relations not determined
};

struct QuiverArrow {
    std::string name;
    int source = 0;
    int target = 0;
};

// A relation is a rational combination of equal-endpoint paths; each path is
// a list of arrow indices composed left to right (first arrow acts first).
struct QuiverRelation {
    std::vector<std::pair<Rational, std::vector<int>>> paths;
    std::string display;  // e.g. "ab=0", "ab=ba"
};

struct QuiverPresentation {
    QuiverKind kind = QuiverKind::Point;
    std::vector<int> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<QuiverRelation> relations;
    bool relations_known = true;  // false for Gamma: only the Gabriel quiver is known

    std::string dot() const;        // digraph with relations as a comment block
    std::string json() const;       // sidecar with vertices/arrows/relations
};

QuiverPresentation quiver_presentation(QuiverKind kind, int n);
// Truncated quiver for a block type (the Serre-subcategory shape at a chosen weight).
QuiverPresentation quiver(BlockType t, int n);

struct BlockDescriptor {
    BlockType type;
    Weight weight;
    Weight dot_partner;
    CentralCharacter character;
    QuiverPresentation quiver;
    std::optional<int> primitive_ideal_count;  // nullopt: unknown (zero charge)

    std::string json() const;
};

inline constexpr int kDefaultQuiverTruncation = 4;

BlockDescriptor classify(const Weight& lambda);

// Truncated projective cover of L(lambda - k h_check) in the category of
// modules supported at or below lambda; zero charge only. Built from the
// graded quotient U-bar/(h - mu(h), p^(k+1), e^ceil((k+1)/2)), cut to the
// supported-below-lambda part, with the indecomposable summand covering
// L(lambda - k h_check) split off exactly. Throws std::invalid_argument on
// nonzero charge or k < 0, D < k.
TruncatedModule truncated_projective(const Weight& lambda, int k, int D);

// dim Ext^1(L(lambda - i h), L(lambda - j h)); negative indices reach weights
// above lambda. Computed as dim Hom(K(mu), L(nu)) for nu strictly below mu,
// via duality for nu above, and 0 on the diagonal (no-loop assumption).
// Throws std::invalid_argument when the depth is too small.
int ext1(const Weight& lambda, int i, int j, int D);

// BGG reciprocity at lambda (zero charge): flag multiplicities of the
// truncated projective against composition multiplicities, for all j <= k.
bool bgg_check(const Weight& lambda, int k, int D);

// Graded dimension table of the projective P(lambda_i) in the finite
// dimensional part: dims[j] = dim P(lambda_i)_j and the simple sl2 summands
// of each layer (indices of lambda_k), from the character convolution.
struct FindimTable {
    int i = 0;
    std::vector<long> dims;                      // j -> (i+1)(j+1)
    std::vector<std::vector<int>> components;    // j -> [k : L(lambda_k) occurs]
    std::string json() const;
};

FindimTable findim_projective(int i, int D);

}  // namespace scho
