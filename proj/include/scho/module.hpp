#pragma once

#include "scho/pbw.hpp"
#include "scho/qmatrix.hpp"
#include "scho/weight.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scho {

// Depth shift of each generator action: f and q move deeper, e and p raise.
int depth_offset(Gen g);

// pq-grade shift of each generator action (deg p = deg q = 1).
int grade_offset(Gen g);

// A weight-graded module truncated at depth D below its highest weight.
// Space i sits at weight (highest - i h_check). Raising operators are total
// (targets above the top are genuinely zero); lowering operators out of the
// deepest spaces are truncated and stored as absent. Consumers must only
// assert relations where all participating maps are present.
struct TruncatedModule {
    Weight highest;
    int depth = 0;
    std::vector<int> dims;                                    // dims[i], i in [0, depth]
    std::array<std::vector<std::optional<QMatrix>>, kGenCount> act;
    std::vector<std::vector<std::string>> labels;             // optional, per space
    std::vector<std::vector<int>> grade;                      // pq-grades; empty if ungraded

    bool graded() const { return !grade.empty(); }
    int dim(int i) const { return (i >= 0 && i <= depth) ? dims[i] : 0; }

    // Matrix of g from space i, materializing genuine zero maps above the top.
    // Absent (nullopt) only for truncated lowering maps.
    std::optional<QMatrix> action(Gen g, int i) const;

    // Applies a normally ordered monomial to a vector in space i; the word is
    // read right to left so raising factors act first. Returns the target
    // space index through `out_space`. Requires every intermediate lowering
    // map to be present.
    std::vector<Rational> apply_monomial(const PbwMonomial& m, int i,
                                         const std::vector<Rational>& v, int& out_space) const;
    std::vector<Rational> apply_element(const AlgebraElement& u, int i,
                                        const std::vector<Rational>& v, int& out_space) const;
};

// Verma module truncation: basis f^a q^b v (2a + b = i) at depth i, ordered
// by a ascending. Carries the pq-grading when the charge is zero.
TruncatedModule verma(const Weight& lambda, int D);

// Contravariant form data: one symmetric Gram matrix per depth. Its radical
// at depth i is the maximal-submodule slice, its rank the simple character.
using GramForm = std::vector<QMatrix>;

// Gram matrices of B(x v, y v) = pi_lambda(phi(sigma(x) y)) on the depth-i
// spaces of the Verma, for i = 0..D.
GramForm contravariant_forms(const Weight& lambda, int D);
QMatrix contravariant_form(const Weight& lambda, int i);

// Basis (columns) of {v in M_i : e v = 0, p v = 0}; the highest-weight line
// for i = 0. Throws std::out_of_range for i outside [0, depth].
QMatrix singular_vectors(const TruncatedModule& M, int i);

// dim L(lambda)_{lambda - i h_check} = rank of the Gram matrix, i = 0..D.
std::vector<int> simple_character(const Weight& lambda, int D);

std::vector<int> verma_character(int D);  // floor(i/2) + 1

// Composition multiplicities (Delta(lambda) : L(lambda - k h_check)) for
// k <= D/2, by the unitriangular character solve against simple characters.
std::map<int, int> composition_multiplicities(const Weight& lambda, int D);

// dim Hom(Delta(mu), Delta(lambda)) via singular vectors of weight mu.
// Returns 0 for incompatible weights (off-lattice or different charge).
int verma_hom(const Weight& mu, const Weight& lambda, int D);

// Duality: sigma-twisted transpose actions on the same support.
TruncatedModule dual_module(const TruncatedModule& M);

// Submodule spanned by the given per-depth column spans (must be action
// stable; grades, when present, must be pure per column).
TruncatedModule submodule(const TruncatedModule& M, const std::vector<QMatrix>& span);

// Quotient by a stable subspace; the quotient basis is the set of original
// basis vectors at non-pivot positions, so labels and grades carry over.
TruncatedModule quotient_module(const TruncatedModule& M, const std::vector<QMatrix>& span);

// Maximal submodule K(lambda) of the Verma truncation: the Gram radical.
TruncatedModule gram_radical_module(const Weight& lambda, int D);
// Simple quotient L(lambda) = Delta(lambda)/K(lambda), truncated.
TruncatedModule simple_module(const Weight& lambda, int D);

struct HomResult {
    int dim = 0;          // rank of the solution space restricted to the window
    int window = 0;       // deepest source depth used for reporting
    int full_dim = 0;     // solution count before windowing (diagnostic)
    // basis maps, restricted to the window: maps[k][i] : M_i -> N_{i+shift}
    std::vector<std::vector<QMatrix>> maps;
    int shift = 0;
};

inline constexpr int kHomWindowMargin = 4;

// Degree-0 intertwiners M -> N: T x = x T per generator, imposed on every
// space where both action matrices exist. Solutions are reported restricted
// to the safe window [0, min depth - margin] to discard truncation-boundary
// artifacts. grade_raise, when set, selects maps raising the pq-grade by
// that amount (Hom(M<-s>, N) in the graded category).
HomResult module_hom(const TruncatedModule& M, const TruncatedModule& N,
                     std::optional<int> grade_raise = std::nullopt,
                     std::optional<int> window = std::nullopt);

// V (x) M with V the n-dimensional simple sl2-module (p, q, z acting by zero)
// under the comultiplication action. Preserves charge and grading.
TruncatedModule tensor_findim(const TruncatedModule& M, int n);

// Per-grade depth vectors of a graded module: grade -> [dim of the grade
// layer at depth 0, 1, ...]. Empty for ungraded modules.
std::map<int, std::vector<int>> graded_character(const TruncatedModule& M);

// Eq.(1) relation matrices on every truncation-interior space; used by tests
// and the verification CLI path. Returns false with a message on failure.
bool verify_module_relations(const TruncatedModule& M, std::string* msg = nullptr);

// Serialization helpers.
std::string depth_vector_json(const std::vector<int>& dims);

}  // namespace scho
