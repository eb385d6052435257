#pragma once

#include "scho/pbw.hpp"
#include "scho/qmatrix.hpp"
#include "scho/weight.hpp"

#include <string>
#include <vector>

namespace scho {

inline constexpr int kAnnihilatorDegreeBound = 4;

// A subspace of the filtered piece U_{<=d}, stored as a reduced echelon basis
// with respect to the canonical monomial order (so subspace equality is a
// matrix comparison).
struct FilteredIdealSlice {
    int degree_bound = 0;
    std::vector<PbwMonomial> ambient;   // monomial basis of U_{<=d}
    QMatrix basis;                      // columns = basis vectors, reduced
    std::vector<AlgebraElement> elements() const;
    int dim() const { return static_cast<int>(basis.cols()); }
};

// Ann_U(Delta(lambda)) intersect U_{<=d}, by the parametric kernel: u of
// degree <= d annihilates the Verma iff it kills f^a q^b v for all
// a, b in {0..d} (each PBW coefficient is polynomial of degree <= d in a, b).
// Throws std::invalid_argument when d exceeds kAnnihilatorDegreeBound.
FilteredIdealSlice annihilator_slice(const Weight& lambda, int d);

// Span of U_{<=d-1} (z - zdot) + U_{<=d-3} (c - theta) inside U_{<=d}.
FilteredIdealSlice central_ideal_slice(const Weight& lambda, int d);

enum class SliceVerdict { Equal, CentralSmaller, Other };
std::string verdict_name(SliceVerdict v);

SliceVerdict compare_slices(const Weight& lambda, int d);

// Dimension of the intersection of the annihilator slices over the samples.
int intersection_check(const std::vector<Weight>& samples, int d);

// True iff u (degree <= d) kills f^a q^b v_lambda for all a, b on the given grid.
bool kills_verma_grid(const AlgebraElement& u, const Weight& lambda, int grid);

}  // namespace scho
