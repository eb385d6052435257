#include "scho/annihilators.hpp"

#include "scho/central.hpp"

#include <map>
#include <stdexcept>

namespace scho {

namespace {

// u * (f^a q^b) applied to the highest weight vector: e, p kill, h and z
// evaluate, leaving a combination of f^a' q^b' v.
std::map<std::pair<int, int>, Rational> act_on_generator(const AlgebraElement& u,
                                                         const Weight& lambda, int a, int b) {
    PbwMonomial fq;
    fq.exp[static_cast<int>(Gen::f)] = a;
    fq.exp[static_cast<int>(Gen::q)] = b;
    AlgebraElement prod = multiply(u, AlgebraElement::term(fq, 1));
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [m, c] : prod.terms()) {
        if (m.exp[static_cast<int>(Gen::p)] > 0 || m.exp[static_cast<int>(Gen::e)] > 0)
            continue;
        Rational scal = c;
        for (int i = 0; i < m.exp[static_cast<int>(Gen::h)]; ++i) scal *= lambda.h_val;
        for (int i = 0; i < m.exp[static_cast<int>(Gen::z)]; ++i) scal *= lambda.z_val;
        if (scal == 0) continue;
        auto key = std::make_pair(m.exp[static_cast<int>(Gen::f)],
                                  m.exp[static_cast<int>(Gen::q)]);
        auto [it, inserted] = out.emplace(key, scal);
        if (!inserted) {
            it->second += scal;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

FilteredIdealSlice make_slice(int d, const std::vector<PbwMonomial>& ambient,
                              const QMatrix& span) {
    FilteredIdealSlice s;
    s.degree_bound = d;
    s.ambient = ambient;
    s.basis = subspace::reduce(span);
    return s;
}

}  // namespace

std::vector<AlgebraElement> FilteredIdealSlice::elements() const {
    std::vector<AlgebraElement> out;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        AlgebraElement u;
        for (std::size_t r = 0; r < ambient.size(); ++r) u.add_term(ambient[r], basis.at(r, c));
        out.push_back(u);
    }
    return out;
}

bool kills_verma_grid(const AlgebraElement& u, const Weight& lambda, int grid) {
    for (int a = 0; a <= grid; ++a)
        for (int b = 0; b <= grid; ++b)
            if (!act_on_generator(u, lambda, a, b).empty()) return false;
    return true;
}

FilteredIdealSlice annihilator_slice(const Weight& lambda, int d) {
    if (d < 0 || d > kAnnihilatorDegreeBound)
        throw std::invalid_argument("annihilator_slice: degree bound exceeded");
    std::vector<PbwMonomial> ambient = monomials_up_to_degree(d);
    // constraint rows: (grid point, target basis vector) pairs
    std::map<std::tuple<int, int, int, int>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(ambient.size());
    std::size_t nrows = 0;
    for (std::size_t j = 0; j < ambient.size(); ++j) {
        AlgebraElement u = AlgebraElement::term(ambient[j], 1);
        for (int a = 0; a <= d; ++a)
            for (int b = 0; b <= d; ++b)
                for (const auto& [key, c] : act_on_generator(u, lambda, a, b)) {
                    auto rk = std::make_tuple(a, b, key.first, key.second);
                    auto [it, inserted] = row_of.emplace(rk, nrows);
                    if (inserted) ++nrows;
                    cols[j].push_back({it->second, c});
                }
    }
    QMatrix mat(nrows, ambient.size());
    for (std::size_t j = 0; j < ambient.size(); ++j)
        for (const auto& [r, c] : cols[j]) mat.at(r, j) += c;
    return make_slice(d, ambient, mat.kernel());
}

FilteredIdealSlice central_ideal_slice(const Weight& lambda, int d) {
    if (d < 1) throw std::invalid_argument("central_ideal_slice: need d >= 1");
    std::vector<PbwMonomial> ambient = monomials_up_to_degree(d);
    std::map<PbwMonomial, std::size_t> pos;
    for (std::size_t i = 0; i < ambient.size(); ++i) pos[ambient[i]] = i;

    AlgebraElement zgen =
        AlgebraElement::generator(Gen::z) - AlgebraElement::one().scaled(lambda.z_val);
    AlgebraElement cgen =
        casimir() - AlgebraElement::one().scaled(central_character(lambda).theta);

    std::vector<AlgebraElement> gens_list;
    for (const auto& m : monomials_up_to_degree(d - 1))
        gens_list.push_back(multiply(AlgebraElement::term(m, 1), zgen));
    if (d >= 3)
        for (const auto& m : monomials_up_to_degree(d - 3))
            gens_list.push_back(multiply(AlgebraElement::term(m, 1), cgen));

    QMatrix span(ambient.size(), gens_list.size());
    for (std::size_t c = 0; c < gens_list.size(); ++c)
        for (const auto& [m, coeff] : gens_list[c].terms()) {
            auto it = pos.find(m);
            if (it == pos.end())
                throw std::logic_error("central_ideal_slice: degree overflow");
            span.at(it->second, c) = coeff;
        }
    return make_slice(d, ambient, span);
}

std::string verdict_name(SliceVerdict v) {
    switch (v) {
        case SliceVerdict::Equal: return "equal";
        case SliceVerdict::CentralSmaller: return "central subset of annihilator";
        case SliceVerdict::Other: return "other";
    }
    return "?";
}

SliceVerdict compare_slices(const Weight& lambda, int d) {
    FilteredIdealSlice ann = annihilator_slice(lambda, d);
    FilteredIdealSlice cen = central_ideal_slice(lambda, d);
    bool contained = subspace::contains(ann.basis, cen.basis);
    if (!contained) return SliceVerdict::Other;
    if (ann.dim() == cen.dim()) return SliceVerdict::Equal;
    return SliceVerdict::CentralSmaller;
}

int intersection_check(const std::vector<Weight>& samples, int d) {
    if (samples.empty()) throw std::invalid_argument("intersection_check: no samples");
    QMatrix acc;
    bool first = true;
    for (const auto& w : samples) {
        FilteredIdealSlice s = annihilator_slice(w, d);
        if (first) {
            acc = s.basis;
            first = false;
        } else {
            acc = subspace::intersect(acc, s.basis);
        }
        if (acc.cols() == 0) return 0;
    }
    return static_cast<int>(acc.cols());
}

}  // namespace scho
