#include "scho/blocks.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace scho {

using nlohmann::json;

BlockType block_type(const Weight& lambda) {
    if (lambda.zero_charge())
        return lambda.integral() ? BlockType::ZeroIntegral : BlockType::ZeroNonIntegral;
    if (lambda.integral()) return BlockType::NonzeroInteger;
    if (lambda.half_integral()) return BlockType::NonzeroHalfInteger;
    return BlockType::NonzeroGeneric;
}

std::string block_type_name(BlockType t) {
    switch (t) {
        case BlockType::NonzeroGeneric: return "NonzeroGeneric";
        case BlockType::NonzeroHalfInteger: return "NonzeroHalfInteger";
        case BlockType::NonzeroInteger: return "NonzeroInteger";
        case BlockType::ZeroNonIntegral: return "ZeroNonIntegral";
        case BlockType::ZeroIntegral: return "ZeroIntegral";
    }
    return "?";
}

namespace {

int arrow_index(QuiverPresentation& q, const std::string& name, int src, int dst) {
    q.arrows.push_back({name, src, dst});
    return static_cast<int>(q.arrows.size()) - 1;
}

}  // namespace

QuiverPresentation quiver_presentation(QuiverKind kind, int n) {
    if (n < 1) throw std::invalid_argument("quiver: need n >= 1");
    QuiverPresentation q;
    q.kind = kind;
    switch (kind) {
        case QuiverKind::Point:
            q.vertices = {1};
            break;
        case QuiverKind::TwoPoints:
            q.vertices = {1, 2};
            break;
        case QuiverKind::TwoVertexAbZero: {
            q.vertices = {1, 2};
            int a = arrow_index(q, "a", 1, 2);
            int b = arrow_index(q, "b", 2, 1);
            q.relations.push_back({{{Rational(1), {a, b}}}, "ab=0"});
            break;
        }
        case QuiverKind::InftyQ: {
            // vertices n-1, ..., 1, 0 with a toward 0, b away from 0
            for (int v = 0; v < n; ++v) q.vertices.push_back(v);
            std::map<int, int> a_from, b_from;  // arrows keyed by source vertex
            for (int v = 1; v < n; ++v) a_from[v] = arrow_index(q, "a", v, v - 1);
            for (int v = 0; v + 1 < n; ++v) b_from[v] = arrow_index(q, "b", v, v + 1);
            if (n >= 2)
                q.relations.push_back({{{Rational(1), {b_from[0], a_from[1]}}}, "ab=0"});
            for (int v = 1; v + 1 < n; ++v)
                q.relations.push_back({{{Rational(1), {a_from[v], b_from[v - 1]}},
                                        {Rational(-1), {b_from[v], a_from[v + 1]}}},
                                       "ab=ba"});
            break;
        }
        case QuiverKind::QInfty: {
            for (int v = 0; v < n; ++v) q.vertices.push_back(v);
            std::map<int, int> a_from, b_from;  // a away from 0, b toward 0
            for (int v = 0; v + 1 < n; ++v) a_from[v] = arrow_index(q, "a", v, v + 1);
            for (int v = 1; v < n; ++v) b_from[v] = arrow_index(q, "b", v, v - 1);
            if (n >= 2)
                q.relations.push_back({{{Rational(1), {a_from[0], b_from[1]}}}, "ba=0"});
            for (int v = 1; v + 1 < n; ++v)
                q.relations.push_back({{{Rational(1), {b_from[v], a_from[v - 1]}},
                                        {Rational(-1), {a_from[v], b_from[v + 1]}}},
                                       "ab=ba"});
            break;
        }
        case QuiverKind::Gamma: {
            // top row 0..n-1 (a right, b left), bottom row -1..-(n+1)
            // (b deeper, a back), verticals s: i -> -i-2 and t: -i-2 -> i.
            for (int v = 0; v < n; ++v) q.vertices.push_back(v);
            for (int v = -1; v >= -(n + 1); --v) q.vertices.push_back(v);
            for (int v = 0; v + 1 < n; ++v) {
                arrow_index(q, "a", v, v + 1);
                arrow_index(q, "b", v + 1, v);
            }
            for (int v = -1; v - 1 >= -(n + 1); --v) {
                arrow_index(q, "b", v, v - 1);
                arrow_index(q, "a", v - 1, v);
            }
            for (int v = 0; v < n; ++v) {
                arrow_index(q, "s", v, -v - 2);
                arrow_index(q, "t", -v - 2, v);
            }
            q.relations_known = false;
            break;
        }
    }
    return q;
}

QuiverPresentation quiver(BlockType t, int n) {
    switch (t) {
        case BlockType::NonzeroGeneric: return quiver_presentation(QuiverKind::Point, 1);
        case BlockType::NonzeroHalfInteger:
            return quiver_presentation(QuiverKind::TwoVertexAbZero, 2);
        case BlockType::NonzeroInteger: return quiver_presentation(QuiverKind::TwoPoints, 2);
        case BlockType::ZeroNonIntegral: return quiver_presentation(QuiverKind::InftyQ, n);
        case BlockType::ZeroIntegral: return quiver_presentation(QuiverKind::Gamma, n);
    }
    return quiver_presentation(QuiverKind::Point, 1);
}

std::string QuiverPresentation::dot() const {
    std::ostringstream os;
    os << "digraph block_quiver {\n";
    if (relations.empty()) {
        os << (relations_known ? "  // relations: none\n"
                               : "  // relations: unknown (not determined)\n");
    } else {
        os << "  // relations:";
        for (const auto& r : relations) os << ' ' << r.display;
        os << '\n';
    }
    os << "  rankdir=LR;\n";
    for (int v : vertices) os << "  \"" << v << "\";\n";
    for (const auto& a : arrows)
        os << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"" << a.name
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string QuiverPresentation::json() const {
    nlohmann::json j;
    j["vertices"] = vertices;
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : arrows)
        j["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
    j["relations_known"] = relations_known;
    j["relations"] = nlohmann::json::array();
    for (const auto& r : relations) {
        nlohmann::json jr;
        jr["display"] = r.display;
        jr["paths"] = nlohmann::json::array();
        for (const auto& [c, path] : r.paths)
            jr["paths"].push_back({{"coeff", to_string(c)}, {"arrows", path}});
        j["relations"].push_back(jr);
    }
    return j.dump();
}

BlockDescriptor classify(const Weight& lambda) {
    BlockDescriptor d;
    d.type = block_type(lambda);
    d.weight = lambda;
    d.dot_partner = lambda.dot_reflect();
    d.character = central_character(lambda);
    if (d.type == BlockType::NonzeroHalfInteger && lambda.h_val == Rational(-3, 2))
        d.quiver = quiver_presentation(QuiverKind::Point, 1);  // self-dot weight: simple block
    else
        d.quiver = quiver(d.type, kDefaultQuiverTruncation);
    if (!lambda.zero_charge()) {
        bool two = lambda.half_integral() && lambda.h_val != Rational(-3, 2);
        d.primitive_ideal_count = two ? 2 : 1;
    }
    return d;
}

std::string BlockDescriptor::json() const {
    nlohmann::json j;
    j["block_type"] = block_type_name(type);
    j["weight"] = {{"hw", to_string(weight.h_val)}, {"charge", to_string(weight.z_val)}};
    j["dot_partner"] = {{"hw", to_string(dot_partner.h_val)},
                        {"charge", to_string(dot_partner.z_val)}};
    j["central_character"] = {{"theta", to_string(character.theta)},
                              {"charge", to_string(character.charge)}};
    if (primitive_ideal_count)
        j["primitive_ideal_count"] = *primitive_ideal_count;
    else
        j["primitive_ideal_count"] = "unknown (zero charge)";
    j["quiver"] = nlohmann::json::parse(quiver.json());
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Truncated projectives at zero charge.
//
// Raw model: P_(k) = U-bar / U-bar (h - mu(h), p^(k+1), e^ceil((k+1)/2)) has
// exact basis {f^a q^b p^s e^t . 1 : s <= k, t < T}; the classes of these
// monomials are independent (PBW with h ordered last). Weights reach above
// lambda by up to 2T - 2; quotienting by the submodule generated by the
// above-lambda spaces leaves the projective representing N |-> N_mu on the
// supported-below-lambda category. Its indecomposable summand covering
// L(lambda - k) is split off with an exact idempotent of the grade-0
// endomorphism algebra, which is identified with the depth-k weight space.
// ---------------------------------------------------------------------------

namespace {

struct PkTuple {
    int a, b, s, t;
};

struct RawPk {
    TruncatedModule mod;                        // top = lambda + excess
    int excess = 0;                             // raw depth of the weight lambda
    std::vector<std::vector<PkTuple>> tuples;   // per raw depth
};

RawPk raw_projective(const Weight& lambda, int k, int D) {
    const Rational mu = lambda.h_val - k;
    const int T = (k + 2) / 2;  // ceil((k+1)/2)
    const int excess = 2 * T - 2;
    RawPk raw;
    raw.excess = excess;
    TruncatedModule& M = raw.mod;
    M.highest = Weight(lambda.h_val + excess, lambda.z_val);
    M.depth = D + excess;
    M.dims.resize(M.depth + 1);
    M.grade.resize(M.depth + 1);
    raw.tuples.resize(M.depth + 1);
    std::vector<std::map<std::array<int, 4>, int>> index(M.depth + 1);
    for (int r = 0; r <= M.depth; ++r) {
        int m = r - excess;  // depth below lambda
        for (int t = 0; t < T; ++t)
            for (int s = 0; s <= k; ++s) {
                int v = s + 2 * t - k + m;
                if (v < 0) continue;
                for (int a = 0; 2 * a <= v; ++a) {
                    int b = v - 2 * a;
                    index[r][{a, b, s, t}] = static_cast<int>(raw.tuples[r].size());
                    raw.tuples[r].push_back({a, b, s, t});
                    M.grade[r].push_back(b + s);
                }
            }
        M.dims[r] = static_cast<int>(raw.tuples[r].size());
    }
    for (int gi = 0; gi < kGenCount; ++gi) {
        Gen g = static_cast<Gen>(gi);
        M.act[gi].resize(M.depth + 1);
        for (int r = 0; r <= M.depth; ++r) {
            int tr = r + depth_offset(g);
            if (tr < 0 || tr > M.depth) continue;
            QMatrix A(M.dims[tr], M.dims[r]);
            for (std::size_t col = 0; col < raw.tuples[r].size(); ++col) {
                const PkTuple& tu = raw.tuples[r][col];
                PbwMonomial mono;
                mono.exp = {tu.a, tu.b, 0, 0, tu.s, tu.t};
                AlgebraElement moved = gen_mul(g, mono);
                for (const auto& [mm, c] : moved.terms()) {
                    if (mm.exp[static_cast<int>(Gen::z)] > 0) continue;  // z = 0
                    int s2 = mm.exp[static_cast<int>(Gen::p)];
                    int t2 = mm.exp[static_cast<int>(Gen::e)];
                    if (s2 > k || t2 >= T) continue;  // right factors in the ideal
                    Rational scal = c;
                    Rational hval = mu + s2 + 2 * t2;
                    for (int x = 0; x < mm.exp[static_cast<int>(Gen::h)]; ++x) scal *= hval;
                    auto it = index[tr].find(std::array<int, 4>{
                        mm.exp[static_cast<int>(Gen::f)], mm.exp[static_cast<int>(Gen::q)],
                        s2, t2});
                    if (it == index[tr].end())
                        throw std::logic_error("raw_projective: missing basis tuple");
                    A.at(it->second, col) += scal;
                }
            }
            M.act[gi][r] = std::move(A);
        }
    }
    return raw;
}

// Closure of the above-lambda spaces under all actions, kept per (depth, grade)
// so the quotient stays graded.
std::vector<QMatrix> above_top_closure(const RawPk& raw) {
    const TruncatedModule& M = raw.mod;
    std::map<std::pair<int, int>, QMatrix> span;  // (depth, grade) -> columns
    auto add_vectors = [&](int depth, int grade, const QMatrix& vecs) -> bool {
        if (vecs.cols() == 0 || vecs.is_zero()) return false;
        auto key = std::make_pair(depth, grade);
        auto it = span.find(key);
        if (it == span.end()) {
            QMatrix red = subspace::reduce(vecs);
            if (red.cols() == 0) return false;
            span.emplace(key, std::move(red));
            return true;
        }
        std::size_t before = it->second.cols();
        QMatrix merged = subspace::sum(it->second, vecs);
        if (merged.cols() == before) return false;
        it->second = std::move(merged);
        return true;
    };
    for (int r = 0; r < raw.excess; ++r)
        for (int c = 0; c < M.dims[r]; ++c) {
            QMatrix unit(M.dims[r], 1);
            unit.at(c, 0) = 1;
            add_vectors(r, M.grade[r][c], unit);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        // take a snapshot: add_vectors invalidates iteration
        std::vector<std::pair<std::pair<int, int>, QMatrix>> items(span.begin(), span.end());
        for (const auto& [key, vecs] : items) {
            auto [depth, grade] = key;
            for (int gi = 0; gi < kGenCount; ++gi) {
                Gen g = static_cast<Gen>(gi);
                int tr = depth + depth_offset(g);
                if (tr < 0 || tr > M.depth) continue;
                auto A = M.action(g, depth);
                if (!A) continue;
                changed |= add_vectors(tr, grade + grade_offset(g), *A * vecs);
            }
        }
    }
    std::vector<QMatrix> out(M.depth + 1);
    for (int r = 0; r <= M.depth; ++r) out[r] = QMatrix(M.dims[r], 0);
    for (const auto& [key, vecs] : span) out[key.first] = out[key.first].augmented(vecs);
    return out;
}

TruncatedModule rebase_to_top(const TruncatedModule& M, int drop) {
    for (int r = 0; r < drop; ++r)
        if (M.dims[r] != 0)
            throw std::logic_error("rebase_to_top: nonzero space above the new top");
    TruncatedModule out;
    out.highest = Weight(M.highest.h_val - drop, M.highest.z_val);
    out.depth = M.depth - drop;
    out.dims.assign(M.dims.begin() + drop, M.dims.end());
    if (!M.labels.empty()) out.labels.assign(M.labels.begin() + drop, M.labels.end());
    if (M.graded()) out.grade.assign(M.grade.begin() + drop, M.grade.end());
    for (int gi = 0; gi < kGenCount; ++gi) {
        out.act[gi].resize(out.depth + 1);
        for (int r = 0; r <= out.depth; ++r) {
            int tr = r + depth_offset(static_cast<Gen>(gi));
            if (tr < 0 || tr > out.depth) continue;
            const auto& stored = M.act[gi][r + drop];
            if (stored) out.act[gi][r] = *stored;
        }
    }
    return out;
}

// Multiplication on End(P) for cyclic graded P: each depth-k basis vector
// carries a representative monomial; x . y applies y's representative to x.
struct EndAlgebra {
    const TruncatedModule* P = nullptr;
    int gen_depth = 0;                  // depth of the weight-mu space
    std::vector<int> basis_cols;        // grade-0 columns of the depth-k space
    std::vector<PbwMonomial> reps;      // representative monomials per column

    std::vector<Rational> embed(const std::vector<Rational>& coords) const {
        std::vector<Rational> v(P->dim(gen_depth), Rational(0));
        for (std::size_t i = 0; i < basis_cols.size(); ++i) v[basis_cols[i]] = coords[i];
        return v;
    }
    std::vector<Rational> restrict_grade0(const std::vector<Rational>& full) const {
        std::vector<Rational> out(basis_cols.size());
        for (std::size_t i = 0; i < basis_cols.size(); ++i) out[i] = full[basis_cols[i]];
        return out;
    }
    // (T_x o T_y)(1) = u_y . x
    std::vector<Rational> mult(const std::vector<Rational>& x,
                               const std::vector<Rational>& y) const {
        std::vector<Rational> full_x = embed(x);
        std::vector<Rational> acc(P->dim(gen_depth), Rational(0));
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (y[j] == 0) continue;
            int sp = 0;
            std::vector<Rational> part = P->apply_monomial(reps[j], gen_depth, full_x, sp);
            assert(sp == gen_depth);
            for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += y[j] * part[r];
        }
        return restrict_grade0(acc);
    }
};

PbwMonomial tuple_monomial(const PkTuple& t) {
    PbwMonomial m;
    m.exp = {t.a, t.b, 0, 0, t.s, t.t};
    return m;
}

}  // namespace

TruncatedModule truncated_projective(const Weight& lambda, int k, int D) {
    if (!lambda.zero_charge())
        throw std::invalid_argument(
            "truncated_projective: nonzero charge (blocks there are settled by Verma data)");
    if (k < 0 || D < k) throw std::invalid_argument("truncated_projective: need 0 <= k <= D");

    RawPk raw = raw_projective(lambda, k, D);
    std::vector<QMatrix> above = above_top_closure(raw);
    TruncatedModule cut = quotient_module(raw.mod, above);
    TruncatedModule P = rebase_to_top(cut, raw.excess);

    // carry tuple bookkeeping through the quotient: quotient basis vectors are
    // original monomial classes, recover them by position
    std::vector<std::vector<PkTuple>> kept(P.depth + 1);
    {
        // recompute kept indices exactly as quotient_module chose them
        for (int r = 0; r <= raw.mod.depth; ++r) {
            QMatrix t = above[r].transposed();
            std::vector<std::size_t> pivots = t.rref();
            std::vector<bool> is_pivot(raw.mod.dims[r], false);
            for (auto p : pivots) is_pivot[p] = true;
            if (r < raw.excess) continue;
            for (std::size_t jj = 0; jj < raw.tuples[r].size(); ++jj)
                if (!is_pivot[jj]) kept[r - raw.excess].push_back(raw.tuples[r][jj]);
        }
        for (int r = 0; r <= P.depth; ++r)
            if (static_cast<int>(kept[r].size()) != P.dims[r])
                throw std::logic_error("truncated_projective: basis bookkeeping mismatch");
    }

    // Is the cover already indecomposable? Spurious top pieces live at weights
    // strictly above mu: Hom(P, L(lambda - j)) = L(lambda - j)_(depth k - j).
    std::vector<int> cover_js;
    std::vector<TruncatedModule> simples;
    for (int j = 0; j <= k; ++j) {
        std::vector<int> ch = simple_character(lambda.below(j), k - j);
        if (ch[k - j] > 0) {
            if (ch[k - j] != 1)
                throw std::logic_error("truncated_projective: unexpected top multiplicity");
            cover_js.push_back(j);
            simples.push_back(simple_module(lambda.below(j), k - j));
        }
    }
    if (cover_js.size() == 1 && cover_js[0] == k) return P;

    // Grade-0 endomorphisms = grade-0 part of the depth-k space.
    EndAlgebra E;
    E.P = &P;
    E.gen_depth = k;
    for (int c = 0; c < P.dims[k]; ++c)
        if (P.grade[k][c] == 0) {
            E.basis_cols.push_back(c);
            E.reps.push_back(tuple_monomial(kept[k][c]));
        }
    std::size_t n = E.basis_cols.size();

    // theta_j(T_w): scalar of phi_j o T_w against phi_j, evaluated on the
    // 1-dimensional space L(lambda - j)_(k - j).
    QMatrix theta(cover_js.size(), n);
    for (std::size_t ji = 0; ji < cover_js.size(); ++ji) {
        const TruncatedModule& L = simples[ji];
        int ld = k - cover_js[ji];
        if (L.dim(ld) != 1) throw std::logic_error("truncated_projective: bad simple model");
        std::vector<Rational> unit(1, Rational(1));
        for (std::size_t c = 0; c < n; ++c) {
            int sp = 0;
            std::vector<Rational> img = L.apply_monomial(E.reps[c], ld, unit, sp);
            assert(sp == ld && img.size() == 1);
            theta.at(ji, c) = img[0];
        }
    }
    QMatrix rhs(cover_js.size(), 1);
    for (std::size_t ji = 0; ji < cover_js.size(); ++ji)
        rhs.at(ji, 0) = (cover_js[ji] == k) ? 1 : 0;
    QMatrix x0;
    if (!theta.solve(rhs, x0))
        throw std::logic_error("truncated_projective: top characters not independent");

    std::vector<Rational> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = x0.at(i, 0);
    for (int iter = 0; iter < 64; ++iter) {
        std::vector<Rational> sq = E.mult(eps, eps);
        bool idempotent = true;
        for (std::size_t i = 0; i < n; ++i)
            if (sq[i] != eps[i]) idempotent = false;
        if (idempotent) break;
        // eps <- 3 eps^2 - 2 eps^3
        std::vector<Rational> cube = E.mult(sq, eps);
        for (std::size_t i = 0; i < n; ++i) eps[i] = 3 * sq[i] - 2 * cube[i];
        if (iter == 63) throw std::logic_error("truncated_projective: idempotent lift failed");
    }

    // image of T_eps, columns per (depth, grade) to preserve grading
    std::vector<Rational> eps_full = E.embed(eps);
    std::vector<QMatrix> image(P.depth + 1);
    for (int r = 0; r <= P.depth; ++r) {
        std::map<int, std::vector<std::vector<Rational>>> by_grade;
        for (int c = 0; c < P.dims[r]; ++c) {
            int sp = 0;
            std::vector<Rational> img =
                P.apply_monomial(tuple_monomial(kept[r][c]), k, eps_full, sp);
            assert(sp == r);
            by_grade[P.grade[r][c]].push_back(std::move(img));
        }
        QMatrix cols(P.dims[r], 0);
        for (auto& [g, vecs] : by_grade) {
            QMatrix m(P.dims[r], vecs.size());
            for (std::size_t c = 0; c < vecs.size(); ++c)
                for (int row = 0; row < P.dims[r]; ++row) m.at(row, c) = vecs[c][row];
            cols = cols.augmented(subspace::reduce(m));
        }
        image[r] = std::move(cols);
    }
    return submodule(P, image);
}

int ext1(const Weight& lambda, int i, int j, int D) {
    if (i == j) return 0;  // no-loop assumption, recorded, not proved
    if (j < i) return ext1(lambda, j, i, D);  // duality swap
    int gap = j - i;
    if (D < gap + kHomWindowMargin + 2)
        throw std::invalid_argument("ext1: insufficient depth for this index gap");
    Weight mu = lambda.below(i), nu = lambda.below(j);
    TruncatedModule K = gram_radical_module(mu, D);
    TruncatedModule L = simple_module(nu, D - gap);
    return module_hom(K, L).dim;
}

bool bgg_check(const Weight& lambda, int k, int D) {
    if (!lambda.zero_charge()) throw std::invalid_argument("bgg_check: zero charge only");
    if (k < 0 || 2 * k > D) throw std::invalid_argument("bgg_check: need 2k <= D");
    TruncatedModule P = truncated_projective(lambda, k, D);
    int jmax = D / 2;
    std::vector<long> residual(P.depth + 1);
    for (int m = 0; m <= P.depth; ++m) residual[m] = P.dims[m];
    std::vector<long> flag(jmax + 1, 0);
    for (int jj = 0; jj <= jmax; ++jj) {
        long njj = residual[jj];
        if (njj < 0) return false;
        flag[jj] = njj;
        if (njj != 0)
            for (int m = jj; m <= P.depth; ++m) residual[m] -= njj * ((m - jj) / 2 + 1);
    }
    for (int jj = 0; jj <= jmax; ++jj) {
        long expected = 0;
        if (jj <= k) {
            auto mults = composition_multiplicities(lambda.below(jj), D - jj);
            auto it = mults.find(k - jj);
            if (it == mults.end())
                throw std::logic_error("bgg_check: multiplicity out of reported range");
            expected = it->second;
        }
        if (flag[jj] != expected) return false;
    }
    return true;
}

FindimTable findim_projective(int i, int D) {
    if (i < 0 || D < 0) throw std::invalid_argument("findim_projective: need i, D >= 0");
    FindimTable out;
    out.i = i;
    for (int j = 0; j <= D; ++j) {
        // character of L(lambda_j) (x) L(lambda_i) decomposed greedily
        std::map<int, long> weights;
        for (int wj = -j; wj <= j; wj += 2)
            for (int wi = -i; wi <= i; wi += 2) ++weights[wj + wi];
        long total = 0;
        for (auto& [w, m] : weights) total += m;
        out.dims.push_back(total);
        std::vector<int> comps;
        while (!weights.empty()) {
            int top = weights.rbegin()->first;
            comps.push_back(top);
            for (int w = -top; w <= top; w += 2) {
                auto it = weights.find(w);
                if (it == weights.end() || it->second == 0)
                    throw std::logic_error("findim_projective: character not a simple sum");
                if (--it->second == 0) weights.erase(it);
            }
        }
        std::sort(comps.begin(), comps.end());
        out.components.push_back(std::move(comps));
    }
    return out;
}

std::string FindimTable::json() const {
    nlohmann::json j;
    j["i"] = i;
    j["dims"] = dims;
    j["components"] = components;
    return j.dump();
}

}  // namespace scho
