#include "scho/module.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace scho {

int depth_offset(Gen g) {
    switch (g) {
        case Gen::f: return 2;
        case Gen::q: return 1;
        case Gen::h: return 0;
        case Gen::z: return 0;
        case Gen::p: return -1;
        case Gen::e: return -2;
    }
    return 0;
}

int grade_offset(Gen g) {
    return (g == Gen::q || g == Gen::p) ? 1 : 0;
}

std::optional<QMatrix> TruncatedModule::action(Gen g, int i) const {
    if (i < 0 || i > depth) return std::nullopt;
    int t = i + depth_offset(g);
    if (t < 0) return QMatrix(0, dims[i]);  // genuine zero space above the top
    if (t > depth) return std::nullopt;     // truncated lowering map
    const auto& stored = act[static_cast<int>(g)][i];
    if (stored) return stored;
    return std::nullopt;
}

std::vector<Rational> TruncatedModule::apply_monomial(const PbwMonomial& m, int i,
                                                      const std::vector<Rational>& v,
                                                      int& out_space) const {
    int target = i - m.h_weight();
    out_space = target;
    std::vector<Rational> cur = v;
    int space = i;
    for (int slot = kGenCount - 1; slot >= 0; --slot) {
        Gen g = static_cast<Gen>(slot);
        for (int k = 0; k < m.exp[slot]; ++k) {
            if (space + depth_offset(g) < 0)  // passes above the top: zero
                return std::vector<Rational>(dim(target), Rational(0));
            auto A = action(g, space);
            if (!A) throw std::out_of_range("apply_monomial: truncated action needed");
            cur = A->apply(cur);
            space += depth_offset(g);
            if (cur.empty())  // landed in a zero space
                return std::vector<Rational>(dim(target), Rational(0));
        }
    }
    return cur;
}

std::vector<Rational> TruncatedModule::apply_element(const AlgebraElement& u, int i,
                                                     const std::vector<Rational>& v,
                                                     int& out_space) const {
    int w = 0;
    if (!u.weight_homogeneous(w))
        throw std::invalid_argument("apply_element: weight-inhomogeneous element");
    int space = i - w;  // h-weight w raises by w
    std::vector<Rational> out(dim(space), Rational(0));
    for (const auto& [m, c] : u.terms()) {
        int sp = 0;
        std::vector<Rational> part = apply_monomial(m, i, v, sp);
        if (sp != space) throw std::logic_error("apply_element: inconsistent target space");
        for (std::size_t r = 0; r < part.size(); ++r) out[r] += c * part[r];
    }
    out_space = space;
    return out;
}

namespace {

// Basis of Verma depth i: pairs (a, b) with 2a + b = i, a ascending.
std::vector<std::pair<int, int>> verma_basis(int i) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; 2 * a <= i; ++a) out.push_back({a, i - 2 * a});
    return out;
}

int verma_index(int a, int b) {
    (void)b;
    return a;  // position of (a, b) within depth 2a+b
}

}  // namespace

TruncatedModule verma(const Weight& lambda, int D) {
    if (D < 0) throw std::invalid_argument("verma: negative depth");
    TruncatedModule M;
    M.highest = lambda;
    M.depth = D;
    M.dims.resize(D + 1);
    for (int i = 0; i <= D; ++i) M.dims[i] = i / 2 + 1;
    M.labels.resize(D + 1);
    bool graded = lambda.zero_charge();
    if (graded) M.grade.resize(D + 1);
    for (int i = 0; i <= D; ++i) {
        for (auto [a, b] : verma_basis(i)) {
            std::string lab;
            if (a > 0) lab += "f" + (a > 1 ? "^" + std::to_string(a) : std::string()) + " ";
            if (b > 0) lab += "q" + (b > 1 ? "^" + std::to_string(b) : std::string()) + " ";
            lab += "v";
            M.labels[i].push_back(lab);
            if (graded) M.grade[i].push_back(b);
        }
    }
    for (int gi = 0; gi < kGenCount; ++gi) {
        Gen g = static_cast<Gen>(gi);
        M.act[gi].resize(D + 1);
        for (int i = 0; i <= D; ++i) {
            int t = i + depth_offset(g);
            if (t < 0 || t > D) continue;
            QMatrix A(M.dims[t], M.dims[i]);
            auto basis = verma_basis(i);
            for (std::size_t col = 0; col < basis.size(); ++col) {
                auto [a, b] = basis[col];
                PbwMonomial m;
                m.exp[static_cast<int>(Gen::f)] = a;
                m.exp[static_cast<int>(Gen::q)] = b;
                AlgebraElement moved = gen_mul(g, m);
                for (const auto& [mono, c] : moved.terms()) {
                    if (mono.exp[static_cast<int>(Gen::p)] > 0 ||
                        mono.exp[static_cast<int>(Gen::e)] > 0)
                        continue;  // kills the highest weight vector
                    Rational scal = c;
                    for (int k = 0; k < mono.exp[static_cast<int>(Gen::h)]; ++k)
                        scal *= lambda.h_val;
                    for (int k = 0; k < mono.exp[static_cast<int>(Gen::z)]; ++k)
                        scal *= lambda.z_val;
                    int aa = mono.exp[static_cast<int>(Gen::f)];
                    int bb = mono.exp[static_cast<int>(Gen::q)];
                    assert(2 * aa + bb == t);
                    A.at(verma_index(aa, bb), col) += scal;
                }
            }
            M.act[gi][i] = std::move(A);
        }
    }
    return M;
}

GramForm contravariant_forms(const Weight& lambda, int D) {
    TruncatedModule M = verma(lambda, D);
    std::vector<QMatrix> forms;
    forms.reserve(D + 1);
    for (int i = 0; i <= D; ++i) {
        auto basis = verma_basis(i);
        QMatrix B(basis.size(), basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            std::vector<Rational> unit(basis.size(), Rational(0));
            unit[col] = 1;
            for (std::size_t row = 0; row < basis.size(); ++row) {
                auto [a, b] = basis[row];
                // sigma(f^a q^b) = (-1)^a p^b e^a applied inside the module
                PbwMonomial m;
                m.exp[static_cast<int>(Gen::p)] = b;
                m.exp[static_cast<int>(Gen::e)] = a;
                int sp = 0;
                std::vector<Rational> res = M.apply_monomial(m, i, unit, sp);
                assert(sp == 0 && res.size() == 1);
                B.at(row, col) = (a % 2 == 0) ? res[0] : -res[0];
            }
        }
        forms.push_back(std::move(B));
    }
    return forms;
}

QMatrix contravariant_form(const Weight& lambda, int i) {
    if (i < 0) throw std::out_of_range("contravariant_form: negative depth");
    return contravariant_forms(lambda, i).back();
}

QMatrix singular_vectors(const TruncatedModule& M, int i) {
    if (i < 0 || i > M.depth) throw std::out_of_range("singular_vectors: depth out of range");
    auto E = M.action(Gen::e, i);
    auto P = M.action(Gen::p, i);
    if (!E || !P) throw std::out_of_range("singular_vectors: raising maps unavailable");
    return E->stacked(*P).kernel();
}

std::vector<int> simple_character(const Weight& lambda, int D) {
    std::vector<QMatrix> forms = contravariant_forms(lambda, D);
    std::vector<int> dims;
    dims.reserve(D + 1);
    for (const auto& B : forms) dims.push_back(static_cast<int>(B.rank()));
    return dims;
}

std::vector<int> verma_character(int D) {
    std::vector<int> out(D + 1);
    for (int i = 0; i <= D; ++i) out[i] = i / 2 + 1;
    return out;
}

std::map<int, int> composition_multiplicities(const Weight& lambda, int D) {
    int kmax = D / 2;
    std::vector<int> residual = verma_character(D);
    std::map<int, int> mult;
    for (int k = 0; k <= kmax; ++k) {
        int m = residual[k];
        if (m < 0) throw std::logic_error("composition_multiplicities: negative residual");
        mult[k] = m;
        if (m != 0) {
            std::vector<int> chL = simple_character(lambda.below(k), D - k);
            for (int i = k; i <= D; ++i) residual[i] -= m * chL[i - k];
        }
    }
    return mult;
}

int verma_hom(const Weight& mu, const Weight& lambda, int D) {
    if (mu.z_val != lambda.z_val) return 0;
    Rational diff = lambda.h_val - mu.h_val;
    if (!is_integer(diff)) return 0;
    long k = floor_long(diff);
    if (k < 0) return 0;
    if (k > D) throw std::out_of_range("verma_hom: depth too small for this weight gap");
    TruncatedModule M = verma(lambda, static_cast<int>(k));
    return static_cast<int>(singular_vectors(M, static_cast<int>(k)).cols());
}

TruncatedModule dual_module(const TruncatedModule& M) {
    TruncatedModule out;
    out.highest = M.highest;
    out.depth = M.depth;
    out.dims = M.dims;
    for (int gi = 0; gi < kGenCount; ++gi) out.act[gi].resize(M.depth + 1);
    for (int i = 0; i <= M.depth; ++i) {
        // (x g)(v) = g(sigma(x) v): each action is the transpose of the
        // sigma-image's action into this space.
        if (i - 2 >= 0) {  // e on dual space i uses f : M_{i-2} -> M_i
            auto F = M.action(Gen::f, i - 2);
            if (F) out.act[static_cast<int>(Gen::e)][i] = F->transposed().negated();
        }
        if (i - 1 >= 0) {
            auto Q = M.action(Gen::q, i - 1);
            if (Q) out.act[static_cast<int>(Gen::p)][i] = Q->transposed();
        }
        if (i + 2 <= M.depth) {
            auto E = M.action(Gen::e, i + 2);
            if (E) out.act[static_cast<int>(Gen::f)][i] = E->transposed().negated();
        }
        if (i + 1 <= M.depth) {
            auto P = M.action(Gen::p, i + 1);
            if (P) out.act[static_cast<int>(Gen::q)][i] = P->transposed();
        }
        auto H = M.action(Gen::h, i);
        if (H) out.act[static_cast<int>(Gen::h)][i] = H->transposed();
        auto Z = M.action(Gen::z, i);
        if (Z) out.act[static_cast<int>(Gen::z)][i] = Z->transposed();
    }
    return out;
}

namespace {

int column_grade(const QMatrix& span, std::size_t col, const std::vector<int>& grades) {
    int g = -1;
    for (std::size_t r = 0; r < span.rows(); ++r) {
        if (span.at(r, col) == 0) continue;
        if (g == -1)
            g = grades[r];
        else if (g != grades[r])
            throw std::logic_error("submodule: grade-impure spanning vector");
    }
    return g;
}

}  // namespace

TruncatedModule submodule(const TruncatedModule& M, const std::vector<QMatrix>& span) {
    assert(static_cast<int>(span.size()) == M.depth + 1);
    TruncatedModule out;
    out.highest = M.highest;
    out.depth = M.depth;
    out.dims.resize(M.depth + 1);
    for (int i = 0; i <= M.depth; ++i) out.dims[i] = static_cast<int>(span[i].cols());
    if (M.graded()) {
        out.grade.resize(M.depth + 1);
        for (int i = 0; i <= M.depth; ++i)
            for (std::size_t c = 0; c < span[i].cols(); ++c) {
                int g = column_grade(span[i], c, M.grade[i]);
                out.grade[i].push_back(g == -1 ? 0 : g);
            }
    }
    for (int gi = 0; gi < kGenCount; ++gi) {
        Gen g = static_cast<Gen>(gi);
        out.act[gi].resize(M.depth + 1);
        for (int i = 0; i <= M.depth; ++i) {
            int t = i + depth_offset(g);
            if (t < 0 || t > M.depth) continue;
            auto A = M.action(g, i);
            if (!A) continue;
            QMatrix rhs = *A * span[i];
            QMatrix X;
            if (!span[t].solve(rhs, X))
                throw std::logic_error("submodule: spanning subspaces not action-stable");
            out.act[gi][i] = std::move(X);
        }
    }
    return out;
}

TruncatedModule quotient_module(const TruncatedModule& M, const std::vector<QMatrix>& span) {
    assert(static_cast<int>(span.size()) == M.depth + 1);
    TruncatedModule out;
    out.highest = M.highest;
    out.depth = M.depth;
    out.dims.resize(M.depth + 1);
    std::vector<QMatrix> proj(M.depth + 1), emb(M.depth + 1);
    bool carry_labels = !M.labels.empty();
    if (carry_labels) out.labels.resize(M.depth + 1);
    if (M.graded()) out.grade.resize(M.depth + 1);
    for (int i = 0; i <= M.depth; ++i) {
        std::size_t n = M.dims[i];
        QMatrix t = span[i].transposed();
        std::vector<std::size_t> pivots = t.rref();
        std::vector<bool> is_pivot(n, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_pivot[j]) keep.push_back(j);
        out.dims[i] = static_cast<int>(keep.size());
        // reduce a vector by the echelonized span, then read off kept coords
        proj[i] = QMatrix(keep.size(), n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> v(n, Rational(0));
            v[j] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                Rational f = v[pivots[r]];
                if (f == 0) continue;
                for (std::size_t cidx = 0; cidx < n; ++cidx) v[cidx] -= f * t.at(r, cidx);
            }
            for (std::size_t kk = 0; kk < keep.size(); ++kk) proj[i].at(kk, j) = v[keep[kk]];
        }
        emb[i] = QMatrix(n, keep.size());
        for (std::size_t kk = 0; kk < keep.size(); ++kk) emb[i].at(keep[kk], kk) = 1;
        if (carry_labels && i < static_cast<int>(M.labels.size()) && !M.labels[i].empty())
            for (auto j : keep) out.labels[i].push_back(M.labels[i][j]);
        if (M.graded())
            for (auto j : keep) out.grade[i].push_back(M.grade[i][j]);
    }
    for (int gi = 0; gi < kGenCount; ++gi) {
        Gen g = static_cast<Gen>(gi);
        out.act[gi].resize(M.depth + 1);
        for (int i = 0; i <= M.depth; ++i) {
            int t = i + depth_offset(g);
            if (t < 0 || t > M.depth) continue;
            auto A = M.action(g, i);
            if (!A) continue;
            out.act[gi][i] = proj[t] * (*A * emb[i]);
        }
    }
    return out;
}

TruncatedModule gram_radical_module(const Weight& lambda, int D) {
    TruncatedModule M = verma(lambda, D);
    std::vector<QMatrix> forms = contravariant_forms(lambda, D);
    std::vector<QMatrix> rad(D + 1);
    for (int i = 0; i <= D; ++i) rad[i] = forms[i].kernel();
    return submodule(M, rad);
}

TruncatedModule simple_module(const Weight& lambda, int D) {
    TruncatedModule M = verma(lambda, D);
    std::vector<QMatrix> forms = contravariant_forms(lambda, D);
    std::vector<QMatrix> rad(D + 1);
    for (int i = 0; i <= D; ++i) rad[i] = forms[i].kernel();
    return quotient_module(M, rad);
}

HomResult module_hom(const TruncatedModule& M, const TruncatedModule& N,
                     std::optional<int> grade_raise, std::optional<int> window) {
    HomResult res;
    if (M.highest.z_val != N.highest.z_val) return res;
    Rational diff = N.highest.h_val - M.highest.h_val;
    if (!is_integer(diff)) return res;
    // M_i has weight M.h - i = N.h - (i + s), so s = N.h - M.h.
    int s = static_cast<int>(floor_long(diff));
    res.shift = s;
    int i_lo = std::max(0, -s);
    int i_hi = std::min(M.depth, N.depth - s);
    if (i_lo > i_hi) return res;
    bool graded_filter = grade_raise.has_value() && M.graded() && N.graded();

    // variable layout
    struct Block {
        int offset = -1;
        int rows = 0, cols = 0;
        std::vector<int> var;  // var index per entry, -1 for grade-suppressed
    };
    std::vector<Block> blocks(i_hi - i_lo + 1);
    int nvars = 0;
    for (int i = i_lo; i <= i_hi; ++i) {
        Block& b = blocks[i - i_lo];
        b.rows = N.dim(i + s);
        b.cols = M.dim(i);
        b.offset = nvars;
        b.var.assign(b.rows * b.cols, -1);
        for (int r = 0; r < b.rows; ++r)
            for (int c = 0; c < b.cols; ++c) {
                if (graded_filter &&
                    N.grade[i + s][r] != M.grade[i][c] + *grade_raise)
                    continue;
                b.var[r * b.cols + c] = nvars++;
            }
    }
    if (nvars == 0) return res;

    enum class State { Var, Zero, Skip };
    auto state = [&](int i) {
        if (i < 0 || i + s < 0) return State::Zero;
        if (i > M.depth || i + s > N.depth) return State::Skip;
        return State::Var;
    };
    auto var_at = [&](int i, int r, int c) -> int {
        const Block& b = blocks[i - i_lo];
        return b.var[r * b.cols + c];
    };

    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (int gi = 0; gi < kGenCount; ++gi) {
        Gen g = static_cast<Gen>(gi);
        int d = depth_offset(g);
        for (int i = i_lo; i <= i_hi; ++i) {
            State st = state(i + d);
            if (st == State::Skip) continue;
            auto AM = M.action(g, i);
            if (!AM) continue;
            std::optional<QMatrix> AN =
                (i + s < 0) ? std::optional<QMatrix>(QMatrix(0, 0)) : N.action(g, i + s);
            if (!AN) continue;
            int target_rows = N.dim(i + d + s);
            int src_cols = M.dim(i);
            if (target_rows == 0 || src_cols == 0) continue;
            // T_{i+d} * AM - AN * T_i = 0, entry (r, c)
            for (int r = 0; r < target_rows; ++r)
                for (int c = 0; c < src_cols; ++c) {
                    std::vector<std::pair<int, Rational>> row;
                    if (st == State::Var) {
                        for (int k = 0; k < M.dim(i + d); ++k) {
                            const Rational& a = AM->at(k, c);
                            if (a == 0) continue;
                            int v = var_at(i + d, r, k);
                            if (v >= 0) row.push_back({v, a});
                        }
                    }
                    for (int k = 0; k < N.dim(i + s); ++k) {
                        const Rational& a = AN->at(r, k);
                        if (a == 0) continue;
                        int v = var_at(i, k, c);
                        if (v >= 0) row.push_back({v, -a});
                    }
                    if (!row.empty()) rows.push_back(std::move(row));
                }
        }
    }

    QMatrix sys(rows.size(), nvars);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [v, c] : rows[r]) sys.at(r, v) += c;
    QMatrix ker = rows.empty() ? QMatrix::identity(nvars) : sys.kernel();
    res.full_dim = static_cast<int>(ker.cols());

    int w = window ? *window : i_hi - kHomWindowMargin;
    if (w < i_lo) w = i_hi;
    if (w > i_hi) w = i_hi;
    res.window = w;

    std::vector<int> window_vars;
    for (int i = i_lo; i <= w; ++i) {
        const Block& b = blocks[i - i_lo];
        for (int v : b.var)
            if (v >= 0) window_vars.push_back(v);
    }
    QMatrix restricted(window_vars.size(), ker.cols());
    for (std::size_t r = 0; r < window_vars.size(); ++r)
        for (std::size_t c2 = 0; c2 < ker.cols(); ++c2)
            restricted.at(r, c2) = ker.at(window_vars[r], c2);
    QMatrix basis = restricted.column_space();
    res.dim = static_cast<int>(basis.cols());

    for (std::size_t k = 0; k < basis.cols(); ++k) {
        std::vector<QMatrix> maps(w - i_lo + 1);
        std::size_t pos = 0;
        for (int i = i_lo; i <= w; ++i) {
            const Block& b = blocks[i - i_lo];
            QMatrix T(b.rows, b.cols);
            for (int r = 0; r < b.rows; ++r)
                for (int c = 0; c < b.cols; ++c)
                    if (b.var[r * b.cols + c] >= 0) T.at(r, c) = basis.at(pos++, k);
            maps[i - i_lo] = std::move(T);
        }
        res.maps.push_back(std::move(maps));
    }
    return res;
}

TruncatedModule tensor_findim(const TruncatedModule& M, int n) {
    if (n < 1) throw std::invalid_argument("tensor_findim: n must be >= 1");
    TruncatedModule T;
    T.highest = Weight(M.highest.h_val + (n - 1), M.highest.z_val);
    T.depth = M.depth;
    T.dims.resize(T.depth + 1);
    // component (j, d): V basis vector w_j (weight n-1-2j) tensor M depth d,
    // sitting at tensor depth 2j + d; ordered by j ascending.
    auto components = [&](int i) {
        std::vector<std::pair<int, int>> out;
        for (int j = 0; j < n; ++j) {
            int d = i - 2 * j;
            if (d >= 0 && d <= M.depth) out.push_back({j, d});
        }
        return out;
    };
    std::vector<std::vector<std::pair<int, int>>> comp(T.depth + 1);
    std::vector<std::vector<int>> comp_offset(T.depth + 1);
    for (int i = 0; i <= T.depth; ++i) {
        comp[i] = components(i);
        int off = 0;
        for (auto [j, d] : comp[i]) {
            comp_offset[i].push_back(off);
            off += M.dim(d);
        }
        T.dims[i] = off;
    }
    if (M.graded()) {
        T.grade.resize(T.depth + 1);
        for (int i = 0; i <= T.depth; ++i)
            for (auto [j, d] : comp[i])
                for (int r = 0; r < M.dim(d); ++r) T.grade[i].push_back(M.grade[d][r]);
    }
    auto offset_of = [&](int i, int j) -> int {
        for (std::size_t k = 0; k < comp[i].size(); ++k)
            if (comp[i][k].first == j) return comp_offset[i][k];
        return -1;
    };
    // sl2 action on V: h w_j = (n-1-2j) w_j, e w_j = j(n-j) w_{j-1}, f w_j = w_{j+1}
    for (int gi = 0; gi < kGenCount; ++gi) {
        Gen g = static_cast<Gen>(gi);
        T.act[gi].resize(T.depth + 1);
        for (int i = 0; i <= T.depth; ++i) {
            int t = i + depth_offset(g);
            if (t < 0 || t > T.depth) continue;
            bool ok = true;
            QMatrix A(T.dims[t], T.dims[i]);
            for (std::size_t k = 0; k < comp[i].size() && ok; ++k) {
                auto [j, d] = comp[i][k];
                int src = comp_offset[i][k];
                // action through M (every generator)
                int dt = d + depth_offset(g);
                if (dt >= 0) {
                    auto AM = M.action(g, d);
                    if (!AM) {
                        ok = false;
                        break;
                    }
                    int dst = offset_of(t, j);
                    if (dt <= M.depth && dst >= 0)
                        for (std::size_t r = 0; r < AM->rows(); ++r)
                            for (int c = 0; c < M.dim(d); ++c)
                                A.at(dst + r, src + c) += AM->at(r, c);
                }
                // action through V (e, f, h only; p, q, z kill V)
                if (g == Gen::e && j >= 1) {
                    int dst = offset_of(t, j - 1);
                    if (dst >= 0) {
                        Rational c(static_cast<long>(j) * (n - j));
                        for (int r = 0; r < M.dim(d); ++r) A.at(dst + r, src + r) += c;
                    }
                }
                if (g == Gen::f && j + 1 < n) {
                    int dst = offset_of(t, j + 1);
                    if (dst >= 0)
                        for (int r = 0; r < M.dim(d); ++r) A.at(dst + r, src + r) += 1;
                }
                if (g == Gen::h) {
                    int dst = offset_of(t, j);
                    Rational c(n - 1 - 2 * j);
                    if (dst >= 0)
                        for (int r = 0; r < M.dim(d); ++r) A.at(dst + r, src + r) += c;
                }
            }
            if (ok) T.act[gi][i] = std::move(A);
        }
    }
    return T;
}

std::map<int, std::vector<int>> graded_character(const TruncatedModule& M) {
    std::map<int, std::vector<int>> out;
    if (!M.graded()) return out;
    for (int i = 0; i <= M.depth; ++i)
        for (int r = 0; r < M.dims[i]; ++r) {
            auto& layer = out[M.grade[i][r]];
            if (layer.empty()) layer.assign(M.depth + 1, 0);
            ++layer[i];
        }
    return out;
}

bool verify_module_relations(const TruncatedModule& M, std::string* msg) {
    auto fail = [&](const std::string& m) {
        if (msg) *msg = m;
        return false;
    };
    for (int i = 0; i <= M.depth; ++i) {
        // h and z must act by the expected scalars
        auto H = M.action(Gen::h, i);
        if (H) {
            Rational expect = M.highest.h_val - i;
            QMatrix want = QMatrix::identity(M.dim(i)).scaled(expect);
            if (!(*H == want)) return fail("h does not act by the weight scalar at depth " +
                                           std::to_string(i));
        }
        auto Z = M.action(Gen::z, i);
        if (Z) {
            QMatrix want = QMatrix::identity(M.dim(i)).scaled(M.highest.z_val);
            if (!(*Z == want))
                return fail("z does not act by the charge at depth " + std::to_string(i));
        }
    }
    for (int xi = 0; xi < kGenCount; ++xi)
        for (int yi = 0; yi < xi; ++yi) {
            Gen x = static_cast<Gen>(xi), y = static_cast<Gen>(yi);
            AlgebraElement br = commutator_table(x, y);
            for (int i = 0; i <= M.depth; ++i) {
                auto Y1 = M.action(y, i);
                auto X1 = M.action(x, i);
                if (!Y1 || !X1) continue;
                auto X2 = M.action(x, i + depth_offset(y));
                auto Y2 = M.action(y, i + depth_offset(x));
                if (!X2 || !Y2) continue;
                QMatrix lhs = (*X2 * *Y1) - (*Y2 * *X1);
                QMatrix rhs(M.dim(i + depth_offset(x) + depth_offset(y)), M.dim(i));
                for (const auto& [mono, c] : br.terms()) {
                    Gen gb = Gen::f;
                    for (int k = 0; k < kGenCount; ++k)
                        if (mono.exp[k] > 0) gb = static_cast<Gen>(k);
                    auto B = M.action(gb, i);
                    if (!B) {
                        rhs = QMatrix(0, 0);
                        break;
                    }
                    rhs = rhs + B->scaled(c);
                }
                if (rhs.rows() == 0 && rhs.cols() == 0) continue;
                if (!(lhs == rhs))
                    return fail(std::string("relation [") + kGenName[xi] + "," + kGenName[yi] +
                                "] fails at depth " + std::to_string(i));
            }
        }
    if (msg) msg->clear();
    return true;
}

std::string depth_vector_json(const std::vector<int>& dims) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ", ";
        os << dims[i];
    }
    os << ']';
    return os.str();
}

}  // namespace scho
