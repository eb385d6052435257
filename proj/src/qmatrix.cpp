#include "scho/qmatrix.hpp"

#include <cassert>
#include <stdexcept>

namespace scho {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    assert(cols_ == other.rows_);
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    QMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += other.a_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    QMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= other.a_[i];
    return out;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

QMatrix QMatrix::negated() const {
    return scaled(Rational(-1));
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

QMatrix QMatrix::stacked(const QMatrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("stacked: column mismatch");
    QMatrix out(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

QMatrix QMatrix::augmented(const QMatrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("augmented: row mismatch");
    QMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

QMatrix QMatrix::column(std::size_t j) const {
    QMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
    return out;
}

QMatrix QMatrix::columns(const std::vector<std::size_t>& idx) const {
    QMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        Rational inv = at(row, col);
        for (std::size_t j = col; j < cols_; ++j) at(row, j) /= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix tmp = *this;
    return tmp.rref().size();
}

QMatrix QMatrix::kernel() const {
    QMatrix tmp = *this;
    std::vector<std::size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free.push_back(j);
    QMatrix out(cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        out.at(free[k], k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            out.at(pivots[r], k) = -tmp.at(r, free[k]);
    }
    return out;
}

QMatrix QMatrix::column_space() const {
    QMatrix tmp = *this;
    std::vector<std::size_t> pivots = tmp.rref();
    return columns(pivots);
}

bool QMatrix::solve(const QMatrix& rhs, QMatrix& out) const {
    assert(rows_ == rhs.rows());
    QMatrix aug = augmented(rhs);
    std::vector<std::size_t> pivots = aug.rref();
    for (auto p : pivots)
        if (p >= cols_) return false;  // pivot in the rhs block: inconsistent
    out = QMatrix(cols_, rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            out.at(pivots[r], j) = aug.at(r, cols_ + j);
    return true;
}

namespace subspace {

QMatrix reduce(const QMatrix& span) {
    QMatrix t = span.transposed();
    std::vector<std::size_t> pivots = t.rref();
    QMatrix out(span.rows(), pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t i = 0; i < span.rows(); ++i) out.at(i, r) = t.at(r, i);
    return out;
}

std::size_t dim(const QMatrix& span) {
    return span.rank();
}

bool contains(const QMatrix& span, const QMatrix& vectors) {
    if (vectors.cols() == 0) return true;
    if (span.cols() == 0) return vectors.is_zero();
    QMatrix x;
    return span.solve(vectors, x);
}

bool equal(const QMatrix& a, const QMatrix& b) {
    return dim(a) == dim(b) && contains(a, b);
}

QMatrix intersect(const QMatrix& a, const QMatrix& b) {
    // Zassenhaus: echelonize rows [a_i | a_i] and [b_i | 0]; rows with zero
    // left half have right halves spanning the intersection.
    std::size_t n = a.rows();
    assert(b.rows() == n);
    QMatrix big(a.cols() + b.cols(), 2 * n);
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t i = 0; i < n; ++i) {
            big.at(c, i) = a.at(i, c);
            big.at(c, n + i) = a.at(i, c);
        }
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t i = 0; i < n; ++i) big.at(a.cols() + c, i) = b.at(i, c);
    big.rref();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < big.rows(); ++r) {
        bool left_zero = true, right_zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (big.at(r, i) != 0) left_zero = false;
            if (big.at(r, n + i) != 0) right_zero = false;
        }
        if (left_zero && !right_zero) {
            std::vector<Rational> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = big.at(r, n + i);
            rows.push_back(std::move(v));
        }
    }
    QMatrix out(n, rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) out.at(i, c) = rows[c][i];
    return out;
}

QMatrix sum(const QMatrix& a, const QMatrix& b) {
    return reduce(a.augmented(b));
}

}  // namespace subspace

}  // namespace scho
