#pragma once

#include "scho/rational.hpp"

#include <cstddef>
#include <vector>

namespace scho {

// Dense matrix over Q. Row-major; all elimination is exact.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const QMatrix& other) const = default;

    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix scaled(const Rational& c) const;
    QMatrix transposed() const;
    QMatrix negated() const;
    bool is_zero() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;  // this * v

    // Stack rows: [this; other] (column counts must agree).
    QMatrix stacked(const QMatrix& other) const;
    // Concatenate columns: [this | other].
    QMatrix augmented(const QMatrix& other) const;
    QMatrix column(std::size_t j) const;
    QMatrix columns(const std::vector<std::size_t>& idx) const;

    std::size_t rank() const;

    // Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();

    // Columns span the null space {x : A x = 0}; basis from rref free variables.
    QMatrix kernel() const;

    // Columns spanning the column space (the pivot columns of this matrix).
    QMatrix column_space() const;

    // Solve A x = b for every column b of rhs. Returns false if inconsistent.
    bool solve(const QMatrix& rhs, QMatrix& out) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Subspaces are given by matrices whose COLUMNS span them (ambient dim = rows).
namespace subspace {

// Echelonized spanning set (independent columns, deterministic form).
QMatrix reduce(const QMatrix& span);
std::size_t dim(const QMatrix& span);
bool contains(const QMatrix& span, const QMatrix& vectors);
bool equal(const QMatrix& a, const QMatrix& b);
// Columns spanning the intersection of two column spans (Zassenhaus).
QMatrix intersect(const QMatrix& a, const QMatrix& b);
// Sum of spans, reduced.
QMatrix sum(const QMatrix& a, const QMatrix& b);

}  // namespace subspace

}  // namespace scho
