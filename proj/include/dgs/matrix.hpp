#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dgs/numeric.hpp"
#include "dgs/poly.hpp"

namespace dgs {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& other) const;
    std::vector<Integer> operator*(const std::vector<Integer>& v) const;

    Integer trace() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

// Dense matrix of exact rationals (lowest terms, positive denominators).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMatrix&) const = default;

    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Smith decomposition of m: left * diag(diagonal) * right == m, with left and
// right unimodular and d_i | d_{i+1} along the nonnegative diagonal.
struct SnfResult {
    IntMatrix left;
    std::vector<Integer> diagonal;
    IntMatrix right;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

// Monic characteristic polynomial det(x*I - m); every intermediate division
// in the trace recurrence is exact over the integers.
IntPolynomial char_poly(const IntMatrix& m);

SnfResult smith_normal_form(const IntMatrix& m);

// Rank of m over F_p. Throws std::invalid_argument when p is not prime.
std::size_t rank_mod_p(const IntMatrix& m, const Integer& p);

// Canonical basis of the right nullspace of m over F_p: rows in reduced
// echelon form, each with leading coefficient 1, entries in [0, p).
std::vector<std::vector<Integer>> nullspace_mod_p(const IntMatrix& m, const Integer& p);

// Exact inverse. Throws SingularMatrixError when det(m) == 0.
RatMatrix inverse_rational(const IntMatrix& m);

}  // namespace dgs
