#include "dgs/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dgs/errors.hpp"
#include "dgs/factor.hpp"

namespace dgs {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row in matrix literal");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = std::move(s);
    }
    return out;
}

Integer IntMatrix::trace() const {
    Integer s = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (coefficients.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Integer& c = coefficients[d];
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || d == 0) out << a.str();
        if (d > 0) {
            if (a != 1) out << "*";
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    if (first) return "0";
    return out.str();
}

Integer det(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        // One Bareiss step: every entry stays an exact minor of m, so the
        // division by the previous pivot has zero remainder.
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign < 0 ? Integer(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly requires a square matrix");
    const std::size_t n = m.rows();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    // Trace-sequence recurrence: M_{k+1} = m*M_k + c_{n-k}*I with
    // c_{n-k} = -tr(m*M_k)/k. Each M_k is integral, so the division is exact.
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = m * mk;
        Integer tr = am.trace();
        assert(tr % Integer(k) == 0);
        c[n - k] = -tr / Integer(k);
        for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
        mk = std::move(am);
    }
    return IntPolynomial(std::move(c));
}

namespace {

// Elementary operations applied to the work matrix d, mirrored inversely on
// u and v so that u * d * v stays equal to the input throughout.
struct SnfWork {
    IntMatrix d, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t i = 0; i < u.rows(); ++i) std::swap(u(i, a), u(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t j = 0; j < v.cols(); ++j) std::swap(v(a, j), v(b, j));
    }
    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < d.cols(); ++j) d(dst, j) += f * d(src, j);
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, src) -= f * u(i, dst);
    }
    // col[dst] += f * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) += f * d(i, src);
        for (std::size_t j = 0; j < v.cols(); ++j) v(src, j) -= f * v(dst, j);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < d.cols(); ++j) d(r, j) = -d(r, j);
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, r) = -u(i, r);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t steps = std::min(rows, cols);
    SnfWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};

    for (std::size_t s = 0; s < steps; ++s) {
        for (;;) {
            // Pivot: nonzero entry of least magnitude in the trailing block.
            std::size_t pi = s, pj = s;
            Integer best = 0;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j) {
                    if (w.d(i, j) == 0) continue;
                    Integer a = abs(w.d(i, j));
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // trailing block all zero
            w.swap_rows(s, pi);
            w.swap_cols(s, pj);

            bool reduced = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (w.d(i, s) == 0) continue;
                Integer q = w.d(i, s) / w.d(s, s);
                if (q != 0) w.add_row(i, s, -q);
                if (w.d(i, s) != 0) reduced = false;  // remainder left, pivot will shrink
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (w.d(s, j) == 0) continue;
                Integer q = w.d(s, j) / w.d(s, s);
                if (q != 0) w.add_col(j, s, -q);
                if (w.d(s, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // Divisibility pass: the pivot must divide every entry of the
            // trailing block before we can move on.
            bool divides = true;
            for (std::size_t i = s + 1; i < rows && divides; ++i)
                for (std::size_t j = s + 1; j < cols && divides; ++j)
                    if (w.d(i, j) % w.d(s, s) != 0) {
                        w.add_row(s, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.d(s, s) < 0) w.negate_row(s);
    }

    SnfResult out;
    out.diagonal.resize(steps);
    for (std::size_t s = 0; s < steps; ++s) out.diagonal[s] = w.d(s, s);
    out.left = std::move(w.u);
    out.right = std::move(w.v);
    return out;
}

namespace {

void require_prime(const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + p.str() + " is not prime");
}

// Reduced row echelon form over F_p, in place. Returns pivot column indices.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<Integer>>& a, const Integer& p) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        Integer inv = inv_mod_prime(a[r][c], p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = mod_floor(a[r][j] * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Integer f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = mod_floor(a[i][j] - f * a[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Integer>> reduce_entries(const IntMatrix& m, const Integer& p) {
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mod_floor(m(i, j), p);
    return a;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, const Integer& p) {
    require_prime(p);
    auto a = reduce_entries(m, p);
    return rref_mod_p(a, p).size();
}

std::vector<std::vector<Integer>> nullspace_mod_p(const IntMatrix& m, const Integer& p) {
    require_prime(p);
    auto a = reduce_entries(m, p);
    const std::size_t cols = m.cols();
    auto pivots = rref_mod_p(a, p);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Integer> x(cols, Integer(0));
        x[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = mod_floor(-a[k][f], p);
        basis.push_back(std::move(x));
    }
    // Canonicalize: the row space is unique in reduced echelon form, which
    // also puts a leading 1 on every basis vector.
    rref_mod_p(basis, p);
    return basis;
}

RatMatrix inverse_rational(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse requires a square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = RatMatrix::from_int(m);
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a(pr, c) == 0) ++pr;
        if (pr == n) throw SingularMatrixError("matrix is singular");
        if (pr != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(pr, j));
                std::swap(inv(c, j), inv(pr, j));
            }
        Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace dgs
