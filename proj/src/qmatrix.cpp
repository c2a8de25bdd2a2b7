#include "dgs/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

#include "dgs/errors.hpp"
#include "dgs/walk.hpp"

namespace dgs {

std::vector<std::string> rational_orthogonal_violations(const IntMatrix& scaled,
                                                        const Integer& level) {
    std::vector<std::string> bad;
    if (!scaled.square()) {
        bad.push_back("matrix is not square");
        return bad;
    }
    if (level < 1) bad.push_back("level must be positive");
    const std::size_t n = scaled.rows();
    const Integer ll = level * level;

    IntMatrix gram = scaled.transposed() * scaled;
    bool orthogonal = true;
    for (std::size_t i = 0; i < n && orthogonal; ++i)
        for (std::size_t j = 0; j < n && orthogonal; ++j)
            if (gram(i, j) != (i == j ? ll : Integer(0))) orthogonal = false;
    if (!orthogonal) bad.push_back("(level*Q)^T (level*Q) != level^2 * I");

    for (std::size_t i = 0; i < n; ++i) {
        Integer rs = 0, cs = 0;
        for (std::size_t j = 0; j < n; ++j) {
            rs += scaled(i, j);
            cs += scaled(j, i);
        }
        if (rs != level) {
            bad.push_back("row " + std::to_string(i + 1) + " sums to " + rs.str() +
                          ", expected " + level.str());
            break;
        }
        if (cs != level) {
            bad.push_back("column " + std::to_string(i + 1) + " sums to " + cs.str() +
                          ", expected " + level.str());
            break;
        }
    }

    if (level > 1) {
        // minimality: no prime divisor of the level divides every entry
        Integer g = level;
        for (std::size_t i = 0; i < n && g != 1; ++i)
            for (std::size_t j = 0; j < n && g != 1; ++j) g = gcd(g, scaled(i, j));
        if (g != 1)
            bad.push_back("level is not minimal: all entries share the factor " + g.str());
    }
    return bad;
}

RationalOrthogonal::RationalOrthogonal(IntMatrix scaled, Integer level)
    : scaled_(std::move(scaled)), level_(std::move(level)) {
    auto bad = rational_orthogonal_violations(scaled_, level_);
    if (!bad.empty()) {
        std::string msg = "not a rational orthogonal matrix with unit row sums:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw std::invalid_argument(msg);
    }
}

RationalOrthogonal RationalOrthogonal::identity(std::size_t n) {
    return RationalOrthogonal(IntMatrix::identity(n), 1);
}

RationalOrthogonal RationalOrthogonal::from_rational(const RatMatrix& q) {
    const Integer l = dgs::level(q);
    IntMatrix scaled(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            Rational e = q(i, j) * Rational(l);
            scaled(i, j) = numerator(e);
        }
    return RationalOrthogonal(std::move(scaled), l);
}

RatMatrix RationalOrthogonal::rational() const {
    RatMatrix q(scaled_.rows(), scaled_.cols());
    const Rational l(level_);
    for (std::size_t i = 0; i < scaled_.rows(); ++i)
        for (std::size_t j = 0; j < scaled_.cols(); ++j)
            q(i, j) = Rational(scaled_(i, j)) / l;
    return q;
}

Integer level(const RatMatrix& q) {
    Integer l = 1;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) l = lcm(l, denominator(q(i, j)));
    return l;
}

std::optional<Graph> check_membership(const RationalOrthogonal& q, const Graph& g) {
    if (q.order() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("Q has order " + std::to_string(q.order()) +
                                    " but the graph has " + std::to_string(g.order()) +
                                    " vertices");
    const std::size_t n = q.order();
    const Integer ll = q.level() * q.level();
    // level^2 * B = (level*Q)^T A (level*Q); B is an adjacency matrix iff
    // every entry of the conjugate is 0 or level^2, symmetric, zero diagonal.
    IntMatrix conj = q.scaled().transposed() * adjacency_matrix(g) * q.scaled();
    Graph h(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (conj(i, i) != 0) return std::nullopt;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (conj(i, j) != conj(j, i)) return std::nullopt;
            if (conj(i, j) == ll)
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
            else if (conj(i, j) != 0)
                return std::nullopt;
        }
    }
    return h;
}

RationalOrthogonal recover_q(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        throw std::invalid_argument("graphs must have the same number of vertices");
    const IntMatrix wg = build_walk_matrix(g);
    const IntMatrix wh = build_walk_matrix(h);

    RatMatrix wg_inv;
    try {
        wg_inv = inverse_rational(wg);
    } catch (const SingularMatrixError&) {
        throw std::invalid_argument("Q recovery needs controllable graphs (walk matrix singular)");
    }
    // Q^T W_g = W_h forces Q^T = W_h * W_g^{-1}.
    RatMatrix qt = RatMatrix::from_int(wh) * wg_inv;
    RationalOrthogonal q = RationalOrthogonal::from_rational(qt.transposed());

    auto image = check_membership(q, g);
    if (!image || !(*image == h))
        throw std::invalid_argument(
            "graphs are not generalized-cospectral: recovered Q fails the conjugation check");
    return q;
}

std::pair<IntMatrix, Integer> parse_q_entries(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    Integer l;
    if (!(in >> n >> l)) throw std::invalid_argument("Q file must start with \"n level\"");
    if (n < 1) throw std::invalid_argument("Q file declares a nonpositive order");
    IntMatrix scaled(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (!(in >> scaled(i, j)))
                throw std::invalid_argument("Q file truncated at row " + std::to_string(i + 1) +
                                            ", column " + std::to_string(j + 1));
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing data after Q matrix entries");
    return {std::move(scaled), std::move(l)};
}

RationalOrthogonal parse_q_text(std::string_view text) {
    auto [scaled, l] = parse_q_entries(text);
    return RationalOrthogonal(std::move(scaled), std::move(l));
}

std::string emit_q_text(const RationalOrthogonal& q) {
    std::ostringstream out;
    out << q.order() << ' ' << q.level().str() << '\n';
    for (std::size_t i = 0; i < q.order(); ++i) {
        for (std::size_t j = 0; j < q.order(); ++j) {
            if (j) out << ' ';
            out << q.scaled()(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dgs
