#include "dgs/walk.hpp"

#include "dgs/errors.hpp"

namespace dgs {

IntMatrix build_walk_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix a = adjacency_matrix(g);
    IntMatrix w(n, n);
    std::vector<Integer> col(n, Integer(1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) w(i, j) = col[i];
        if (j + 1 < n) col = a * col;
    }
    return w;
}

WalkProfile profile(const Graph& g, std::uint64_t effort_bound) {
    WalkProfile p;
    p.n = g.order();
    p.walk_matrix = build_walk_matrix(g);
    p.det = det(p.walk_matrix);
    p.snf_diagonal = smith_normal_form(p.walk_matrix).diagonal;
    p.controllable = (p.det != 0);
    if (p.controllable) {
        p.dn_factorization = factor(p.dn(), effort_bound);
        p.det_factorization = factor(p.det, effort_bound);
        if (p.det_factorization->complete) {
            const unsigned v2 = p.det_factorization->exponent_of(2);
            p.in_fn = (v2 == static_cast<unsigned>(p.n / 2)) &&
                      p.det_factorization->squarefree_odd_part();
        }
    } else {
        p.in_fn = false;
    }
    return p;
}

bool in_family_fn(const WalkProfile& p) {
    if (!p.controllable) return false;
    if (!p.det_factorization || !p.det_factorization->complete)
        throw IndeterminateError(
            "family membership needs a complete factorization of det(W); residual cofactor " +
            (p.det_factorization ? p.det_factorization->residual.str() : std::string("?")) +
            " remains");
    return *p.in_fn;
}

}  // namespace dgs
