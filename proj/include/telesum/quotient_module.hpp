#ifndef TELESUM_QUOTIENT_MODULE_HPP
#define TELESUM_QUOTIENT_MODULE_HPP

#include "telesum/ore_algebra.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

namespace telesum {

using RFMatrix = std::vector<std::vector<RationalFunction>>;

namespace linalg {

// Row-reduce a copy; returns rank. If `inverse` is requested the matrix must
// be square and nonsingular.
inline int rank(RFMatrix m, int width) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        RationalFunction inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            RationalFunction f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    (void)width;
    return r;
}

inline bool invertible(const RFMatrix& m) {
    if (m.empty()) return true;
    return rank(m, m[0][0].width()) == (int)m.size();
}

// Solve x * M = rhs for a row vector x (M square nonsingular).
inline std::vector<RationalFunction> solve_left(const RFMatrix& M,
                                                const std::vector<RationalFunction>& rhs) {
    int n = (int)M.size();
    assert((int)rhs.size() == n);
    // transpose to solve M^T x^T = rhs^T by Gaussian elimination
    RFMatrix a(n, std::vector<RationalFunction>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = M[j][i];
        a[i][n] = rhs[i];
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw InternalError("solve_left: singular matrix");
        std::swap(a[piv], a[c]);
        RationalFunction inv = a[c][c].inverse();
        for (int j = c; j <= n; ++j) a[c][j] = a[c][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            RationalFunction f = a[i][c];
            for (int j = c; j <= n; ++j) a[i][j] = a[i][j] - f * a[c][j];
        }
    }
    std::vector<RationalFunction> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

} // namespace linalg

// B = A/I presented by a staircase basis and per-variable action matrices.
struct QuotientModule {
    AlgebraPtr alg;
    std::vector<ExpVec> staircase;            // grevlex ascending, staircase[0] = 1
    std::vector<OreOperator> generators;      // leading coefficients normalized to 1
    std::vector<ExpVec> leading_monomials;    // of the generators
    std::vector<RFMatrix> action;             // action[i][k][l]: d_i e_k = sum_l a e_l
    int r = 0;
    bool a0_invertible = false;

    const RFMatrix& A0() const { return action[alg->summation_index()]; }

    int staircase_index(const ExpVec& e) const {
        for (size_t i = 0; i < staircase.size(); ++i)
            if (staircase[i] == e) return (int)i;
        return -1;
    }
};

namespace detail {

inline bool divides_mono(const ExpVec& a, const ExpVec& b) {
    // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace detail

// Noncommutative division of `op` by the generators; returns the remainder,
// supported on non-multiples of the leading monomials.
inline OreOperator reduce_by_generators(OreOperator op,
                                        const std::vector<OreOperator>& gens,
                                        const std::vector<ExpVec>& lms) {
    const AlgebraPtr alg = op.algebra();
    while (!op.is_zero()) {
        // largest reducible monomial
        const auto& terms = op.terms();
        auto it = terms.rbegin();
        bool reduced = false;
        for (; it != terms.rend(); ++it) {
            for (size_t g = 0; g < gens.size(); ++g) {
                if (!detail::divides_mono(lms[g], it->first)) continue;
                ExpVec q(it->first.size());
                for (size_t i = 0; i < q.size(); ++i) q[i] = it->first[i] - lms[g][i];
                // leading coefficient of d^q * gens[g] is sigma^q(lc) = 1 shifted;
                // generators are normalized monic so compute it directly
                OreOperator shifted = gens[g];
                for (int i = 0; i < alg->num_vars(); ++i)
                    for (int k = 0; k < q[i]; ++k) shifted = shifted.apply_generator(i);
                const RationalFunction& lead = shifted.terms().at(it->first);
                op = op - shifted.scaled_left(it->second / lead);
                reduced = true;
                break;
            }
            if (reduced) break;
        }
        if (!reduced) break;
    }
    return op;
}

// Build the finite-dimensional quotient from a generating set that must form a
// confluent rewriting system for grevlex.
inline QuotientModule build_quotient(std::vector<OreOperator> generators, AlgebraPtr alg) {
    if (generators.empty()) throw SemanticError("no generators supplied");
    for (auto& g : generators)
        if (g.is_zero()) throw SemanticError("zero generator supplied");
    const int nv = alg->num_vars();

    QuotientModule mod;
    mod.alg = alg;
    for (auto& g : generators) {
        OreOperator gn = g.scaled_left(g.leading_coeff().inverse());
        mod.generators.push_back(gn);
        mod.leading_monomials.push_back(gn.leading_monomial());
    }

    // zero-dimensionality: every variable needs a pure-power leading monomial
    for (int i = 0; i < nv; ++i) {
        bool found = false;
        for (const auto& lm : mod.leading_monomials) {
            bool pure = lm[i] > 0;
            for (int j = 0; j < nv && pure; ++j)
                if (j != i && lm[j] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            throw NotDFiniteError("staircase is infinite: no generator bounds the " +
                                  alg->var(i).name + " direction");
    }

    // staircase = monomials under the leading-monomial staircase (BFS)
    std::set<ExpVec, GrevlexLess> stair;
    std::queue<ExpVec> bfs;
    ExpVec one(nv, 0);
    auto reducible = [&](const ExpVec& e) {
        for (const auto& lm : mod.leading_monomials)
            if (detail::divides_mono(lm, e)) return true;
        return false;
    };
    if (!reducible(one)) {
        stair.insert(one);
        bfs.push(one);
    }
    while (!bfs.empty()) {
        ExpVec e = bfs.front();
        bfs.pop();
        for (int i = 0; i < nv; ++i) {
            ExpVec e2 = e;
            e2[i] += 1;
            if (stair.count(e2) || reducible(e2)) continue;
            stair.insert(e2);
            bfs.push(e2);
            if (stair.size() > 4096)
                throw NotDFiniteError("staircase exceeds the supported size");
        }
    }
    mod.staircase.assign(stair.begin(), stair.end());
    mod.r = (int)mod.staircase.size();
    if (mod.r == 0) throw NotDFiniteError("the ideal contains a unit; the quotient is trivial");

    // confluence: S-pairs of all generator pairs must reduce to zero
    for (size_t a = 0; a < mod.generators.size(); ++a) {
        for (size_t b = a + 1; b < mod.generators.size(); ++b) {
            const ExpVec& la = mod.leading_monomials[a];
            const ExpVec& lb = mod.leading_monomials[b];
            ExpVec lcm(nv), qa(nv), qb(nv);
            for (int i = 0; i < nv; ++i) {
                lcm[i] = std::max(la[i], lb[i]);
                qa[i] = lcm[i] - la[i];
                qb[i] = lcm[i] - lb[i];
            }
            OreOperator sa = mod.generators[a];
            OreOperator sb = mod.generators[b];
            for (int i = 0; i < nv; ++i) {
                for (int k = 0; k < qa[i]; ++k) sa = sa.apply_generator(i);
                for (int k = 0; k < qb[i]; ++k) sb = sb.apply_generator(i);
            }
            OreOperator spair = sa.scaled_left(sa.terms().at(lcm).inverse()) -
                                sb.scaled_left(sb.terms().at(lcm).inverse());
            OreOperator rem = reduce_by_generators(spair, mod.generators, mod.leading_monomials);
            if (!rem.is_zero())
                throw NotDFiniteError(
                    "generators do not form a confluent rewriting system (S-pair of generators " +
                    std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                    " does not reduce to zero)");
        }
    }

    // action matrices
    mod.action.assign(nv, RFMatrix(mod.r, std::vector<RationalFunction>(mod.r, alg->zero_rf())));
    for (int i = 0; i < nv; ++i) {
        for (int k = 0; k < mod.r; ++k) {
            OreOperator ek = OreOperator::monomial(alg, mod.staircase[k], alg->one_rf());
            OreOperator rem =
                reduce_by_generators(ek.apply_generator(i), mod.generators, mod.leading_monomials);
            for (const auto& [e, c] : rem.terms()) {
                int idx = mod.staircase_index(e);
                if (idx < 0) throw InternalError("normal form escaped the staircase");
                mod.action[i][k][idx] = c;
            }
        }
    }
    mod.a0_invertible = linalg::invertible(mod.A0());
    return mod;
}

// Coordinates of op in the staircase basis.
inline std::vector<RationalFunction> normal_form(const OreOperator& op, const QuotientModule& mod) {
    OreOperator rem = reduce_by_generators(op, mod.generators, mod.leading_monomials);
    std::vector<RationalFunction> coords(mod.r, mod.alg->zero_rf());
    for (const auto& [e, c] : rem.terms()) {
        int idx = mod.staircase_index(e);
        if (idx < 0) throw InternalError("normal form escaped the staircase");
        coords[idx] = c;
    }
    return coords;
}

} // namespace telesum

#endif
