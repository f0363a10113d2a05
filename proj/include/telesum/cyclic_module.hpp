#ifndef TELESUM_CYCLIC_MODULE_HPP
#define TELESUM_CYCLIC_MODULE_HPP

#include "telesum/quotient_module.hpp"
#include "telesum/shift_operator.hpp"

#include <vector>

namespace telesum {

// Cyclic presentation of B = A/I with respect to the summation shift.
struct CyclicData {
    QuotientModule module;
    std::vector<RationalFunction> gamma;  // coordinates in the staircase basis
    RFMatrix change_of_basis;             // rows: coords of S^i gamma, i = 0..r-1
    PolyShiftOp L;                        // minimal annihilator of gamma, order r
    AdjointOperator Lstar;
    ShiftOp A1;                           // 1 = A1(gamma)
    std::vector<ShiftOp> B;               // per variable: d_i gamma = B_i gamma
    std::vector<RFMatrix> cyclic_action;  // per variable j: row i = coords (cyclic
                                          // basis) of d_j(S^i gamma)

    int r() const { return module.r; }
    int width() const { return module.alg->width(); }
    const AlgebraPtr& algebra() const { return module.alg; }
};

namespace detail {

// Candidates for a cyclic vector per the guaranteed family: weight polynomials
// in Z[n] of degree <= r-1 with coefficients in {0..r}. Enumerated by number
// of nonzero weights, then total coefficient budget, then maximal degree.
inline std::vector<std::vector<std::vector<int>>> cyclic_candidates(int r, size_t cap) {
    std::vector<std::vector<std::vector<int>>> out;
    struct Item {
        int count, budget, maxdeg;
        std::vector<std::vector<int>> a;
    };
    std::vector<Item> items;
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    const int max_budget = std::min(3 * r, 9);
    // DFS over slots (poly i, degree d), values 0..r, bounded budget
    std::function<void(int, int)> rec = [&](int slot, int budget) {
        if (items.size() >= cap) return;
        if (slot == r * r) {
            if (budget == 0) return;
            Item it;
            it.budget = budget;
            it.count = 0;
            it.maxdeg = 0;
            for (int i = 0; i < r; ++i) {
                bool nz = false;
                for (int d = 0; d < r; ++d)
                    if (a[i][d]) {
                        nz = true;
                        it.maxdeg = std::max(it.maxdeg, d);
                    }
                if (nz) ++it.count;
            }
            it.a = a;
            items.push_back(std::move(it));
            return;
        }
        int i = slot / r, d = slot % r;
        for (int v = 0; v <= r && budget + v <= max_budget; ++v) {
            a[i][d] = v;
            rec(slot + 1, budget + v);
            a[i][d] = 0;
            if (items.size() >= cap) return;
        }
    };
    rec(0, 0);
    std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        if (x.count != y.count) return x.count < y.count;
        if (x.budget != y.budget) return x.budget < y.budget;
        if (x.maxdeg != y.maxdeg) return x.maxdeg < y.maxdeg;
        return x.a < y.a;
    });
    for (auto& it : items) out.push_back(std::move(it.a));
    return out;
}

// coords of S_n(w) given coords of w: sigma0(w) * A0.
inline std::vector<RationalFunction> shift_coords(const QuotientModule& mod,
                                                  const std::vector<RationalFunction>& w) {
    const int r = mod.r;
    const int s = mod.alg->summation_index();
    std::vector<RationalFunction> out(r, mod.alg->zero_rf());
    for (int k = 0; k < r; ++k) {
        if (w[k].is_zero()) continue;
        RationalFunction c = mod.alg->sigma(s, w[k]);
        for (int l = 0; l < r; ++l) {
            if (mod.action[s][k][l].is_zero()) continue;
            out[l] += c * mod.action[s][k][l];
        }
    }
    return out;
}

inline RFMatrix cyclic_matrix(const QuotientModule& mod,
                              const std::vector<RationalFunction>& gamma) {
    RFMatrix m;
    m.push_back(gamma);
    for (int i = 1; i < mod.r; ++i) m.push_back(shift_coords(mod, m.back()));
    return m;
}

} // namespace detail

// Minimal annihilator of a cyclic gamma (as a denominator-cleared operator).
inline PolyShiftOp minimal_annihilator_from_matrix(const QuotientModule& mod,
                                                   const RFMatrix& M,
                                                   const std::vector<RationalFunction>& top) {
    // top = coords of S^r gamma; solve x * M = top
    std::vector<RationalFunction> x = linalg::solve_left(M, top);
    ShiftOp L(mod.alg->width());
    for (int i = 0; i < mod.r; ++i) L.set_coeff(i, -x[i]);
    L.set_coeff(mod.r, mod.alg->one_rf());
    return PolyShiftOp::from_shiftop(L);
}

inline ShiftOp express_in_cyclic(const std::vector<RationalFunction>& w, const RFMatrix& M,
                                 int width) {
    std::vector<RationalFunction> y = linalg::solve_left(M, w);
    ShiftOp out(width);
    for (size_t i = 0; i < y.size(); ++i) out.set_coeff((int)i, y[i]);
    return out;
}

// Reduce a ShiftOp modulo L (monic leading behavior handled via coefficients):
// rewrites S^m for m >= r using S^r = -(1/a_r) sum_{i<r} a_i S^i.
inline ShiftOp reduce_mod_L(ShiftOp op, const PolyShiftOp& L) {
    const int r = L.order();
    const int w = L.width;
    while (op.order() >= r) {
        int m = op.order();
        RationalFunction c = op.coeff(m);
        op.set_coeff(m, RationalFunction(w));
        if (c.is_zero()) continue;
        // c * S^m = c * S^{m-r} * S^r; S^r = -(1/a_r) sum a_i S^i shifted by m-r
        RationalFunction ar_inv = RationalFunction(L.a[r]).shift_n(m - r).inverse();
        for (int i = 0; i < r; ++i) {
            if (L.a[i].is_zero()) continue;
            RationalFunction ai = RationalFunction(L.a[i]).shift_n(m - r);
            op.set_coeff(m - r + i, op.coeff(m - r + i) - c * ar_inv * ai);
        }
    }
    return op;
}

inline CyclicData find_cyclic_vector(const QuotientModule& mod) {
    if (!mod.a0_invertible)
        throw SingularShiftMatrixError(
            "the shift action matrix A0 is singular; no cyclic vector is sought");
    const int r = mod.r;
    const int w = mod.alg->width();
    CyclicData out;
    out.module = mod;

    auto try_gamma = [&](const std::vector<RationalFunction>& g) -> bool {
        RFMatrix M = detail::cyclic_matrix(mod, g);
        if (linalg::rank(M, w) != r) return false;
        out.gamma = g;
        out.change_of_basis = M;
        return true;
    };

    // e1 = 1 first
    std::vector<RationalFunction> e1(r, mod.alg->zero_rf());
    int idx1 = mod.staircase_index(ExpVec(mod.alg->num_vars(), 0));
    if (idx1 < 0) throw InternalError("staircase does not contain 1");
    e1[idx1] = mod.alg->one_rf();
    bool found = try_gamma(e1);

    if (!found) {
        auto candidates = detail::cyclic_candidates(r, 100000);
        for (const auto& cand : candidates) {
            std::vector<RationalFunction> g(r, mod.alg->zero_rf());
            for (int i = 0; i < r; ++i) {
                UniPoly p(w);
                for (int d = 0; d < r; ++d)
                    if (cand[i][d]) p.set_coeff(d, ParamScalar(w, Rat(cand[i][d])));
                if (!p.is_zero()) g[i] = RationalFunction(p);
            }
            if (try_gamma(g)) {
                found = true;
                break;
            }
        }
        if (!found)
            throw NoCyclicVectorError(
                "no cyclic vector in the guaranteed candidate family; this contradicts the "
                "invertibility of A0 and indicates an internal inconsistency");
    }

    // minimal annihilator
    std::vector<RationalFunction> top = detail::shift_coords(mod, out.change_of_basis.back());
    out.L = minimal_annihilator_from_matrix(mod, out.change_of_basis, top);
    out.Lstar = adjoint(out.L);

    // A1: 1 = A1(gamma)
    if (out.gamma == e1) {
        out.A1 = ShiftOp::constant(w, mod.alg->one_rf());
    } else {
        out.A1 = express_in_cyclic(e1, out.change_of_basis, w);
    }

    // B_i and the cyclic action matrices
    out.B.assign(mod.alg->num_vars(), ShiftOp(w));
    out.cyclic_action.assign(mod.alg->num_vars(), RFMatrix());
    OreOperator gamma_op(mod.alg);
    for (int k = 0; k < r; ++k)
        if (!out.gamma[k].is_zero())
            gamma_op += OreOperator::monomial(mod.alg, mod.staircase[k], out.gamma[k]);
    for (int j = 0; j < mod.alg->num_vars(); ++j) {
        if (j == mod.alg->summation_index()) continue;
        std::vector<RationalFunction> dj = normal_form(gamma_op.apply_generator(j), mod);
        out.B[j] = express_in_cyclic(dj, out.change_of_basis, w);
        // rows of the cyclic action of d_j: coords of d_j(S^i gamma) = (S^i B_j)(gamma)
        RFMatrix rows;
        for (int i = 0; i < r; ++i) {
            ShiftOp SiBj = ShiftOp::shift_power(w, i) * out.B[j];
            ShiftOp red = reduce_mod_L(SiBj, out.L);
            std::vector<RationalFunction> row(r, mod.alg->zero_rf());
            for (int t = 0; t < r; ++t) row[t] = red.coeff(t);
            rows.push_back(row);
        }
        out.cyclic_action[j] = rows;
    }
    return out;
}

// phi_i(R) of Prop. 3.
inline RationalFunction phi(const CyclicData& data, int var, const RationalFunction& R) {
    const auto& alg = *data.algebra();
    assert(var != alg.summation_index());
    if (alg.var(var).action == VarAction::Shift) {
        return data.B[var].adjoint_apply(R.param_shift(alg.param_slot(var), 1));
    }
    return data.B[var].adjoint_apply(R) + R.param_derivative(alg.param_slot(var));
}

// Q_i(R) of Prop. 3, as an operator in S_n of order < r applied to gamma.
inline ShiftOp cert_increment(const CyclicData& data, int var, const RationalFunction& R) {
    const auto& alg = *data.algebra();
    assert(var != alg.summation_index());
    RationalFunction u = (alg.var(var).action == VarAction::Shift)
                             ? R.param_shift(alg.param_slot(var), 1)
                             : R;
    return lagrange_bilinear(data.B[var], u);
}

} // namespace telesum

#endif
