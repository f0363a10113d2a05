#ifndef TELESUM_PARTIAL_FRACTIONS_HPP
#define TELESUM_PARTIAL_FRACTIONS_HPP

#include "telesum/rational_function.hpp"
#include "telesum/shiftless.hpp"

#include <map>
#include <vector>

namespace telesum {

struct PartialFractionTerm {
    int class_index; // into the decomposition's class list
    Int shift;       // h
    int power;       // l >= 1
    UniPoly numer;   // deg < l * deg Q  is NOT required here; see below
};

// R = polynomial_part + sum of numer/(Q_i(n+h)^power) with, after digit
// expansion, deg numer < power * deg Q_i.
struct PartialFractionForm {
    UniPoly polynomial_part;
    std::vector<PartialFractionTerm> terms;

    RationalFunction recombine(const ShiftlessDecomposition& classes) const {
        RationalFunction r(RationalFunction(polynomial_part));
        for (const auto& t : terms) {
            UniPoly den = classes.classes[t.class_index].rep.shift_n(t.shift).pow(t.power);
            r += RationalFunction(t.numer, den);
        }
        return r;
    }
};

// Decompose R against the given classes. Every factor of den(R) must divide
// the product described by `classes`; otherwise ClassMismatch.
inline PartialFractionForm partial_fractions(const RationalFunction& R,
                                             const ShiftlessDecomposition& classes) {
    const int w = R.width();
    PartialFractionForm out;
    UniPoly q, rem;
    UniPoly::divrem(R.num(), R.den(), q, rem);
    out.polynomial_part = q;
    if (rem.is_zero()) return out;

    // peel off one coprime factor Q_i(n+h)^m at a time
    struct Piece {
        int class_index;
        Int shift;
        int power;
    };
    UniPoly den = R.den();
    UniPoly num = rem;
    std::vector<Piece> pieces;
    for (size_t ci = 0; ci < classes.classes.size(); ++ci) {
        const auto& cl = classes.classes[ci];
        for (const auto& o : cl.occ) {
            UniPoly qh = cl.rep.shift_n(o.shift);
            int m = 0;
            while (UniPoly::divides(qh, den)) {
                den = UniPoly::divexact(den, qh);
                ++m;
                if (den.degree() == 0) break;
            }
            if (m > 0) pieces.push_back({(int)ci, o.shift, m});
            if (den.degree() == 0) break;
        }
        if (den.degree() == 0) break;
    }
    if (den.degree() != 0)
        throw ClassMismatchError("partial_fractions: denominator factor matches no class");

    // successive Bezout splits: num/(D1*D2) = A/D1 + B/D2
    UniPoly running = num;
    UniPoly rest_den = R.den().monic();
    for (size_t i = 0; i < pieces.size(); ++i) {
        const auto& pc = pieces[i];
        UniPoly D1 = classes.classes[pc.class_index].rep.shift_n(pc.shift).pow(pc.power);
        UniPoly D2 = UniPoly::divexact(rest_den, D1);
        UniPoly part;
        if (D2.degree() == 0) {
            part = UniPoly::mod(running.scaled(D2.coeff(0).inverse()), D1);
            // polynomial overflow (deg running >= deg D1) folded into the part below
            UniPoly overflow = UniPoly::div(running.scaled(D2.coeff(0).inverse()), D1);
            out.polynomial_part += overflow;
            running = UniPoly(w);
        } else {
            UniPoly s, t;
            UniPoly g = UniPoly::xgcd(D1, D2, s, t);
            if (g.degree() != 0)
                throw InternalError("partial_fractions: class pieces are not coprime");
            // num/(D1 D2) = num*t/D1 + num*s/D2
            part = UniPoly::mod(running * t, D1);
            // keep the remainder proper: subtract part/D1 from running/(D1 D2)
            running = UniPoly::divexact(running - part * D2, D1);
            rest_den = D2;
        }
        // expand into Q-adic digits
        const UniPoly& Q = classes.classes[pc.class_index].rep;
        UniPoly qh = Q.shift_n(pc.shift);
        UniPoly cur = part;
        std::vector<UniPoly> digits;
        for (int d = 0; d < pc.power; ++d) {
            UniPoly dq, dr;
            UniPoly::divrem(cur, qh, dq, dr);
            digits.push_back(dr);
            cur = dq;
        }
        if (!cur.is_zero()) out.polynomial_part += cur; // cannot happen for proper parts
        for (int d = 0; d < pc.power; ++d) {
            if (digits[d].is_zero()) continue;
            out.terms.push_back({pc.class_index, pc.shift, pc.power - d, digits[d]});
        }
    }
    return out;
}

} // namespace telesum

#endif
