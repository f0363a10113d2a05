#ifndef TELESUM_SHIFTLESS_HPP
#define TELESUM_SHIFTLESS_HPP

#include "telesum/unipoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace telesum {

struct ShiftOccurrence {
    Int shift;      // h: the factor is Q(n + h)
    int multiplicity; // e >= 1
};

struct ShiftClass {
    UniPoly rep;                       // monic squarefree shift-free representative Q
    std::vector<ShiftOccurrence> occ;  // sorted by shift
};

// Q = unit * prod_i prod_j Q_i(n + h_{i,j})^{e_{i,j}}, classes pairwise
// shift-coprime, each Q_i squarefree and shift-free.
struct ShiftlessDecomposition {
    ParamScalar unit; // leading content of the input (input monic => 1)
    std::vector<ShiftClass> classes;

    UniPoly recombine(int width) const {
        UniPoly r = UniPoly::constant(width, unit);
        for (const auto& cl : classes)
            for (const auto& o : cl.occ)
                r *= cl.rep.shift_n(o.shift).pow(o.multiplicity);
        return r;
    }
};

namespace detail {

struct Atom {
    UniPoly poly; // monic squarefree
    int mult;
};

// Split atoms until any two (and any one against its own nonzero shifts) are
// shift-coprime. Equal-up-to-shift atoms survive; proper overlaps split.
inline void split_atoms(std::vector<Atom>& atoms) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < atoms.size() && !changed; ++i) {
            for (size_t j = 0; j < atoms.size() && !changed; ++j) {
                const UniPoly& A = atoms[i].poly;
                const UniPoly& B = atoms[j].poly;
                if (A.degree() == 0 || B.degree() == 0) continue;
                std::set<Int> ks = integer_shift_set(A, B);
                for (const Int& k : ks) {
                    if (i == j && k == 0) continue;
                    UniPoly g = UniPoly::gcd(A.shift_n(k), B);
                    if (g.degree() == 0) continue;
                    if (g.degree() == B.degree() && g.degree() == A.degree()) continue;
                    // proper split somewhere
                    if (g.degree() < B.degree()) {
                        Atom rest{UniPoly::divexact(B, g).monic(), atoms[j].mult};
                        Atom part{g.monic(), atoms[j].mult};
                        atoms[j] = part;
                        atoms.push_back(rest);
                        changed = true;
                        break;
                    }
                    // g == B, so A splits as g(n-k) * rest
                    UniPoly gk = g.shift_n(-k).monic();
                    Atom rest{UniPoly::divexact(A, gk).monic(), atoms[i].mult};
                    Atom part{gk, atoms[i].mult};
                    atoms[i] = part;
                    atoms.push_back(rest);
                    changed = true;
                    break;
                }
            }
        }
    }
}

} // namespace detail

// Shiftless decomposition of a nonzero polynomial. The representative of each
// class is anchored so its smallest occurrence shift is 0; callers with more
// context (the reduction engine) re-anchor afterwards.
inline ShiftlessDecomposition shiftless_decompose(const UniPoly& Q) {
    assert(!Q.is_zero());
    const int w = Q.width();
    ShiftlessDecomposition out;
    out.unit = Q.lc();
    if (Q.degree() == 0) return out;

    std::vector<detail::Atom> atoms;
    for (const auto& [f, m] : UniPoly::squarefree_decomposition(Q)) atoms.push_back({f, m});
    detail::split_atoms(atoms);

    // group atoms into shift orbits
    std::vector<bool> used(atoms.size(), false);
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        if (atoms[i].poly.degree() == 0) continue;
        std::vector<std::pair<Int, int>> occ{{Int(0), atoms[i].mult}};
        for (size_t j = i + 1; j < atoms.size(); ++j) {
            if (used[j] || atoms[j].poly.degree() != atoms[i].poly.degree()) continue;
            std::set<Int> ks = integer_shift_set(atoms[j].poly, atoms[i].poly);
            // after splitting, a nonempty set means equality up to shift
            for (const Int& k : ks) {
                if (atoms[j].poly.shift_n(k) == atoms[i].poly) {
                    // atoms[j](n) = atoms[i](n - k)
                    occ.emplace_back(-k, atoms[j].mult);
                    used[j] = true;
                    break;
                }
            }
        }
        std::sort(occ.begin(), occ.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // anchor: smallest occurrence shift becomes 0
        Int h0 = occ.front().first;
        ShiftClass cl;
        cl.rep = atoms[i].poly.shift_n(h0);
        for (auto& [h, m] : occ) cl.occ.push_back({h - h0, m});
        out.classes.push_back(std::move(cl));
    }
    // deterministic class order: by degree, then by representative printing
    std::sort(out.classes.begin(), out.classes.end(), [&](const ShiftClass& a, const ShiftClass& b) {
        if (a.rep.degree() != b.rep.degree()) return a.rep.degree() < b.rep.degree();
        return a.rep.to_string("n", std::vector<std::string>(w, "p")) <
               b.rep.to_string("n", std::vector<std::string>(w, "p"));
    });
    return out;
}

// Refinement of a decomposition with respect to P: afterwards, for every class
// Q and every h there is an l with gcd(P, Q(n+h)^{l+1}) = Q(n+h)^l.
inline ShiftlessDecomposition refine(const ShiftlessDecomposition& decomp, const UniPoly& P) {
    if (P.is_zero() || P.degree() == 0) return decomp;
    ShiftlessDecomposition out;
    out.unit = decomp.unit;
    std::vector<ShiftClass> work = decomp.classes;
    for (size_t idx = 0; idx < work.size(); ++idx) {
        ShiftClass cl = work[idx];
        if (cl.rep.degree() == 0) continue;
        bool split = false;
        std::set<Int> ks = integer_shift_set(cl.rep, P);
        for (const Int& k : ks) {
            UniPoly D = cl.rep.shift_n(k);
            // find a multiplicity layer of D in P that is a proper divisor
            UniPoly g = P;
            UniPoly f = UniPoly::gcd(D, g);
            while (f.degree() == D.degree() && !split) {
                g = UniPoly::divexact(g, D);
                f = UniPoly::gcd(D, g);
            }
            if (f.degree() == 0 || f.degree() == D.degree()) continue;
            // split rep into f(n-k) and the cofactor; same occurrence lists
            UniPoly part = f.shift_n(-k).monic();
            UniPoly rest = UniPoly::divexact(cl.rep, part).monic();
            ShiftClass c1{part, cl.occ}, c2{rest, cl.occ};
            work[idx] = c1;
            work.push_back(c2);
            split = true;
            // keep refining this entry until the predicate holds
            idx--;
            break;
        }
        if (!split) out.classes.push_back(cl);
    }
    std::sort(out.classes.begin(), out.classes.end(), [](const ShiftClass& a, const ShiftClass& b) {
        if (a.rep.degree() != b.rep.degree()) return a.rep.degree() < b.rep.degree();
        std::vector<std::string> pn(std::max(a.rep.width(), 0), "p");
        return a.rep.to_string("n", pn) < b.rep.to_string("n", pn);
    });
    return out;
}

// Largest l with Q(n - j)^l dividing p.
inline int shift_multiplicity(const UniPoly& Q, const Int& j, const UniPoly& p) {
    if (p.is_zero()) return 0;
    UniPoly qj = Q.shift_n(-j);
    UniPoly rest = p;
    int m = 0;
    while (UniPoly::divides(qj, rest) && !rest.is_zero()) {
        rest = UniPoly::divexact(rest, qj);
        ++m;
        if (rest.degree() == 0) break;
    }
    return m;
}

} // namespace telesum

#endif
