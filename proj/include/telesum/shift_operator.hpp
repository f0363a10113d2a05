#ifndef TELESUM_SHIFT_OPERATOR_HPP
#define TELESUM_SHIFT_OPERATOR_HPP

#include "telesum/rational_function.hpp"

#include <cassert>
#include <string>
#include <vector>

namespace telesum {

// Operator sum c_i(n) S^i in the summation shift only, coefficients in K(n).
class ShiftOp {
public:
    ShiftOp() : width_(0) {}
    explicit ShiftOp(int width) : width_(width) {}
    ShiftOp(int width, std::vector<RationalFunction> cs) : width_(width), c_(std::move(cs)) {
        trim();
    }
    static ShiftOp constant(int width, const RationalFunction& c) {
        ShiftOp r(width);
        r.c_ = {c};
        r.trim();
        return r;
    }
    static ShiftOp shift_power(int width, int i) {
        ShiftOp r(width);
        r.c_.assign(i + 1, RationalFunction(width));
        r.c_[i] = RationalFunction(width, Rat(1));
        return r;
    }

    int width() const { return width_; }
    int order() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    RationalFunction coeff(int i) const {
        if (i < 0 || i > order()) return RationalFunction(width_);
        return c_[i];
    }
    void set_coeff(int i, const RationalFunction& v) {
        if (i >= (int)c_.size()) c_.resize(i + 1, RationalFunction(width_));
        c_[i] = v;
        trim();
    }

    friend ShiftOp operator+(const ShiftOp& a, const ShiftOp& b) {
        ShiftOp r(a.width_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), RationalFunction(a.width_));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend ShiftOp operator-(const ShiftOp& a) {
        ShiftOp r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) { return a + (-b); }

    // Noncommutative product: (sum a_i S^i)(sum b_j S^j) = sum a_i b_j(n+i) S^{i+j}.
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
        if (a.is_zero() || b.is_zero()) return ShiftOp(a.width_);
        ShiftOp r(a.width_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, RationalFunction(a.width_));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j].shift_n((long)i);
            }
        }
        r.trim();
        return r;
    }

    ShiftOp scaled(const RationalFunction& s) const {
        ShiftOp r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    // Apply to a rational function: sum c_i(n) f(n+i).
    RationalFunction apply(const RationalFunction& f) const {
        RationalFunction r(width_);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            r += c_[i] * f.shift_n((long)i);
        }
        return r;
    }

    // Adjoint action: for L = sum a_i S^i, L*(u) = sum a_i(n-i) u(n-i).
    RationalFunction adjoint_apply(const RationalFunction& u) const {
        RationalFunction r(width_);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            r += c_[i].shift_n(-(long)i) * u.shift_n(-(long)i);
        }
        return r;
    }

    bool operator==(const ShiftOp& o) const { return c_ == o.c_; }
    bool operator!=(const ShiftOp& o) const { return !(*this == o); }

    std::string to_string(const std::string& var, const std::vector<std::string>& pnames) const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = order(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].to_string(var, pnames);
            std::string term;
            if (i == 0) term = cs;
            else {
                std::string mono = "S" + var + (i > 1 ? "^" + std::to_string(i) : "");
                if (c_[i].is_one()) term = mono;
                else if ((-c_[i]).is_one()) term = "-" + mono;
                else {
                    bool paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
                    term = (paren ? "(" + cs + ")" : cs) + "*" + mono;
                }
            }
            if (out.empty()) out = term;
            else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    int width_;
    std::vector<RationalFunction> c_;
};

// Operator with cleared polynomial coefficients: L = sum a_i(n) S^i, a_i in K[n].
struct PolyShiftOp {
    int width = 0;
    std::vector<UniPoly> a; // dense by shift power

    int order() const { return (int)a.size() - 1; }
    bool is_zero() const { return a.empty(); }

    static PolyShiftOp from_shiftop(const ShiftOp& s) {
        // clear denominators and normalize content and sign
        int w = s.width();
        UniPoly den = UniPoly::constant(w, Rat(1));
        for (int i = 0; i <= s.order(); ++i) {
            if (s.coeff(i).is_zero()) continue;
            UniPoly d = s.coeff(i).den();
            den = UniPoly::divexact(den * d, UniPoly::gcd(den, d));
        }
        // assemble polynomial coefficient vector, then joint content normalization
        std::vector<UniPoly> polys;
        for (int i = 0; i <= s.order(); ++i) {
            RationalFunction c = s.coeff(i) * RationalFunction(den);
            assert(c.is_polynomial());
            polys.push_back(c.as_poly());
        }
        // flatten into one UniPoly-like content pass: reuse normalized_content on a
        // stacked polynomial via gcds
        UniPoly g(w);
        for (const auto& p : polys)
            if (!p.is_zero()) g = UniPoly::gcd(g, p);
        PolyShiftOp out;
        out.width = w;
        if (g.degree() > 0)
            for (auto& p : polys) p = p.is_zero() ? p : UniPoly::divexact(p, g);
        out.a = polys;
        // scalar content + sign normalization across all coefficients jointly
        // (treat the concatenated coefficient list as one polynomial)
        UniPoly stacked(w);
        int off = 0;
        for (const auto& p : polys) {
            for (int i = 0; i <= p.degree(); ++i) stacked.set_coeff(off + i, p.coeff(i));
            off += p.degree() + 2;
        }
        UniPoly norm = stacked.normalized_content();
        if (!stacked.is_zero()) {
            // recover the applied scalar from one nonzero coefficient
            int idx = 0;
            while (stacked.coeff(idx).is_zero()) ++idx;
            ParamScalar f = norm.coeff(idx) / stacked.coeff(idx);
            for (auto& p : out.a) p = p.scaled(f);
        }
        while (!out.a.empty() && out.a.back().is_zero()) out.a.pop_back();
        return out;
    }

    ShiftOp as_shiftop() const {
        ShiftOp r(width);
        for (size_t i = 0; i < a.size(); ++i) r.set_coeff((int)i, RationalFunction(a[i]));
        return r;
    }

    std::string to_string(const std::string& var, const std::vector<std::string>& pnames) const {
        return as_shiftop().to_string(var, pnames);
    }
};

// L* = sum p_i(n) S^{-i} with polynomial coefficients.
struct AdjointOperator {
    int width = 0;
    std::vector<UniPoly> p; // p[i] multiplies S^{-i}

    int order() const { return (int)p.size() - 1; }
    const UniPoly& p0() const { return p.front(); }
    const UniPoly& pr() const { return p.back(); }

    RationalFunction apply(const RationalFunction& f) const {
        RationalFunction r(width);
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            r += RationalFunction(p[i]) * f.shift_n(-(long)i);
        }
        return r;
    }
    UniPoly apply_poly(const UniPoly& f) const {
        UniPoly r(width);
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            r += p[i] * f.shift_n(-(long)i);
        }
        return r;
    }

    std::string to_string(const std::string& var, const std::vector<std::string>& pnames) const {
        std::string out;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            std::string cs = p[i].to_string(var, pnames);
            std::string term = (i == 0) ? cs
                                        : "(" + cs + ")*S" + var + "^-" + std::to_string(i);
            if (!out.empty()) out += " + ";
            out += term;
        }
        return out.empty() ? "0" : out;
    }
};

// Adjoint of L = sum a_i(n) S^i: L* = sum a_i(n-i) S^{-i}.
inline AdjointOperator adjoint(const PolyShiftOp& L) {
    assert(!L.is_zero());
    AdjointOperator out;
    out.width = L.width;
    for (size_t i = 0; i < L.a.size(); ++i) out.p.push_back(L.a[i].shift_n(-(long)i));
    return out;
}

// P_L(u, .) from Lagrange's identity, as an operator of order < ord(L) applied
// to the second argument:
//   u L(v) - L*(u) v = Delta_n(P_L(u, v)),
//   P_L(u, v) = sum_{i=0}^{r-1} ( sum_{j=i+1}^{r} a_j(n+i-j) u(n+i-j) ) v(n+i).
inline ShiftOp lagrange_bilinear(const ShiftOp& L, const RationalFunction& u) {
    const int w = L.width();
    ShiftOp out(w);
    int r = L.order();
    if (r < 1 || u.is_zero()) return out;
    for (int i = 0; i <= r - 1; ++i) {
        RationalFunction c(w);
        for (int j = i + 1; j <= r; ++j) {
            if (L.coeff(j).is_zero()) continue;
            c += L.coeff(j).shift_n(i - j) * u.shift_n(i - j);
        }
        out.set_coeff(i, c);
    }
    return out;
}

inline ShiftOp lagrange_bilinear(const PolyShiftOp& L, const RationalFunction& u) {
    return lagrange_bilinear(L.as_shiftop(), u);
}

// Delta_n applied to (an operator applied to a sequence): (S-1) as a ShiftOp.
inline ShiftOp delta_op(int width) {
    ShiftOp d(width);
    d.set_coeff(1, RationalFunction(width, Rat(1)));
    d.set_coeff(0, RationalFunction(width, Rat(-1)));
    return d;
}

} // namespace telesum

#endif
