#ifndef TELESUM_LAURENT_HPP
#define TELESUM_LAURENT_HPP

#include "telesum/rational_function.hpp"

#include <cassert>
#include <string>
#include <vector>

namespace telesum {

// Truncated Laurent expansion of an element of K(n), either at an integer
// point (local variable t = n - a) or at infinity (t = 1/n). Coefficients are
// indexed from lowest_order up to truncation_order inclusive; orders within
// that window whose coefficient is zero are stored as explicit zeros.
class LaurentSeries {
public:
    LaurentSeries() : width_(0), at_infinity_(false), point_(0), lowest_(0), trunc_(-1) {}
    LaurentSeries(int width, bool at_inf, Int point, int lowest, int trunc,
                  std::vector<ParamScalar> cs)
        : width_(width), at_infinity_(at_inf), point_(std::move(point)), lowest_(lowest),
          trunc_(trunc), c_(std::move(cs)) {
        normalize();
    }

    static LaurentSeries zero(int width, bool at_inf, const Int& point, int trunc) {
        return LaurentSeries(width, at_inf, point, trunc + 1, trunc, {});
    }

    int width() const { return width_; }
    bool at_infinity() const { return at_infinity_; }
    const Int& point() const { return point_; }
    int lowest_order() const { return lowest_; }
    int truncation_order() const { return trunc_; }
    bool is_zero() const { return c_.empty(); }

    ParamScalar coeff(int order) const {
        if (order < lowest_ || order > trunc_ || c_.empty())
            return ParamScalar(width_, 0);
        return c_[order - lowest_];
    }
    ParamScalar leading_coeff() const {
        return c_.empty() ? ParamScalar(width_, 0) : c_.front();
    }

    bool has_pole() const { return !c_.empty() && lowest_ < 0; }
    int pole_order() const { return has_pole() ? -lowest_ : 0; }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        assert(a.compatible(b));
        int trunc = std::min(a.trunc_, b.trunc_);
        int lo = std::min(a.lowest_, b.lowest_);
        std::vector<ParamScalar> cs;
        for (int o = lo; o <= trunc; ++o) cs.push_back(a.coeff(o) + b.coeff(o));
        return LaurentSeries(a.width_, a.at_infinity_, a.point_, lo, trunc, std::move(cs));
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + b.scaled(ParamScalar(a.width_, Rat(-1)));
    }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        assert(a.compatible(b));
        if (a.is_zero() || b.is_zero()) {
            int trunc = std::min(a.is_zero() ? a.trunc_ : a.trunc_ + b.lowest_,
                                 b.is_zero() ? b.trunc_ : b.trunc_ + a.lowest_);
            return zero(a.width_, a.at_infinity_, a.point_, trunc);
        }
        // valid orders: up to min(ta + lb, tb + la)
        int trunc = std::min(a.trunc_ + b.lowest_, b.trunc_ + a.lowest_);
        int lo = a.lowest_ + b.lowest_;
        std::vector<ParamScalar> cs(trunc - lo + 1, ParamScalar(a.width_, 0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) {
                int o = a.lowest_ + (int)i + b.lowest_ + (int)j;
                if (o > trunc) continue;
                cs[o - lo] += a.c_[i] * b.c_[j];
            }
        return LaurentSeries(a.width_, a.at_infinity_, a.point_, lo, trunc, std::move(cs));
    }

    LaurentSeries scaled(const ParamScalar& s) const {
        if (s.is_zero()) return zero(width_, at_infinity_, point_, trunc_);
        std::vector<ParamScalar> cs = c_;
        for (auto& c : cs) c *= s;
        return LaurentSeries(width_, at_infinity_, point_, lowest_, trunc_, std::move(cs));
    }

    LaurentSeries inverse() const {
        assert(!is_zero());
        // 1 / (c0 t^v (1 + u)) with u of positive valuation
        int v = lowest_;
        int terms = trunc_ - lowest_; // relative precision preserved
        ParamScalar c0inv = c_[0].inverse();
        std::vector<ParamScalar> inv(terms + 1, ParamScalar(width_, 0));
        inv[0] = c0inv;
        for (int k = 1; k <= terms; ++k) {
            ParamScalar s(width_, 0);
            for (int j = 1; j <= k; ++j) {
                ParamScalar aj = (j < (int)c_.size()) ? c_[j] : ParamScalar(width_, 0);
                s += aj * inv[k - j];
            }
            inv[k] = -(c0inv * s);
        }
        return LaurentSeries(width_, at_infinity_, point_, -v, -v + terms, std::move(inv));
    }

    std::string to_string(const std::vector<std::string>& pnames) const;

private:
    bool compatible(const LaurentSeries& o) const {
        return width_ == o.width_ && at_infinity_ == o.at_infinity_ &&
               (at_infinity_ || point_ == o.point_);
    }
    void normalize() {
        while (!c_.empty() && c_.front().is_zero()) {
            c_.erase(c_.begin());
            ++lowest_;
        }
        if ((int)c_.size() > trunc_ - lowest_ + 1) c_.resize(trunc_ - lowest_ + 1);
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) lowest_ = trunc_ + 1;
    }

    int width_;
    bool at_infinity_;
    Int point_;
    int lowest_;
    int trunc_;
    std::vector<ParamScalar> c_;
};

namespace detail {

// Power-series coefficients of a polynomial around the point (t = n - a), or
// around infinity (coefficients listed from the top degree downward, t = 1/n).
inline std::vector<ParamScalar> poly_local_coeffs(const UniPoly& p, bool at_inf, const Int& a) {
    std::vector<ParamScalar> cs;
    if (at_inf) {
        for (int i = p.degree(); i >= 0; --i) cs.push_back(p.coeff(i));
    } else {
        UniPoly sh = p.shift_n(a); // p(a + t)
        for (int i = 0; i <= sh.degree(); ++i) cs.push_back(sh.coeff(i));
    }
    return cs;
}

} // namespace detail

// Expansion of f at an integer point or at infinity.
// `extra_terms` is the number of terms kept beyond the leading one plus the
// pole order; the default matches the engine-wide policy (pole order + 4).
inline LaurentSeries laurent_expand(const RationalFunction& f, bool at_inf, const Int& point,
                                    int extra_terms = 4) {
    const int w = f.width();
    if (f.is_zero()) return LaurentSeries::zero(w, at_inf, point, extra_terms);

    auto ncs = detail::poly_local_coeffs(f.num(), at_inf, point);
    auto dcs = detail::poly_local_coeffs(f.den(), at_inf, point);
    int vnum = 0, vden = 0;
    while (ncs[vnum].is_zero()) ++vnum;
    while (dcs[vden].is_zero()) ++vden;

    int base_low;
    if (at_inf)
        base_low = -(f.num().degree() - vnum) + (f.den().degree() - vden);
    else
        base_low = vnum - vden;

    int pole = base_low < 0 ? -base_low : 0;
    int terms = pole + extra_terms; // coefficients computed past the valuation
    // series division: (num / t^vnum) / (den / t^vden)
    std::vector<ParamScalar> nn(ncs.begin() + vnum, ncs.end());
    std::vector<ParamScalar> dd(dcs.begin() + vden, dcs.end());
    nn.resize(std::max<size_t>(nn.size(), terms + 1), ParamScalar(w, 0));
    std::vector<ParamScalar> q(terms + 1, ParamScalar(w, 0));
    ParamScalar d0inv = dd[0].inverse();
    for (int k = 0; k <= terms; ++k) {
        ParamScalar s = (k < (int)nn.size()) ? nn[k] : ParamScalar(w, 0);
        for (int j = 1; j <= k && j < (int)dd.size(); ++j) s -= dd[j] * q[k - j];
        q[k] = s * d0inv;
    }
    return LaurentSeries(w, at_inf, point, base_low, base_low + terms, std::move(q));
}

inline LaurentSeries laurent_expand_at(const RationalFunction& f, const Int& point,
                                       int extra_terms = 4) {
    return laurent_expand(f, false, point, extra_terms);
}
inline LaurentSeries laurent_expand_at_infinity(const RationalFunction& f, int extra_terms = 4) {
    return laurent_expand(f, true, 0, extra_terms);
}

inline std::string LaurentSeries::to_string(const std::vector<std::string>& pnames) const {
    if (is_zero()) return "0 + ...";
    std::string out;
    for (int o = lowest_; o <= trunc_; ++o) {
        ParamScalar c = coeff(o);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string(pnames) + ")";
        if (o != 0) {
            out += at_infinity_ ? "*n^" + std::to_string(-o)
                                : "*t^" + std::to_string(o);
        }
    }
    out += " + ...";
    return out;
}

} // namespace telesum

#endif
