#ifndef TELESUM_MULTIPOLY_HPP
#define TELESUM_MULTIPOLY_HPP

#include "telesum/errors.hpp"
#include "telesum/rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace telesum {

using ExpVec = std::vector<int>;

// Graded reverse lexicographic order. a < b iff deg a < deg b, or degrees are
// equal and at the last differing index a has the larger exponent.
struct GrevlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        size_t n = std::max(a.size(), b.size());
        for (size_t i = n; i-- > 0;) {
            int ea = i < a.size() ? a[i] : 0;
            int eb = i < b.size() ? b[i] : 0;
            if (ea != eb) return ea > eb;
        }
        return false;
    }
};

inline int expvec_total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Sparse multivariate polynomial over Q in a fixed number of parameters.
// Terms are kept sorted grevlex-descending with no zero coefficients.
class MultiPoly {
public:
    MultiPoly() : width_(0) {}
    explicit MultiPoly(int width) : width_(width) {}
    MultiPoly(int width, const Rat& c) : width_(width) {
        if (c != 0) terms_.emplace_back(ExpVec(width, 0), c);
    }

    static MultiPoly constant(int width, const Rat& c) { return MultiPoly(width, c); }
    static MultiPoly variable(int width, int i, int exp = 1) {
        MultiPoly p(width);
        ExpVec e(width, 0);
        e.at(i) = exp;
        p.terms_.emplace_back(std::move(e), Rat(1));
        return p;
    }

    int width() const { return width_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && expvec_total_degree(terms_[0].first) == 0);
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        assert(is_constant());
        return terms_[0].second;
    }

    int total_degree() const {
        int d = -1;
        for (auto& t : terms_) d = std::max(d, expvec_total_degree(t.first));
        return d;
    }
    int degree_in(int i) const {
        int d = -1;
        for (auto& t : terms_) d = std::max(d, t.first[i]);
        return d;
    }

    const std::vector<std::pair<ExpVec, Rat>>& terms() const { return terms_; }

    // Leading term under grevlex (first stored term).
    const Rat& leading_coeff() const {
        assert(!terms_.empty());
        return terms_[0].second;
    }
    const ExpVec& leading_exp() const {
        assert(!terms_.empty());
        return terms_[0].first;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        assert(a.width_ == b.width_);
        MultiPoly r(a.width_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        GrevlexLess lt;
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const auto& ta = a.terms_[i];
            const auto& tb = b.terms_[j];
            if (ta.first == tb.first) {
                Rat c = ta.second + tb.second;
                if (c != 0) r.terms_.emplace_back(ta.first, c);
                ++i, ++j;
            } else if (lt(tb.first, ta.first)) {
                r.terms_.push_back(ta);
                ++i;
            } else {
                r.terms_.push_back(tb);
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        assert(a.width_ == b.width_);
        if (a.is_zero() || b.is_zero()) return MultiPoly(a.width_);
        // accumulate in an ordered map, then emit descending
        std::map<ExpVec, Rat, GrevlexLess> acc;
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                ExpVec e(a.width_);
                for (int k = 0; k < a.width_; ++k) e[k] = ta.first[k] + tb.first[k];
                acc[std::move(e)] += ta.second * tb.second;
            }
        }
        MultiPoly r(a.width_);
        r.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) r.terms_.emplace_back(it->first, it->second);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    MultiPoly scaled(const Rat& c) const {
        if (c == 0) return MultiPoly(width_);
        MultiPoly r(*this);
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    MultiPoly pow(int e) const {
        assert(e >= 0);
        MultiPoly r = constant(width_, 1);
        MultiPoly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        return width_ == o.width_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Deterministic total order, used for map keys.
    bool less_than(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].first != o.terms_[i].first)
                return GrevlexLess()(terms_[i].first, o.terms_[i].first);
            if (terms_[i].second != o.terms_[i].second)
                return terms_[i].second < o.terms_[i].second;
        }
        return false;
    }

    // d/dx_i
    MultiPoly derivative(int i) const {
        MultiPoly r(width_);
        for (const auto& t : terms_) {
            if (t.first[i] == 0) continue;
            ExpVec e = t.first;
            Rat c = t.second * e[i];
            e[i] -= 1;
            r.terms_.emplace_back(std::move(e), c);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const auto& x, const auto& y) { return GrevlexLess()(y.first, x.first); });
        return r;
    }

    // x_i -> x_i + h
    MultiPoly shift_var(int i, const Int& h) const {
        if (h == 0) return *this;
        MultiPoly r(width_);
        for (const auto& t : terms_) {
            int d = t.first[i];
            // (x+h)^d expanded
            for (int k = 0; k <= d; ++k) {
                ExpVec e = t.first;
                e[i] = k;
                Rat c = t.second * binomial(Int(d), d - k) * int_pow(h, d - k);
                if (c != 0) r += single(width_, std::move(e), c);
            }
        }
        return r;
    }

    // Substitute x_i := value for every parameter; returns the rational value.
    Rat eval_all(const std::vector<Rat>& vals) const {
        assert((int)vals.size() == width_);
        Rat s(0);
        for (const auto& t : terms_) {
            Rat m = t.second;
            for (int i = 0; i < width_; ++i)
                for (int k = 0; k < t.first[i]; ++k) m *= vals[i];
            s += m;
        }
        return s;
    }

    // View as dense univariate in variable i with MultiPoly coefficients
    // (coefficients have exponent 0 in slot i).
    std::vector<MultiPoly> to_univariate(int i) const {
        int d = degree_in(i);
        std::vector<MultiPoly> cs(std::max(d + 1, 0), MultiPoly(width_));
        for (const auto& t : terms_) {
            ExpVec e = t.first;
            int k = e[i];
            e[i] = 0;
            cs[k] += single(width_, std::move(e), t.second);
        }
        return cs;
    }

    static MultiPoly from_univariate(int i, const std::vector<MultiPoly>& cs, int width) {
        MultiPoly r(width);
        for (size_t k = 0; k < cs.size(); ++k) {
            if (cs[k].is_zero()) continue;
            r += cs[k] * variable(width, i, (int)k);
        }
        return r;
    }

    // Exact division; throws InternalError if not divisible.
    static MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);

    // Gcd normalized to be primitive over Z with positive leading coefficient.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // Multiply through so all coefficients are integers with content 1; the
    // applied factor is returned through `factor` (result = input * factor).
    MultiPoly int_primitive(Rat* factor = nullptr) const {
        if (terms_.empty()) {
            if (factor) *factor = 1;
            return *this;
        }
        Int l(1), g(0);
        for (auto& t : terms_) {
            l = int_lcm(l, t.second.get_den());
        }
        for (auto& t : terms_) {
            Int num = t.second.get_num() * (l / t.second.get_den());
            g = int_gcd(g, num);
        }
        Rat f = Rat(l) / Rat(g);
        if (f < 0) f = -f;
        if (leading_coeff() < 0) f = -f;
        if (factor) *factor = f;
        return scaled(f);
    }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    static MultiPoly single(int width, ExpVec e, Rat c) {
        MultiPoly p(width);
        if (c != 0) p.terms_.emplace_back(std::move(e), std::move(c));
        return p;
    }

    int width_;
    std::vector<std::pair<ExpVec, Rat>> terms_;
};

namespace detail {

// Dense univariate exact division with MultiPoly coefficients.
inline bool uni_divexact(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                         std::vector<MultiPoly>& q, int width);

inline int uni_degree(const std::vector<MultiPoly>& v) {
    for (size_t i = v.size(); i-- > 0;)
        if (!v[i].is_zero()) return (int)i;
    return -1;
}

inline bool uni_divexact(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                         std::vector<MultiPoly>& q, int width) {
    int da = uni_degree(a), db = uni_degree(b);
    if (da < 0) {
        q.clear();
        return true;
    }
    if (db < 0 || da < db) return false;
    std::vector<MultiPoly> r = a;
    q.assign(da - db + 1, MultiPoly(width));
    for (int k = da - db; k >= 0; --k) {
        int dr = uni_degree(r);
        if (dr < db + k) continue;
        if (dr > db + k) return false;
        MultiPoly qc;
        try {
            qc = MultiPoly::divexact(r[dr], b[db]);
        } catch (const InternalError&) {
            return false;
        }
        q[k] = qc;
        for (int i = 0; i <= db; ++i) r[i + k] -= qc * b[i];
    }
    return uni_degree(r) < 0;
}

// Pseudo-remainder of a by b in the main variable (coefficients MultiPoly).
inline std::vector<MultiPoly> uni_prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b,
                                       int width) {
    int db = uni_degree(b);
    assert(db >= 0);
    const MultiPoly& lb = b[db];
    int da = uni_degree(a);
    while (da >= db) {
        MultiPoly la = a[da];
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i) a[i + da - db] -= la * b[i];
        a[da] = MultiPoly(width); // force cancellation of the top slot
        int nd = da - 1;
        while (nd >= 0 && a[nd].is_zero()) --nd;
        a.resize(nd + 1);
        da = nd;
    }
    return a;
}

} // namespace detail

inline MultiPoly MultiPoly::divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw InternalError("divexact by zero polynomial");
    if (a.is_zero()) return MultiPoly(a.width_);
    if (b.is_constant()) return a.scaled(Rat(1) / b.constant_value());
    int var = -1;
    for (int i = 0; i < b.width_; ++i)
        if (b.degree_in(i) > 0) {
            var = i;
            break;
        }
    std::vector<MultiPoly> q;
    if (!detail::uni_divexact(a.to_univariate(var), b.to_univariate(var), q, a.width_))
        throw InternalError("inexact polynomial division");
    return from_univariate(var, q, a.width_);
}

inline MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    const int w = std::max(a.width_, b.width_);
    if (a.is_zero()) return b.is_zero() ? MultiPoly(w) : b.int_primitive();
    if (b.is_zero()) return a.int_primitive();
    if (a.is_constant() || b.is_constant()) return constant(w, 1);

    // choose a main variable present in both
    int var = -1;
    for (int i = 0; i < w; ++i)
        if (a.degree_in(i) > 0 && b.degree_in(i) > 0) {
            var = i;
            break;
        }
    if (var < 0) return constant(w, 1); // disjoint supports share only constants

    auto ua = a.to_univariate(var);
    auto ub = b.to_univariate(var);
    auto content = [&](const std::vector<MultiPoly>& v) {
        MultiPoly c(w);
        for (const auto& x : v) c = gcd(c, x);
        return c;
    };
    MultiPoly ca = content(ua), cb = content(ub);
    for (auto& x : ua) x = divexact(x, ca);
    for (auto& x : ub) x = divexact(x, cb);

    // primitive PRS
    std::vector<MultiPoly> u = ua, v = ub;
    if (detail::uni_degree(u) < detail::uni_degree(v)) std::swap(u, v);
    while (true) {
        int dv = detail::uni_degree(v);
        if (dv < 0) break;
        if (dv == 0) {
            v.clear();
            u.assign(1, constant(w, 1));
            break;
        }
        std::vector<MultiPoly> r = detail::uni_prem(u, v, w);
        u = v;
        v = r;
        if (!v.empty()) {
            MultiPoly cv = content(v);
            if (!cv.is_zero() && !cv.is_constant())
                for (auto& x : v) x = divexact(x, cv);
            else if (cv.is_constant() && !cv.is_zero())
                for (auto& x : v) x = x.scaled(Rat(1) / cv.constant_value());
        }
    }
    MultiPoly g = from_univariate(var, u, w) * gcd(ca, cb);
    return g.int_primitive();
}

inline std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        }
        bool has_var = expvec_total_degree(t.first) > 0;
        if (!has_var || c != 1) {
            os << rat_to_string(c);
            if (has_var) os << "*";
        }
        bool firstv = true;
        for (int i = 0; i < width_; ++i) {
            if (t.first[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << names.at(i);
            if (t.first[i] > 1) os << "^" << t.first[i];
        }
    }
    return os.str();
}

} // namespace telesum

#endif
