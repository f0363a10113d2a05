#ifndef TELESUM_UNIPOLY_HPP
#define TELESUM_UNIPOLY_HPP

#include "telesum/param_scalar.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace telesum {

// Univariate polynomial in the distinguished variable over K.
class UniPoly {
public:
    UniPoly() : width_(0) {}
    explicit UniPoly(int width) : width_(width) {}
    UniPoly(int width, std::vector<ParamScalar> cs) : width_(width), c_(std::move(cs)) {
        trim();
    }
    static UniPoly constant(int width, const ParamScalar& c) {
        UniPoly p(width);
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }
    static UniPoly constant(int width, const Rat& c) {
        return constant(width, ParamScalar(width, c));
    }
    static UniPoly variable(int width) {
        UniPoly p(width);
        p.c_ = {ParamScalar(width, 0), ParamScalar(width, 1)};
        return p;
    }
    // (n + a)
    static UniPoly linear(int width, const ParamScalar& a) {
        UniPoly p(width);
        p.c_ = {a, ParamScalar(width, 1)};
        p.trim();
        return p;
    }

    int width() const { return width_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const ParamScalar& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    ParamScalar coeff(int i) const {
        if (i < 0 || i > degree()) return ParamScalar(width_, 0);
        return c_[i];
    }
    void set_coeff(int i, const ParamScalar& v) {
        if (i >= (int)c_.size()) c_.resize(i + 1, ParamScalar(width_, 0));
        c_[i] = v;
        trim();
    }
    const std::vector<ParamScalar>& coeffs() const { return c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        assert(a.width_ == b.width_);
        UniPoly r(a.width_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), ParamScalar(a.width_, 0));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size()) r.c_[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size()) r.c_[i] = a.c_[i];
            else r.c_[i] = b.c_[i];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a) {
        UniPoly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        assert(a.width_ == b.width_);
        if (a.is_zero() || b.is_zero()) return UniPoly(a.width_);
        UniPoly r(a.width_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, ParamScalar(a.width_, 0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
    UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
    UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

    UniPoly scaled(const ParamScalar& s) const {
        if (s.is_zero()) return UniPoly(width_);
        UniPoly r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    UniPoly pow(int e) const {
        assert(e >= 0);
        UniPoly r = constant(width_, Rat(1));
        UniPoly b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const UniPoly& o) const { return width_ == o.width_ && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lc().inverse());
    }

    // Division over the coefficient field.
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
        assert(!b.is_zero());
        q = UniPoly(a.width_);
        r = a;
        int db = b.degree();
        ParamScalar li = b.lc().inverse();
        while (!r.is_zero() && r.degree() >= db) {
            int k = r.degree() - db;
            ParamScalar f = r.lc() * li;
            UniPoly t(a.width_);
            t.c_.assign(k + 1, ParamScalar(a.width_, 0));
            t.c_[k] = f;
            q += t;
            r -= t * b;
        }
    }
    static UniPoly div(const UniPoly& a, const UniPoly& b) {
        UniPoly q, r;
        divrem(a, b, q, r);
        return q;
    }
    static UniPoly mod(const UniPoly& a, const UniPoly& b) {
        UniPoly q, r;
        divrem(a, b, q, r);
        return r;
    }
    static UniPoly divexact(const UniPoly& a, const UniPoly& b) {
        UniPoly q, r;
        divrem(a, b, q, r);
        if (!r.is_zero()) throw InternalError("inexact UniPoly division");
        return q;
    }
    static bool divides(const UniPoly& b, const UniPoly& a) {
        if (a.is_zero()) return true;
        if (b.is_zero()) return false;
        UniPoly q, r;
        divrem(a, b, q, r);
        return r.is_zero();
    }

    // Monic gcd; gcd(0,0) = 0.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b) {
        UniPoly u = a, v = b;
        while (!v.is_zero()) {
            UniPoly r = mod(u, v);
            u = v;
            v = r;
        }
        return u.monic();
    }

    // Extended gcd: g = s*a + t*b with g monic (or zero).
    static UniPoly xgcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
        UniPoly r0 = a, r1 = b;
        UniPoly s0 = constant(a.width_, Rat(1)), s1 = UniPoly(a.width_);
        UniPoly t0 = UniPoly(a.width_), t1 = constant(a.width_, Rat(1));
        while (!r1.is_zero()) {
            UniPoly q, r;
            divrem(r0, r1, q, r);
            r0 = r1;
            r1 = r;
            UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if (r0.is_zero()) {
            s = s0;
            t = t0;
            return r0;
        }
        ParamScalar inv = r0.lc().inverse();
        s = s0.scaled(inv);
        t = t0.scaled(inv);
        return r0.scaled(inv);
    }

    // d/dn
    UniPoly derivative() const {
        UniPoly r(width_);
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1, ParamScalar(width_, 0));
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * ParamScalar(width_, Rat((long)i));
        r.trim();
        return r;
    }

    UniPoly param_derivative(int i) const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = c.derivative(i);
        r.trim();
        return r;
    }
    UniPoly param_shift(int i, const Int& h = 1) const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = c.shift_var(i, h);
        r.trim();
        return r;
    }

    // n -> n + h for integer h (Horner on the shifted variable).
    UniPoly shift_n(const Int& h) const {
        if (h == 0 || is_zero()) return *this;
        UniPoly x_plus_h = linear(width_, ParamScalar(width_, Rat(h)));
        UniPoly r(width_);
        for (int i = degree(); i >= 0; --i) {
            r = r * x_plus_h + constant(width_, c_[i]);
        }
        return r;
    }

    // n -> general ParamScalar or small polynomial argument
    ParamScalar eval(const ParamScalar& v) const {
        ParamScalar r(width_, 0);
        for (int i = degree(); i >= 0; --i) r = r * v + c_[i];
        return r;
    }
    ParamScalar eval(const Rat& v) const { return eval(ParamScalar(width_, v)); }
    UniPoly compose(const UniPoly& g) const {
        UniPoly r(width_);
        for (int i = degree(); i >= 0; --i) r = r * g + constant(width_, c_[i]);
        return r;
    }

    // Content-and-sign normalization: clears coefficient denominators, removes
    // the common MultiPoly content across numerators, and fixes the sign so
    // the leading coefficient has positive leading rational. The result spans
    // the same K-line; used to make operators reproducible.
    UniPoly normalized_content() const {
        if (is_zero()) return *this;
        // common denominator
        MultiPoly den = MultiPoly::constant(width_, 1);
        for (const auto& c : c_)
            if (!c.is_zero()) den = MultiPoly::divexact(den * c.den(), MultiPoly::gcd(den, c.den()));
        UniPoly r = scaled(ParamScalar(den));
        // now all coefficients polynomial; remove common content
        MultiPoly g(width_);
        for (const auto& c : r.c_)
            if (!c.is_zero()) g = MultiPoly::gcd(g, c.as_poly());
        if (!g.is_zero() && !(g.is_constant() && g.constant_value() == 1))
            r = r.scaled(ParamScalar(MultiPoly::constant(width_, 1), g));
        // integer normalization across numerators
        Int l(1), gg(0);
        for (const auto& c : r.c_) {
            if (c.is_zero()) continue;
            for (const auto& t : c.as_poly().terms()) {
                l = int_lcm(l, t.second.get_den());
            }
        }
        for (const auto& c : r.c_) {
            if (c.is_zero()) continue;
            for (const auto& t : c.as_poly().terms())
                gg = int_gcd(gg, Int(t.second.get_num() * (l / t.second.get_den())));
        }
        if (gg != 0) r = r.scaled(ParamScalar(width_, Rat(l) / Rat(gg)));
        if (r.lc().as_poly().leading_coeff() < 0) r = -r;
        return r;
    }

    bool all_coeffs_polynomial() const {
        for (const auto& c : c_)
            if (!c.is_polynomial()) return false;
        return true;
    }

    // Resultant with respect to n (over the coefficient field).
    static ParamScalar resultant(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return ParamScalar(a.width_, 0);
        UniPoly u = a, v = b;
        ParamScalar res(a.width_, 1);
        bool neg = false;
        if (u.degree() < v.degree()) {
            if ((u.degree() & 1) && (v.degree() & 1)) neg = !neg;
            std::swap(u, v);
        }
        while (v.degree() > 0) {
            UniPoly r = mod(u, v);
            int du = u.degree(), dv = v.degree(), dr = r.degree();
            if ((du & 1) && (dv & 1)) neg = !neg;
            res *= v.lc().pow(du - (dr < 0 ? 0 : dr));
            if (r.is_zero()) return ParamScalar(a.width_, 0);
            u = v;
            v = r;
        }
        res *= v.lc().pow(u.degree());
        if (neg) res = -res;
        return res;
    }

    // Yun squarefree decomposition: list of (factor, multiplicity) with monic,
    // pairwise-coprime squarefree factors whose weighted product is monic(Q).
    static std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& q) {
        assert(!q.is_zero());
        std::vector<std::pair<UniPoly, int>> out;
        UniPoly p = q.monic();
        if (p.degree() == 0) return out;
        UniPoly dp = p.derivative();
        UniPoly a = gcd(p, dp);
        if (a.degree() == 0) {
            out.emplace_back(p, 1);
            return out;
        }
        UniPoly b = divexact(p, a);
        UniPoly c = divexact(dp, a);
        UniPoly d = c - b.derivative();
        int i = 1;
        while (b.degree() > 0) {
            UniPoly f = gcd(b, d);
            if (f.degree() > 0) out.emplace_back(f.monic(), i);
            b = divexact(b, f);
            c = divexact(d, f);
            d = c - b.derivative();
            ++i;
        }
        return out;
    }

    std::string to_string(const std::string& var, const std::vector<std::string>& pnames) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int width_;
    std::vector<ParamScalar> c_;
};

inline std::string UniPoly::to_string(const std::string& var,
                                      const std::vector<std::string>& pnames) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string(pnames);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool isone = c_[i].is_one() || (neg && (-c_[i]).is_one());
        if (i == 0) {
            out += (first || !neg) ? cs : cs;
        } else {
            if (!isone) {
                bool needs_paren = cs.find(' ') != std::string::npos;
                out += needs_paren ? "(" + cs + ")" : cs;
                out += "*";
            }
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// bezout_solve: target = A*unit_part + B*modulus with deg A < deg modulus.
inline void bezout_solve(const UniPoly& target, const UniPoly& unit_part,
                         const UniPoly& modulus, UniPoly& A, UniPoly& B) {
    UniPoly s, t;
    UniPoly g = UniPoly::xgcd(unit_part, modulus, s, t);
    if (g.degree() != 0)
        throw NotCoprimeError("bezout_solve: unit part is not invertible modulo the modulus");
    // s*unit = 1 mod modulus (g is the monic constant 1 after xgcd normalization)
    A = UniPoly::mod(s * target, modulus);
    B = UniPoly::divexact(target - A * unit_part, modulus);
}

// ---------------------------------------------------------------------------
// Integer root finding.

namespace detail {

// Dense polynomial over Q, used for Sturm sequences on specializations.
using QPoly = std::vector<Rat>;

inline int qdeg(const QPoly& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return (int)i;
    return -1;
}
inline void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline QPoly qderiv(const QPoly& p) {
    QPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat((long)i));
    qtrim(r);
    return r;
}
inline QPoly qmod(QPoly a, const QPoly& b) {
    int db = qdeg(b);
    assert(db >= 0);
    while (qdeg(a) >= db) {
        int da = qdeg(a);
        Rat f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[i + da - db] -= f * b[i];
        a[da] = 0;
        qtrim(a);
    }
    return a;
}
inline Rat qeval(const QPoly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// Number of sign changes of the Sturm chain at x.
inline int sturm_changes(const std::vector<QPoly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        Rat v = qeval(p, x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// All integer roots of a nonzero rational polynomial, by Sturm bisection.
inline std::set<Int> qpoly_integer_roots(QPoly p) {
    std::set<Int> roots;
    qtrim(p);
    int d = qdeg(p);
    if (d <= 0) return roots;
    // strip zero roots
    size_t v = 0;
    while (v < p.size() && p[v] == 0) ++v;
    if (v > 0) {
        roots.insert(0);
        p.erase(p.begin(), p.begin() + v);
        d = qdeg(p);
        if (d == 0) return roots;
    }
    // squarefree part
    {
        QPoly g = p, h = qderiv(p);
        while (qdeg(h) >= 0) {
            QPoly r = qmod(g, h);
            g = h;
            h = r;
        }
        if (qdeg(g) > 0) {
            // exact division p / g
            QPoly q(p.size());
            QPoly r = p;
            int dg = qdeg(g);
            while (qdeg(r) >= dg) {
                int dr = qdeg(r);
                Rat f = r[dr] / g[dg];
                q[dr - dg] = f;
                for (int i = 0; i <= dg; ++i) r[i + dr - dg] -= f * g[i];
                qtrim(r);
            }
            p = q;
            qtrim(p);
            d = qdeg(p);
        }
    }
    // Sturm chain
    std::vector<QPoly> chain{p, qderiv(p)};
    while (qdeg(chain.back()) > 0) {
        QPoly r = qmod(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        qtrim(r);
        if (qdeg(r) < 0) break;
        chain.push_back(r);
    }
    // Cauchy bound
    Rat bound(1);
    for (int i = 0; i < d; ++i) {
        Rat q = abs(p[i] / p[d]);
        if (q > bound) bound = q;
    }
    bound += 1;
    Int lo(-(bound.get_num() / bound.get_den() + 1)), hi(bound.get_num() / bound.get_den() + 1);

    // recursively isolate integer roots on (a, b]
    struct Rec {
        const std::vector<QPoly>& chain;
        const QPoly& p;
        std::set<Int>& roots;
        void run(const Int& a, const Int& b, int ca, int cb) {
            if (ca == cb) return;
            if (b - a == 1) {
                if (qeval(p, Rat(b)) == 0) roots.insert(b);
                return;
            }
            Int m = (a + b) / 2;
            int cm = sturm_changes(chain, Rat(m));
            run(a, m, ca, cm);
            run(m, b, cm, cb);
        }
    };
    Rec rec{chain, p, roots};
    rec.run(lo, hi, sturm_changes(chain, Rat(lo)), sturm_changes(chain, Rat(hi)));
    return rec.roots;
}

} // namespace detail

// All integers z with p(z) = 0 identically in the parameters. Candidates come
// from a random integer specialization of the parameters (retried on degree
// drop) and are verified exactly over K.
inline std::set<Int> integer_roots(const UniPoly& p) {
    assert(!p.is_zero());
    if (p.degree() == 0) return {};
    const int w = p.width();
    std::set<Int> candidates;
    if (w == 0) {
        detail::QPoly q;
        for (int i = 0; i <= p.degree(); ++i) q.push_back(p.coeff(i).rational_value());
        candidates = detail::qpoly_integer_roots(q);
    } else {
        std::mt19937 rng(0x5eed1234u);
        std::uniform_int_distribution<int> dist(2, 97);
        bool ok = false;
        for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
            std::vector<Rat> vals;
            for (int i = 0; i < w; ++i) vals.emplace_back(dist(rng));
            detail::QPoly q(p.degree() + 1, Rat(0));
            bool pole = false;
            for (int i = 0; i <= p.degree(); ++i) {
                Rat v;
                if (!p.coeff(i).eval_all(vals, v)) {
                    pole = true;
                    break;
                }
                q[i] = v;
            }
            if (pole) continue;
            if (detail::qdeg(q) != p.degree()) continue; // degree drop, retry
            candidates = detail::qpoly_integer_roots(q);
            ok = true;
        }
        if (!ok) throw InternalError("integer_roots: specialization kept failing");
    }
    std::set<Int> roots;
    for (const auto& z : candidates) {
        if (p.eval(Rat(z)).is_zero()) roots.insert(z);
    }
    return roots;
}

// Exactly the k in Z with gcd(A(n+k), B(n)) != 1, via the resultant in n of
// A(n+k) and B(n) viewed as a polynomial in k.
inline std::set<Int> integer_shift_set(const UniPoly& A, const UniPoly& B) {
    assert(!A.is_zero() && !B.is_zero());
    if (A.degree() == 0 || B.degree() == 0) return {};
    const int w = A.width();
    const int wk = w + 1; // auxiliary slot for k at index w
    auto widen_mp = [&](const MultiPoly& p) {
        MultiPoly r(wk);
        for (const auto& t : p.terms()) {
            MultiPoly m = MultiPoly::constant(wk, t.second);
            for (int i = 0; i < w; ++i)
                if (t.first[i]) m *= MultiPoly::variable(wk, i, t.first[i]);
            r += m;
        }
        return r;
    };
    auto widen_scalar = [&](const ParamScalar& s) {
        return ParamScalar(widen_mp(s.num()), widen_mp(s.den()));
    };
    auto widen_poly = [&](const UniPoly& p) {
        UniPoly r(wk);
        for (int i = 0; i <= p.degree(); ++i) r.set_coeff(i, widen_scalar(p.coeff(i)));
        return r;
    };
    UniPoly Aw = widen_poly(A), Bw = widen_poly(B);
    // A(n + k): compose with n + x_k
    UniPoly n_plus_k = UniPoly::linear(wk, ParamScalar::variable(wk, w));
    UniPoly Ash = Aw.compose(n_plus_k);
    ParamScalar res = UniPoly::resultant(Ash, Bw);
    if (res.is_zero()) throw InternalError("integer_shift_set: identically zero resultant");
    // collect as polynomial in k over the original parameter space
    MultiPoly num = res.num();
    UniPoly rk(w);
    for (const auto& t : num.terms()) {
        int kexp = t.first[w];
        ExpVec e(t.first.begin(), t.first.begin() + w);
        MultiPoly mono = MultiPoly::constant(w, t.second);
        for (int i = 0; i < w; ++i)
            if (e[i]) mono *= MultiPoly::variable(w, i, e[i]);
        rk.set_coeff(kexp, rk.coeff(kexp) + ParamScalar(mono));
    }
    return integer_roots(rk);
}

// Monic gcd restated for the spec surface: divides both inputs exactly.
inline UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) { return UniPoly::gcd(a, b); }

} // namespace telesum

#endif
