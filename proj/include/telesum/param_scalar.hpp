#ifndef TELESUM_PARAM_SCALAR_HPP
#define TELESUM_PARAM_SCALAR_HPP

#include "telesum/multipoly.hpp"

#include <cassert>
#include <string>

namespace telesum {

// Element of K = Q(x_1,...,x_m): a reduced fraction of multivariate
// polynomials. The denominator is integer-primitive with positive leading
// coefficient, and gcd(num, den) = 1.
class ParamScalar {
public:
    ParamScalar() : num_(0), den_(MultiPoly::constant(0, 1)) {}
    explicit ParamScalar(int width) : num_(width), den_(MultiPoly::constant(width, 1)) {}
    ParamScalar(int width, const Rat& c)
        : num_(MultiPoly::constant(width, c)), den_(MultiPoly::constant(width, 1)) {}
    explicit ParamScalar(const MultiPoly& p)
        : num_(p), den_(MultiPoly::constant(p.width(), 1)) {}
    ParamScalar(const MultiPoly& n, const MultiPoly& d) : num_(n), den_(d) { reduce(); }

    static ParamScalar variable(int width, int i) {
        return ParamScalar(MultiPoly::variable(width, i));
    }

    int width() const { return num_.width(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_rational_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat rational_value() const {
        assert(is_rational_constant());
        if (num_.is_zero()) return Rat(0);
        return num_.constant_value() / den_.constant_value();
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    MultiPoly as_poly() const {
        assert(is_polynomial());
        return num_.scaled(Rat(1) / den_.constant_value());
    }

    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
        return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
        return ParamScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ParamScalar operator-(const ParamScalar& a) {
        ParamScalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
        // cross-reduce before multiplying to keep intermediates small
        MultiPoly g1 = MultiPoly::gcd(a.num_, b.den_);
        MultiPoly g2 = MultiPoly::gcd(b.num_, a.den_);
        MultiPoly n1 = g1.is_constant() ? a.num_ : MultiPoly::divexact(a.num_, g1);
        MultiPoly d2 = g1.is_constant() ? b.den_ : MultiPoly::divexact(b.den_, g1);
        MultiPoly n2 = g2.is_constant() ? b.num_ : MultiPoly::divexact(b.num_, g2);
        MultiPoly d1 = g2.is_constant() ? a.den_ : MultiPoly::divexact(a.den_, g2);
        return ParamScalar(n1 * n2, d1 * d2);
    }
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
        assert(!b.is_zero());
        return a * b.inverse();
    }
    ParamScalar inverse() const {
        assert(!is_zero());
        return ParamScalar(den_, num_);
    }

    ParamScalar& operator+=(const ParamScalar& b) { return *this = *this + b; }
    ParamScalar& operator-=(const ParamScalar& b) { return *this = *this - b; }
    ParamScalar& operator*=(const ParamScalar& b) { return *this = *this * b; }
    ParamScalar& operator/=(const ParamScalar& b) { return *this = *this / b; }

    ParamScalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        ParamScalar r(width(), 1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const ParamScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }
    bool less_than(const ParamScalar& o) const {
        if (!(num_ == o.num_)) return num_.less_than(o.num_);
        return den_.less_than(o.den_);
    }

    ParamScalar derivative(int i) const {
        // (n/d)' = (n'd - nd')/d^2
        return ParamScalar(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
    }

    ParamScalar shift_var(int i, const Int& h = 1) const {
        return ParamScalar(num_.shift_var(i, h), den_.shift_var(i, h));
    }

    // Substitute all parameters; fails (returns false) on a pole.
    bool eval_all(const std::vector<Rat>& vals, Rat& out) const {
        Rat d = den_.eval_all(vals);
        if (d == 0) return false;
        out = num_.eval_all(vals) / d;
        return true;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (is_polynomial()) return as_poly().to_string(names);
        std::string ns = num_.to_string(names);
        std::string ds = den_.to_string(names);
        bool np = num_.terms().size() > 1;
        std::string r = np ? "(" + ns + ")" : ns;
        r += "/";
        r += (den_.terms().size() > 1) ? "(" + ds + ")" : ds;
        return r;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw InternalError("zero denominator in ParamScalar");
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(width(), 1);
            return;
        }
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = MultiPoly::divexact(num_, g);
            den_ = MultiPoly::divexact(den_, g);
        }
        Rat f;
        den_ = den_.int_primitive(&f);
        num_ = num_.scaled(f);
    }

    MultiPoly num_, den_;
};

} // namespace telesum

#endif
