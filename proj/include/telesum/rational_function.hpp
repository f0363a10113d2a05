#ifndef TELESUM_RATIONAL_FUNCTION_HPP
#define TELESUM_RATIONAL_FUNCTION_HPP

#include "telesum/unipoly.hpp"

#include <cassert>
#include <string>

namespace telesum {

// Element of K(n): numerator/denominator with the denominator monic and
// gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(UniPoly::constant(0, Rat(1))) {}
    explicit RationalFunction(int width)
        : num_(width), den_(UniPoly::constant(width, Rat(1))) {}
    RationalFunction(int width, const Rat& c)
        : num_(UniPoly::constant(width, c)), den_(UniPoly::constant(width, Rat(1))) {}
    explicit RationalFunction(const UniPoly& p)
        : num_(p), den_(UniPoly::constant(p.width(), Rat(1))) {}
    explicit RationalFunction(const ParamScalar& s)
        : num_(UniPoly::constant(s.width(), s)), den_(UniPoly::constant(s.width(), Rat(1))) {}
    RationalFunction(const UniPoly& n, const UniPoly& d) : num_(n), den_(d) { reduce(); }

    static RationalFunction variable(int width) {
        return RationalFunction(UniPoly::variable(width));
    }

    int width() const { return num_.width(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_scalar() const { return num_.is_constant() && den_.is_constant(); }
    ParamScalar scalar_value() const {
        assert(is_scalar());
        if (num_.is_zero()) return ParamScalar(width(), 0);
        return num_.coeff(0) / den_.coeff(0);
    }
    UniPoly as_poly() const {
        assert(is_polynomial());
        return num_.scaled(den_.coeff(0).inverse());
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        UniPoly g1 = UniPoly::gcd(a.num_, b.den_);
        UniPoly g2 = UniPoly::gcd(b.num_, a.den_);
        UniPoly n1 = g1.is_constant() ? a.num_ : UniPoly::divexact(a.num_, g1);
        UniPoly d2 = g1.is_constant() ? b.den_ : UniPoly::divexact(b.den_, g1);
        UniPoly n2 = g2.is_constant() ? b.num_ : UniPoly::divexact(b.num_, g2);
        UniPoly d1 = g2.is_constant() ? a.den_ : UniPoly::divexact(a.den_, g2);
        return RationalFunction(n1 * n2, d1 * d2);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        assert(!b.is_zero());
        return a * b.inverse();
    }
    RationalFunction inverse() const {
        assert(!is_zero());
        return RationalFunction(den_, num_);
    }

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    RationalFunction pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r(width(), Rat(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction shift_n(const Int& h) const {
        if (h == 0) return *this;
        return RationalFunction(num_.shift_n(h), den_.shift_n(h));
    }
    RationalFunction param_shift(int i, const Int& h = 1) const {
        return RationalFunction(num_.param_shift(i, h), den_.param_shift(i, h));
    }
    RationalFunction param_derivative(int i) const {
        // (n/d)' with d monic
        return RationalFunction(num_.param_derivative(i) * den_ - num_ * den_.param_derivative(i),
                                den_ * den_);
    }

    // Evaluate at an integer point; false on a pole.
    bool eval_at(const Rat& v, ParamScalar& out) const {
        ParamScalar d = den_.eval(v);
        if (d.is_zero()) return false;
        out = num_.eval(v) / d;
        return true;
    }

    std::string to_string(const std::string& var, const std::vector<std::string>& pnames) const {
        if (is_polynomial()) return as_poly().to_string(var, pnames);
        std::string ns = num_.to_string(var, pnames);
        std::string ds = den_.to_string(var, pnames);
        std::string r = (num_.degree() > 0 || num_.coeff(0).num().terms().size() > 1 ||
                         !num_.coeff(0).is_polynomial())
                            ? "(" + ns + ")"
                            : ns;
        r += "/(" + ds + ")";
        return r;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw InternalError("zero denominator in RationalFunction");
        if (num_.is_zero()) {
            den_ = UniPoly::constant(width(), Rat(1));
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UniPoly::divexact(num_, g);
            den_ = UniPoly::divexact(den_, g);
        }
        ParamScalar l = den_.lc();
        if (!l.is_one()) {
            ParamScalar inv = l.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    UniPoly num_, den_;
};

} // namespace telesum

#endif
