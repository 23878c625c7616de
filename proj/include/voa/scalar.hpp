#ifndef VOA_SCALAR_HPP
#define VOA_SCALAR_HPP

#include <stdexcept>
#include <string>

#include "voa/polynomial.hpp"

namespace voa {

/// Exact scalar of the library: a rational number, or a rational function in
/// one declared parameter (the central charge c, the level l, or a formal
/// substitution variable). Canonical form: denominator monic and nonzero,
/// gcd(numerator, denominator) = 1, parameter name dropped when both sides
/// are constant. Mixing two different parameters in one arithmetic
/// expression is rejected: the coefficient field is always Q or Q(param).
class Scalar {
  public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(long n, long d) : num_(rat(n, d)), den_(1) {}
    Scalar(const Rat& r) : num_(r), den_(1) {}

    static Scalar param(const std::string& name) {
        Scalar s;
        s.num_ = Poly::variable();
        s.den_ = Poly(1);
        s.param_ = name;
        return s;
    }

    static Scalar from_poly(Poly num, Poly den, const std::string& name) {
        Scalar s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.param_ = name;
        s.normalize();
        return s;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    const std::string& param_name() const { return param_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Rat as_rational() const {
        if (!is_constant()) throw std::domain_error("Scalar: not a constant: " + str());
        return num_.coeff(0) / den_.coeff(0);
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Scalar operator+(const Scalar& o) const {
        Scalar r;
        r.param_ = merged_param(o);
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        r.normalize();
        return r;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const {
        Scalar r;
        r.param_ = merged_param(o);
        r.num_ = num_ * o.num_;
        r.den_ = den_ * o.den_;
        r.normalize();
        return r;
    }

    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        Scalar r;
        r.param_ = merged_param(o);
        r.num_ = num_ * o.den_;
        r.den_ = den_ * o.num_;
        r.normalize();
        return r;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar pow(long e) const {
        if (e < 0) return (Scalar(1) / *this).pow(-e);
        Scalar acc(1), b = *this;
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    /// Substitute a rational value for the parameter.
    Scalar specialize(const Rat& value) const {
        Rat d = den_.eval(value);
        if (d == 0) throw std::domain_error("Scalar: specialization hits a pole");
        return Scalar(num_.eval(value) / d);
    }

    /// Canonical text form: "5/6", "c^2-4", "(c+2)/(c-2)".
    std::string str() const {
        const std::string var = param_.empty() ? "x" : param_;
        if (den_ == Poly(1)) return num_.str(var);
        std::string n = num_.str(var), d = den_.str(var);
        if (num_.term_count() > 1 || (num_.degree() >= 1 && num_.leading() != 1)) n = "(" + n + ")";
        if (den_.term_count() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    std::string merged_param(const Scalar& o) const {
        if (param_.empty()) return o.param_;
        if (o.param_.empty() || o.param_ == param_) return param_;
        throw std::invalid_argument("Scalar: mixing parameters '" + param_ + "' and '" + o.param_ + "'");
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            param_.clear();
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0 || g.coeff(0) != 1) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        // make denominator monic
        if (den_.leading() != 1) {
            Rat inv = Rat(1) / den_.leading();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
        if (is_constant()) param_.clear();
    }

    Poly num_, den_;
    std::string param_;
};

inline Scalar operator*(const Rat& a, const Scalar& s) { return Scalar(a) * s; }

}  // namespace voa

#endif
