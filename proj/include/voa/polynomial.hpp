#ifndef VOA_POLYNOMIAL_HPP
#define VOA_POLYNOMIAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

/// Dense univariate polynomial over the rationals. Coefficient i belongs to
/// x^i; no trailing zero coefficients are stored, so degree() == size-1 and
/// the zero polynomial has empty storage (degree -1).
class Poly {
  public:
    Poly() = default;
    Poly(const Rat& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    Poly(long constant) : Poly(Rat(constant)) {}

    static Poly variable() {
        Poly p;
        p.c_ = {Rat(0), Rat(1)};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }
    const Rat& leading() const { return c_.back(); }

    Rat coeff(int i) const {
        if (i < 0 || i >= (int)c_.size()) return Rat(0);
        return c_[i];
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] += c_[i];
            if (i < o.c_.size()) r.c_[i] += o.c_[i];
        }
        r.trim();
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
        r.trim();
        return r;
    }

    Poly operator*(const Rat& s) const {
        if (s == 0) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rat f = r.leading() / d.leading();
            // q += f x^k;  r -= f x^k d
            if ((int)q.c_.size() < k + 1) q.c_.resize(k + 1, Rat(0));
            q.c_[k] += f;
            for (int i = 0; i <= d.degree(); ++i) r.c_[i + k] -= f * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    /// Monic gcd.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second;
            a = b;
            b = r;
        }
        if (!a.is_zero() && a.leading() != 1) {
            Rat inv = Rat(1) / a.leading();
            a = a * inv;
        }
        return a;
    }

    Poly derivative() const {
        Poly r;
        for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[i] * Rat(i));
        r.trim();
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Rendering like "c^2-4" or "(1/2)c+3"; used by Scalar::str().
    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rat& a = c_[i];
            if (a == 0) continue;
            bool neg = a < 0;
            Rat mag = neg ? Rat(-a) : a;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? "-" : "+";
            std::string ms = to_string(mag);
            bool frac = ms.find('/') != std::string::npos;
            if (i == 0) {
                out += ms;
            } else {
                if (mag != 1) out += frac ? "(" + ms + ")" : ms;
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    /// Number of nonzero terms.
    int term_count() const {
        int n = 0;
        for (auto& x : c_)
            if (x != 0) ++n;
        return n;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace voa

#endif
