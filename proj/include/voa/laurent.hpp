#ifndef VOA_LAURENT_HPP
#define VOA_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "voa/scalar.hpp"

namespace voa {

/// Laurent polynomial in one formal variable.
class Laurent1 {
  public:
    Laurent1() = default;

    static Laurent1 term(int e, const Scalar& c) {
        Laurent1 p;
        p.add(e, c);
        return p;
    }

    void add(int e, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Scalar coeff(int e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Scalar() : it->second;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<int, Scalar>& terms() const { return t_; }

    Laurent1 operator+(const Laurent1& o) const {
        Laurent1 r = *this;
        for (auto& [e, c] : o.t_) r.add(e, c);
        return r;
    }

    Laurent1 operator*(const Laurent1& o) const {
        Laurent1 r;
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) r.add(e1 + e2, c1 * c2);
        return r;
    }

    bool operator==(const Laurent1& o) const { return t_ == o.t_; }

    std::string str(const std::string& var) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto& [e, c] : t_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (e != 0) out += "*" + var + "^" + std::to_string(e);
        }
        return out;
    }

  private:
    std::map<int, Scalar> t_;
};

/// Laurent polynomial in two formal variables (z1, z2) — or (t, z2) for
/// expansions around the diagonal.
class Laurent2 {
  public:
    Laurent2() = default;

    static Laurent2 term(int e1, int e2, const Scalar& c) {
        Laurent2 p;
        p.add(e1, e2, c);
        return p;
    }

    static Laurent2 constant(const Scalar& c) { return term(0, 0, c); }

    void add(int e1, int e2, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(e1, e2);
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    Scalar coeff(int e1, int e2) const {
        auto it = t_.find({e1, e2});
        return it == t_.end() ? Scalar() : it->second;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<int, int>, Scalar>& terms() const { return t_; }

    Laurent2 operator+(const Laurent2& o) const {
        Laurent2 r = *this;
        for (auto& [e, c] : o.t_) r.add(e.first, e.second, c);
        return r;
    }

    Laurent2 operator-(const Laurent2& o) const {
        Laurent2 r = *this;
        for (auto& [e, c] : o.t_) r.add(e.first, e.second, -c);
        return r;
    }

    Laurent2 operator*(const Laurent2& o) const {
        Laurent2 r;
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) r.add(e1.first + e2.first, e1.second + e2.second, c1 * c2);
        return r;
    }

    Laurent2 scale(const Scalar& s) const {
        Laurent2 r;
        for (auto& [e, c] : t_) r.add(e.first, e.second, c * s);
        return r;
    }

    Laurent2 swap_vars() const {
        Laurent2 r;
        for (auto& [e, c] : t_) r.add(e.second, e.first, c);
        return r;
    }

    bool operator==(const Laurent2& o) const { return t_ == o.t_; }
    bool operator!=(const Laurent2& o) const { return !(*this == o); }

    int min_exp(int var) const {
        if (t_.empty()) return 0;
        int m = 0;
        bool first = true;
        for (auto& [e, c] : t_) {
            int x = var == 0 ? e.first : e.second;
            if (first || x < m) m = x;
            first = false;
        }
        return m;
    }

    int max_exp(int var) const {
        if (t_.empty()) return 0;
        int m = 0;
        bool first = true;
        for (auto& [e, c] : t_) {
            int x = var == 0 ? e.first : e.second;
            if (first || x > m) m = x;
            first = false;
        }
        return m;
    }

    /// Restrict to terms whose exponent of `var` is <= cap (truncation of an
    /// expansion to a stated order).
    Laurent2 truncate(int var, int cap) const {
        Laurent2 r;
        for (auto& [e, c] : t_) {
            int x = var == 0 ? e.first : e.second;
            if (x <= cap) r.add(e.first, e.second, c);
        }
        return r;
    }

    std::string str(const std::string& v1, const std::string& v2) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto& [e, c] : t_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (e.first != 0) out += "*" + v1 + "^" + std::to_string(e.first);
            if (e.second != 0) out += "*" + v2 + "^" + std::to_string(e.second);
        }
        return out;
    }

  private:
    std::map<std::pair<int, int>, Scalar> t_;
};

/// Expansion regions for rational functions with poles along z1 = z2.
enum class Region {
    AbsZ2LtZ1,   // |z2| < |z1|: series in powers of z2/z1
    AbsZ1LtZ2,   // |z1| < |z2|: series in powers of z1/z2
    DiagLtZ2,    // |z1 - z2| < |z2|: series in t = z1 - z2 over Laurent z2
};

/// Exact rational function numerator / (z1 - z2)^sep with Laurent-polynomial
/// numerator. Monomial denominators z1^a z2^b live in the numerator as
/// negative exponents. Canonical: when sep > 0 the numerator is not
/// divisible by (z1 - z2).
class RationalFunction2 {
  public:
    RationalFunction2() = default;
    explicit RationalFunction2(Laurent2 num, int sep = 0) : num_(std::move(num)), sep_(sep) {
        if (sep_ < 0) {
            // (z1-z2)^{-sep} is a genuine Laurent polynomial factor
            Laurent2 f;
            f.add(1, 0, Scalar(1));
            f.add(0, 1, Scalar(-1));
            for (int i = 0; i < -sep_; ++i) num_ = num_ * f;
            sep_ = 0;
        }
        reduce();
    }

    const Laurent2& numerator() const { return num_; }
    int sep_power() const { return sep_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction2& o) const {
        return sep_ == o.sep_ && num_ == o.num_;
    }
    bool operator!=(const RationalFunction2& o) const { return !(*this == o); }

    RationalFunction2 operator+(const RationalFunction2& o) const {
        int s = std::max(sep_, o.sep_);
        return RationalFunction2(mul_sep(num_, s - sep_) + mul_sep(o.num_, s - o.sep_), s);
    }

    RationalFunction2 operator-(const RationalFunction2& o) const {
        int s = std::max(sep_, o.sep_);
        return RationalFunction2(mul_sep(num_, s - sep_) - mul_sep(o.num_, s - o.sep_), s);
    }

    RationalFunction2 operator*(const RationalFunction2& o) const {
        return RationalFunction2(num_ * o.num_, sep_ + o.sep_);
    }

    /// Simultaneous swap z1 <-> z2; (z2-z1)^sep = (-1)^sep (z1-z2)^sep.
    RationalFunction2 swap_vars() const {
        Laurent2 n = num_.swap_vars();
        if (sep_ % 2 != 0) n = n.scale(Scalar(-1));
        return RationalFunction2(n, sep_);
    }

    /// Truncated geometric-series expansion in the stated region, exact
    /// through `order` in the subordinate variable (z2, z1, or t = z1-z2).
    /// For Region::DiagLtZ2 the result's first slot holds powers of t.
    Laurent2 expand(Region region, int order) const;

    std::string str() const;

  private:
    static Laurent2 mul_sep(const Laurent2& p, int k) {
        Laurent2 r = p;
        Laurent2 f;
        f.add(1, 0, Scalar(1));
        f.add(0, 1, Scalar(-1));
        for (int i = 0; i < k; ++i) r = r * f;
        return r;
    }

    void reduce();

    Laurent2 num_;
    int sep_ = 0;
};

}  // namespace voa

#endif
