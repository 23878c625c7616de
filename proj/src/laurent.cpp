#include "voa/laurent.hpp"

#include <vector>

namespace voa {

namespace {

// Divide a Laurent polynomial by (z1 - z2), exactly. Returns false when not
// divisible. Works in the Laurent ring: z2 is invertible, so divisibility is
// equivalent to vanishing under z1 -> z2.
bool divide_by_diff(const Laurent2& p, Laurent2& quotient) {
    if (p.is_zero()) {
        quotient = Laurent2();
        return true;
    }
    // Collect coefficients of powers of z1.
    std::map<int, Laurent1> by_z1;
    for (auto& [e, c] : p.terms()) by_z1[e.first].add(e.second, c);
    int lo = by_z1.begin()->first;
    int hi = by_z1.rbegin()->first;
    // (z1 - z2) q = p  with q_e determined from the top:
    //   q_{hi-1} = p_hi,  q_{e-1} = p_e + z2 q_e,  and  -z2 q_lo == p_lo.
    std::map<int, Laurent1> q;
    Laurent1 carry;  // q_e while descending
    for (int e = hi; e > lo; --e) {
        Laurent1 pe = by_z1.count(e) ? by_z1[e] : Laurent1();
        Laurent1 qe = pe;
        // + z2 * carry  (carry = q_e from previous step, i.e. q at exponent e)
        for (auto& [k, c] : carry.terms()) qe.add(k + 1, c);
        q[e - 1] = qe;
        carry = qe;
    }
    // Consistency at the bottom: -z2 q_lo == p_lo.
    Laurent1 plo = by_z1.count(lo) ? by_z1[lo] : Laurent1();
    Laurent1 check;
    for (auto& [k, c] : carry.terms()) check.add(k + 1, -c);
    if (!(check == plo)) return false;
    quotient = Laurent2();
    for (auto& [e1, pol] : q)
        for (auto& [e2, c] : pol.terms()) quotient.add(e1, e2, c);
    return true;
}

}  // namespace

void RationalFunction2::reduce() {
    while (sep_ > 0) {
        Laurent2 q;
        if (!divide_by_diff(num_, q)) break;
        num_ = q;
        --sep_;
    }
}

Laurent2 RationalFunction2::expand(Region region, int order) const {
    if (order < 0) throw std::invalid_argument("RationalFunction2::expand: order must be >= 0");
    const int n = sep_;
    Laurent2 out;
    switch (region) {
        case Region::AbsZ2LtZ1: {
            // (z1-z2)^{-n} = sum_{i>=0} C(n-1+i, n-1) z2^i z1^{-n-i}
            for (auto& [e, c] : num_.terms()) {
                for (int i = 0; e.second + i <= order; ++i)
                    out.add(e.first - n - i, e.second + i, c * Scalar(binomial(n - 1 + i, i)));
            }
            return out.truncate(1, order);
        }
        case Region::AbsZ1LtZ2: {
            // (z1-z2)^{-n} = (-1)^n sum_{i>=0} C(n-1+i, n-1) z1^i z2^{-n-i}
            Scalar sgn(n % 2 == 0 ? 1 : -1);
            for (auto& [e, c] : num_.terms()) {
                for (int i = 0; e.first + i <= order; ++i)
                    out.add(e.first + i, e.second - n - i, c * sgn * Scalar(binomial(n - 1 + i, i)));
            }
            return out.truncate(0, order);
        }
        case Region::DiagLtZ2: {
            // Substitute z1 = z2 + t; (z1-z2)^{-n} = t^{-n}. Result over
            // (t, z2) with t in the first slot, exact through t^order.
            for (auto& [e, c] : num_.terms()) {
                int k = e.first;  // power of z1 in the numerator
                // (z2+t)^k = sum_{i>=0} C(k,i) t^i z2^{k-i}; infinite for k<0.
                for (int i = 0; i - n <= order; ++i) {
                    if (k >= 0 && i > k) break;
                    out.add(i - n, e.second + k - i, c * Scalar(binomial(k, i)));
                }
            }
            return out.truncate(0, order);
        }
    }
    throw std::logic_error("unreachable");
}

std::string RationalFunction2::str() const {
    // Factored text: pull global monomial content out of the numerator.
    int a = num_.min_exp(0), b = num_.min_exp(1);
    Laurent2 shifted;
    for (auto& [e, c] : num_.terms()) shifted.add(e.first - a, e.second - b, c);
    std::string out = shifted.str("z1", "z2");
    if (shifted.terms().size() > 1) out = "(" + out + ")";
    if (a != 0) out += " * z1^" + std::to_string(a);
    if (b != 0) out += " * z2^" + std::to_string(b);
    if (sep_ != 0) out += " / (z1-z2)^" + std::to_string(sep_);
    return out;
}

}  // namespace voa
