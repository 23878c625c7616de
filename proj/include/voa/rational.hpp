#ifndef VOA_RATIONAL_HPP
#define VOA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace voa {

/// Exact rational number. All arithmetic in the library bottoms out here;
/// there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Generalized binomial coefficient: n may be any integer, k >= 0.
inline Rat binomial(long n, long k) {
    if (k < 0) return Rat(0);
    Rat acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= Rat(n - i);
        acc /= Rat(i + 1);
    }
    return acc;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool inv = e < 0;
    unsigned long k = inv ? -(unsigned long)e : (unsigned long)e;
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (inv) return Rat(1) / acc;
    return acc;
}

inline Rat factorial(long n) {
    Rat acc(1);
    for (long i = 2; i <= n; ++i) acc *= Rat(i);
    return acc;
}

}  // namespace voa

#endif
