#pragma once

// Exact arithmetic base types. Everything in this toolkit is computed over
// the rationals; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dcg {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; always build rationals through this.
inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Int pow_int(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// True if q is an integer.
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace dcg
