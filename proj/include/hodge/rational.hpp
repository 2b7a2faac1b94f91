#pragma once

#include <gmpxx.h>

#include <string>

#include "hodge/errors.hpp"

namespace hodge {

// Exact scalar types used throughout. mpq_class keeps values in lowest terms
// with positive denominator after every operation, which is exactly the
// invariant the rest of the code relies on for comparisons and printing.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("cannot parse rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical display form: "3", "-1/2".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Explicit num/den form used by the cache file: "3/1", "-1/2".
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return f;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0.
inline Rational harmonic(int k) {
    Rational h = 0;
    for (int j = 1; j <= k; ++j) h += Rational(1, j);
    return h;
}

}  // namespace hodge
