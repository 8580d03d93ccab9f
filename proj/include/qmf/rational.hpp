#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qmf {

using Integer  = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not reduce; this does.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer int_pow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Rising factorial x(x+1)...(x+n-1); empty product for n = 0.
inline Integer pochhammer(long x, unsigned long n) {
    Integer r(1);
    for (unsigned long i = 0; i < n; ++i) r *= Integer(x + static_cast<long>(i));
    return r;
}

// "num" when the denominator is 1, "num/den" otherwise.
inline std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qmf
