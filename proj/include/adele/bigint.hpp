#ifndef ADELE_BIGINT_HPP
#define ADELE_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace adele {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact p-adic valuation; val(0) is undefined (asserted away by callers).
inline unsigned long p_valuation(Int x, const Int& p) {
    unsigned long v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
        x /= p;
        ++v;
    }
    return v;
}

inline Int parse_int(const std::string& s) {
    Int r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: " + s);
    return r;
}

// Decimal rationals ("0.25", "-3", "1e-3" not accepted; plain fixed point only).
Rat parse_decimal(const std::string& s);

} // namespace adele

#endif
