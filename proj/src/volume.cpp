#include "adele/volume.hpp"

#include <algorithm>
#include <cassert>

#include "adele/errors.hpp"
#include "adele/primes.hpp"

namespace adele {

Rat lambda_factor(const Int& q, unsigned nd, unsigned d_v) {
    if (q < 2) fail(errc::invalid_input, "lambda factor needs q >= 2");
    if (d_v < 2) fail(errc::invalid_input, "lambda factor needs d_v >= 2");
    if (nd % d_v != 0)
        fail(errc::degree_mismatch,
             "d_v = " + std::to_string(d_v) + " does not divide nd = " + std::to_string(nd));
    unsigned n_v = nd / d_v;

    Int closed = 1;
    for (unsigned i = 1; i < nd; ++i) {
        if (n_v != 1 && i % d_v == 0) continue;
        closed *= int_pow(q, i) - 1;
    }

    Int numer = 1;
    for (unsigned i = 1; i < nd; ++i) numer *= int_pow(q, i + 1) - 1;
    Int denom = 1;
    for (unsigned i = 1; i + 1 <= n_v; ++i) denom *= int_pow(q, (unsigned long)d_v * (i + 1)) - 1;
    Int norm_torus = 0;
    for (unsigned i = 0; i < d_v; ++i) norm_torus += int_pow(q, i);
    Rat quotient(numer, denom * norm_torus);
    quotient.canonicalize();

    // Guard against transcription drift between the two published forms.
    if (quotient != Rat(closed))
        fail(errc::invalid_input, "lambda factor forms disagree (internal check)");
    return quotient;
}

namespace {

// prod_{i=1}^{m} i! / (2pi)^{i+1} as an interval.
Interval factorial_over_two_pi(unsigned m, mpfr_prec_t prec) {
    Int numer = 1, fact = 1;
    for (unsigned i = 1; i <= m; ++i) {
        fact *= i;
        numer *= fact;
    }
    unsigned long exponent = ((unsigned long)m * (m + 3)) / 2; // sum of i+1, i = 1..m
    Interval two_pi = Interval::exact_ui(2, prec) * Interval::pi(prec);
    return Interval::exact_int(numer, prec) / two_pi.pow_ui(exponent);
}

Interval half_integer_power(const Int& base, unsigned long twice_exponent, mpfr_prec_t prec) {
    Int whole = int_pow(base, twice_exponent / 2);
    if (twice_exponent % 2 == 0) return Interval::exact_int(whole, prec);
    return Interval::exact_int(whole * whole * base, prec).sqrt();
}

} // namespace

VolumeResult volume_sl_n_d(const VolumeInput& input) {
    if (input.n < 1 || input.d < 1) fail(errc::invalid_input, "need n >= 1 and d >= 1");
    unsigned nd = input.n * input.d;
    if (nd < 2) fail(errc::degenerate_group, "nd = 1 gives a trivial group");
    if (input.field_degree < 1) fail(errc::invalid_input, "field degree must be >= 1");
    if (input.abs_disc < 1) fail(errc::invalid_input, "|D_K| must be >= 1");
    mpfr_prec_t prec = input.precision_bits;
    if (prec < 16 || prec > (1 << 24))
        fail(errc::precision_unattainable, "working precision cannot bound rounding");

    // zeta list must cover s = 2..nd exactly
    std::vector<const ZetaEstimate*> by_s(nd + 1, nullptr);
    for (const ZetaEstimate& z : input.zeta) {
        if (z.s < 2 || z.s > nd || by_s[z.s])
            fail(errc::invalid_input, "zeta list does not match s = 2.." + std::to_string(nd));
        by_s[z.s] = &z;
    }
    for (unsigned s = 2; s <= nd; ++s)
        if (!by_s[s]) fail(errc::missing_zeta, "no zeta estimate for s = " + std::to_string(s));

    VolumeResult out;
    out.disc_power = half_integer_power(input.abs_disc, (unsigned long)nd * nd - 1, prec);
    out.archimedean = factorial_over_two_pi(nd - 1, prec).pow_ui(input.field_degree);
    out.zeta_product = Interval::exact_ui(1, prec);
    for (unsigned s = 2; s <= nd; ++s) out.zeta_product = out.zeta_product * by_s[s]->enclosure();
    out.lambda_product = 1;
    for (const RamDatum& r : input.ram) {
        if (!is_prime_power_u64(r.q))
            fail(errc::invalid_input, "q = " + std::to_string(r.q) + " is not a prime power");
        out.lambda_product *= lambda_factor(Int((unsigned long)r.q), nd, r.d_v);
    }

    Interval total = out.disc_power * out.archimedean * out.zeta_product *
                     Interval::exact_rat(out.lambda_product, prec);
    out.value = total.mid();
    out.error_bound = total.rad();
    return out;
}

VolumeResult covolume_cf(const Int& abs_disc, const ZetaEstimate& zeta2, unsigned long ext_degree,
                         mpfr_prec_t precision_bits) {
    if (ext_degree < 1) fail(errc::invalid_input, "extension degree must be >= 1");
    if (abs_disc < 1) fail(errc::invalid_input, "|D_K| must be >= 1");
    mpfr_prec_t prec = precision_bits;
    if (prec < 16 || prec > (1 << 24))
        fail(errc::precision_unattainable, "working precision cannot bound rounding");

    VolumeResult out;
    out.disc_power = half_integer_power(abs_disc, 3, prec);
    Interval denom = Interval::exact_ui(1ul << 12, prec) * Interval::pi(prec).pow_ui(7) *
                     Interval::exact_ui(ext_degree, prec);
    out.archimedean = denom.recip();
    out.zeta_product = zeta2.enclosure();
    out.lambda_product = 1;

    Interval total = out.disc_power * out.archimedean * out.zeta_product;
    out.value = total.mid();
    out.error_bound = total.rad();
    return out;
}

ValueWithError exponent_product(unsigned d, mpfr_prec_t prec) {
    if (d < 2) fail(errc::invalid_input, "exponent product needs d >= 2");
    if (prec < 16 || prec > (1 << 24))
        fail(errc::precision_unattainable, "working precision cannot bound rounding");
    Interval v = factorial_over_two_pi(d - 1, prec);
    return ValueWithError{v.mid(), v.rad(), v};
}

} // namespace adele
