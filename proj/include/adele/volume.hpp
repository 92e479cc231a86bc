#ifndef ADELE_VOLUME_HPP
#define ADELE_VOLUME_HPP

#include <cstdint>
#include <vector>

#include "adele/bigint.hpp"
#include "adele/fieldlab.hpp"
#include "adele/interval.hpp"

namespace adele {

// Per-place ramification datum: residue field size and local degree.
struct RamDatum {
    std::uint64_t q = 2; // prime power >= 2
    unsigned d_v = 2;    // order of the local invariant, >= 2, divides nd
};

// Local correction factor of the volume formula at a ramified place, exact.
// Both published forms are evaluated and cross-asserted: the closed form
//   n_v = 1:  prod_{i=1}^{nd-1} (q^i - 1)
//   n_v > 1:  prod_{i=1, d_v !| i}^{nd-1} (q^i - 1)
// and the quotient form
//   prod_{i=1}^{nd-1} (q^{i+1} - 1) / [prod_{i=1}^{n_v-1} (q^{d_v(i+1)} - 1) * sum_{i=0}^{d_v-1} q^i].
Rat lambda_factor(const Int& q, unsigned nd, unsigned d_v);

struct VolumeInput {
    unsigned field_degree = 1; // [K:Q]
    Int abs_disc = 1;          // |D_K|
    unsigned n = 1;            // matrix size
    unsigned d = 1;            // division algebra degree
    std::vector<RamDatum> ram;
    std::vector<ZetaEstimate> zeta; // s = 2..nd, exactly
    mpfr_prec_t precision_bits = 128;
};

struct VolumeResult {
    Real value;
    Real error_bound;
    // per-factor breakdown
    Interval disc_power;
    Interval archimedean;
    Interval zeta_product;
    Rat lambda_product;

    Interval enclosure() const { return Interval::from_value_error(value, error_bound); }
};

// Volume of SL_n(R)\G for a maximal order R in the degree-d division algebra:
//   |D_K|^((nd)^2-1)/2 * (prod_{i=1}^{nd-1} i!/(2pi)^{i+1})^{[K:Q]}
//   * prod_{i=1}^{nd-1} zeta_K(i+1) * prod_{v in ram} lambda_v.
VolumeResult volume_sl_n_d(const VolumeInput& input);

// Chinburg-Friedman covolume D^{3/2} zeta_K(2) / (2^12 pi^7 ext_degree).
VolumeResult covolume_cf(const Int& abs_disc, const ZetaEstimate& zeta2, unsigned long ext_degree,
                         mpfr_prec_t precision_bits = 128);

struct ValueWithError {
    Real value;
    Real error_bound;
    Interval enclosure;
};

// prod_{i=1}^{d-1} i!/(2pi)^{i+1}, rigorously enclosed.
ValueWithError exponent_product(unsigned d, mpfr_prec_t precision_bits = 128);

} // namespace adele

#endif
