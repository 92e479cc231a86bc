#ifndef ADELE_FIELDLAB_HPP
#define ADELE_FIELDLAB_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adele/bigint.hpp"
#include "adele/interval.hpp"
#include "adele/zpoly.hpp"

namespace adele {

// (e, f) ramification pairs for one rational prime, user supplied.
using RamPairs = std::vector<std::pair<unsigned, unsigned>>;

// A number field presented by a monic irreducible integer polynomial plus
// optional user-supplied invariants. Construction verifies monicity, an
// irreducibility screen (irreducible mod some prime <= 200, else a
// degree-pattern sieve over 25 unramified primes), and sum(e*f) = n for
// every supplied ramified entry.
class NumberFieldSpec {
public:
    NumberFieldSpec(std::string label, ZPoly minpoly,
                    std::optional<Int> field_discriminant = std::nullopt,
                    std::map<std::uint64_t, RamPairs> supplied_ramified = {});

    const std::string& label() const { return label_; }
    const ZPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    const Int& poly_disc() const { return poly_disc_; }
    const std::optional<Int>& field_discriminant() const { return field_disc_; }
    const std::map<std::uint64_t, RamPairs>& supplied_ramified() const { return ram_; }

    // (r1, r2), computed once at construction by Sturm counting.
    std::pair<int, int> signature() const { return sig_; }

private:
    std::string label_;
    ZPoly minpoly_;
    Int poly_disc_;
    std::optional<Int> field_disc_;
    std::map<std::uint64_t, RamPairs> ram_;
    std::pair<int, int> sig_;
};

struct PrimeSplitting {
    enum class Status { Unramified, RamifiedUserSupplied, Undetermined };

    std::uint64_t p = 0;
    std::vector<unsigned> degrees; // residue degrees f(v/p), sorted ascending
    Status status = Status::Undetermined;

    bool determined() const { return status != Status::Undetermined; }
};

PrimeSplitting splitting_type(const NumberFieldSpec& field, std::uint64_t p);

// gcd of residue degrees over p; nullopt when the splitting is Undetermined.
std::optional<unsigned> residue_degree_gcd(const NumberFieldSpec& field, std::uint64_t p);

// Local degrees [K_v : Q_p] in slot order: f for unramified p, e*f for
// supplied ramified data. Nullopt when Undetermined.
std::optional<std::vector<unsigned>> local_degrees(const NumberFieldSpec& field, std::uint64_t p);

struct ZetaEstimate {
    unsigned s = 2;
    std::uint64_t prime_bound = 2;
    Real value;       // truncated Euler product (midpoint of the enclosure)
    Real error_bound; // rigorous |true - value| bound: rounding + Euler tail
                      // + the bracket for Undetermined primes

    Interval enclosure() const { return Interval::from_value_error(value, error_bound); }
};

// Truncated Dedekind zeta Euler product over primes <= prime_bound.
// Undetermined primes contribute the geometric mean of the extreme local
// brackets [1, (1 - p^-s)^-n], with the bracket folded into error_bound.
ZetaEstimate zeta_partial(const NumberFieldSpec& field, unsigned s, std::uint64_t prime_bound,
                          mpfr_prec_t precision_bits = 128);

} // namespace adele

#endif
