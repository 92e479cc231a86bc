#ifndef ADELE_EQUIVALENCE_HPP
#define ADELE_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adele/brauer.hpp"
#include "adele/fieldlab.hpp"
#include "adele/matching.hpp"

namespace adele {

// Refutation is definitive; consistency is evidence up to the scanned bound,
// never proof.
struct EquivalenceVerdict {
    enum class Kind { Refuted, ConsistentUpTo };

    Kind kind = Kind::ConsistentUpTo;
    std::optional<std::uint64_t> prime; // refuting prime; absent for archimedean refutations
    std::string reason;                 // Refuted only
    std::uint64_t bound = 0;            // ConsistentUpTo only
    std::vector<std::uint64_t> skipped_primes;

    bool refuted() const { return kind == Kind::Refuted; }
};

// Compares signatures and residue-degree multisets at every prime <= bound
// that is unramified in both fields; the rest are skipped and listed.
EquivalenceVerdict check_local_equivalence(const NumberFieldSpec& left, const NumberFieldSpec& right,
                                           std::uint64_t prime_bound);

// Same scan on gcds of residue degrees (locally GCD equivalent fields).
EquivalenceVerdict check_gcd_equivalence(const NumberFieldSpec& left, const NumberFieldSpec& right,
                                         std::uint64_t prime_bound);

// Canonical matching: slot i over p maps to slot i over p on degree-sorted
// slots; archimedean places matched by type and index. Throws
// SignatureMismatch or MatchingObstruction(p).
PlaceBijectionData build_place_matching(const NumberFieldSpec& left, const NumberFieldSpec& right,
                                        std::uint64_t prime_bound);

// Witness division algebra over Q from the gcd-refutation at p0: local
// invariant 1/g at p0 and at the first g-1 further primes, unramified in
// both fields, whose K-gcd equals g. The result restricts trivially to K
// and nontrivially to K' (verified before return).
BrauerClass gcd_witness_algebra(const NumberFieldSpec& K, const NumberFieldSpec& Kprime, std::uint64_t p0,
                                std::uint64_t search_ceiling = 1000000);

} // namespace adele

#endif
