#include "adele/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "adele/errors.hpp"
#include "adele/parallel.hpp"
#include "adele/primes.hpp"

namespace adele {

namespace {

std::string degrees_str(const std::vector<unsigned>& ds) {
    std::string s = "{";
    for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + std::to_string(ds[i]);
    return s + "}";
}

struct ScanHit {
    std::uint64_t prime;
    std::string reason;
};

struct ScanResult {
    std::optional<ScanHit> hit; // smallest refuting prime in scan order
    std::vector<std::uint64_t> skipped;
};

// Scans primes <= bound in ascending chunks; per prime, `compare` returns a
// refutation reason, or nullopt when the prime is fine or must be skipped
// (signalled via the skipped flag).
template <class Compare>
ScanResult scan_primes(const NumberFieldSpec& left, const NumberFieldSpec& right, std::uint64_t bound,
                       Compare compare) {
    std::vector<std::uint64_t> primes = primes_up_to(bound);
    std::atomic<std::size_t> stop_chunk{SIZE_MAX};
    const std::size_t chunk_size = 256;
    auto eval = [&](std::size_t lo, std::size_t hi) {
        ScanResult r;
        if (lo / chunk_size > stop_chunk.load(std::memory_order_relaxed)) return r;
        for (std::size_t i = lo; i < hi; ++i) {
            std::uint64_t p = primes[i];
            PrimeSplitting sl = splitting_type(left, p);
            PrimeSplitting sr = splitting_type(right, p);
            if (sl.status != PrimeSplitting::Status::Unramified ||
                sr.status != PrimeSplitting::Status::Unramified) {
                r.skipped.push_back(p);
                continue;
            }
            if (auto reason = compare(p, sl, sr)) {
                r.hit = ScanHit{p, *reason};
                std::size_t me = lo / chunk_size;
                std::size_t cur = stop_chunk.load(std::memory_order_relaxed);
                while (me < cur && !stop_chunk.compare_exchange_weak(cur, me)) {
                }
                return r;
            }
        }
        return r;
    };
    return parallel_chunk_reduce<ScanResult>(
        primes.size(), chunk_size, ScanResult{}, eval, [](ScanResult a, ScanResult b) {
            if (!a.hit) {
                // keep skips up to the first refutation only
                a.skipped.insert(a.skipped.end(), b.skipped.begin(), b.skipped.end());
                a.hit = std::move(b.hit);
            }
            return a;
        });
}

template <class Compare>
EquivalenceVerdict run_check(const NumberFieldSpec& left, const NumberFieldSpec& right,
                             std::uint64_t prime_bound, bool compare_signatures, Compare compare) {
    EquivalenceVerdict v;
    if (compare_signatures && left.signature() != right.signature()) {
        v.kind = EquivalenceVerdict::Kind::Refuted;
        auto [l1, l2] = left.signature();
        auto [r1, r2] = right.signature();
        v.reason = "signatures differ: (" + std::to_string(l1) + "," + std::to_string(l2) + ") vs (" +
                   std::to_string(r1) + "," + std::to_string(r2) + ")";
        return v;
    }
    ScanResult scan = scan_primes(left, right, prime_bound, compare);
    if (scan.hit) {
        v.kind = EquivalenceVerdict::Kind::Refuted;
        v.prime = scan.hit->prime;
        v.reason = scan.hit->reason;
        return v;
    }
    v.kind = EquivalenceVerdict::Kind::ConsistentUpTo;
    v.bound = prime_bound;
    v.skipped_primes = std::move(scan.skipped);
    return v;
}

} // namespace

EquivalenceVerdict check_local_equivalence(const NumberFieldSpec& left, const NumberFieldSpec& right,
                                           std::uint64_t prime_bound) {
    return run_check(left, right, prime_bound, /*compare_signatures=*/true,
                     [](std::uint64_t, const PrimeSplitting& a, const PrimeSplitting& b)
                         -> std::optional<std::string> {
                         if (a.degrees == b.degrees) return std::nullopt;
                         return "residue degree multisets differ: " + degrees_str(a.degrees) + " vs " +
                                degrees_str(b.degrees);
                     });
}

EquivalenceVerdict check_gcd_equivalence(const NumberFieldSpec& left, const NumberFieldSpec& right,
                                         std::uint64_t prime_bound) {
    // locally GCD equivalent is a condition at finite primes only
    return run_check(left, right, prime_bound, /*compare_signatures=*/false,
                     [](std::uint64_t, const PrimeSplitting& a, const PrimeSplitting& b)
                         -> std::optional<std::string> {
                         auto g = [](const std::vector<unsigned>& ds) {
                             unsigned r = 0;
                             for (unsigned d : ds) r = std::gcd(r, d);
                             return r;
                         };
                         unsigned ga = g(a.degrees), gb = g(b.degrees);
                         if (ga == gb) return std::nullopt;
                         return "residue degree gcds differ: " + std::to_string(ga) + " vs " +
                                std::to_string(gb);
                     });
}

PlaceBijectionData build_place_matching(const NumberFieldSpec& left, const NumberFieldSpec& right,
                                        std::uint64_t prime_bound) {
    if (left.signature() != right.signature())
        fail(errc::signature_mismatch, left.label() + " and " + right.label() + " have different signatures");
    EquivalenceVerdict v = check_local_equivalence(left, right, prime_bound);
    if (v.refuted()) {
        if (!v.prime) fail(errc::signature_mismatch, v.reason);
        fail(errc::matching_obstruction, "at p=" + std::to_string(*v.prime) + ": " + v.reason);
    }
    PlaceBijectionData phi;
    phi.left_field = left.label();
    phi.right_field = right.label();
    phi.verified_bound = prime_bound;
    phi.skipped_primes = v.skipped_primes;
    // canonical matching: identity on degree-sorted slots, so no stored perms
    auto [r1, r2] = left.signature();
    phi.real_map.resize((std::size_t)r1);
    std::iota(phi.real_map.begin(), phi.real_map.end(), 0u);
    phi.complex_map.resize((std::size_t)r2);
    std::iota(phi.complex_map.begin(), phi.complex_map.end(), 0u);
    return phi;
}

BrauerClass gcd_witness_algebra(const NumberFieldSpec& K, const NumberFieldSpec& Kprime, std::uint64_t p0,
                                std::uint64_t search_ceiling) {
    auto unram = [](const NumberFieldSpec& f, std::uint64_t p) {
        return splitting_type(f, p).status == PrimeSplitting::Status::Unramified;
    };
    if (!is_prime_u64(p0)) fail(errc::composite_modulus, std::to_string(p0) + " is not prime");
    if (!unram(K, p0) || !unram(Kprime, p0))
        fail(errc::invalid_input, "p0 = " + std::to_string(p0) + " must be unramified in both fields");
    unsigned g = *residue_degree_gcd(K, p0);
    unsigned gp = *residue_degree_gcd(Kprime, p0);
    if (gp >= g)
        fail(errc::precondition_gcd, "need gcd over " + Kprime.label() + " (" + std::to_string(gp) +
                                         ") strictly below gcd over " + K.label() + " (" + std::to_string(g) + ")");

    std::vector<std::uint64_t> chosen{p0};
    for (std::uint64_t p = 2; chosen.size() < g; p = next_prime_u64(p)) {
        if (p > search_ceiling)
            fail(errc::search_exhausted, "fewer than " + std::to_string(g - 1) +
                                             " auxiliary primes below ceiling " + std::to_string(search_ceiling));
        if (p == p0 || !unram(K, p) || !unram(Kprime, p)) continue;
        if (*residue_degree_gcd(K, p) == g) chosen.push_back(p);
    }
    std::sort(chosen.begin(), chosen.end());

    BrauerClass witness{"Q", {}};
    for (std::uint64_t p : chosen) witness.inv.emplace(Place::finite(p, 0), QmodZ::of(1, (std::int64_t)g));
    require_valid(witness);

    std::uint64_t bound = *std::max_element(chosen.begin(), chosen.end());
    if (!is_trivial(restrict_from_Q(witness, K, bound)))
        fail(errc::invalid_input, "witness restriction to " + K.label() + " is unexpectedly nontrivial");
    if (is_trivial(restrict_from_Q(witness, Kprime, bound)))
        fail(errc::invalid_input, "witness restriction to " + Kprime.label() + " is unexpectedly trivial");
    return witness;
}

} // namespace adele
