#ifndef ADELE_MATCHING_HPP
#define ADELE_MATCHING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace adele {

// A verified place bijection between two locally equivalent-looking fields.
// Finite places are matched slot-to-slot for every prime <= verified_bound
// that is unramified on both sides; the remaining primes <= verified_bound
// are listed in skipped_primes. Only non-identity slot permutations are
// stored explicitly.
struct PlaceBijectionData {
    std::string left_field;
    std::string right_field;
    std::uint64_t verified_bound = 0;
    std::vector<std::uint64_t> skipped_primes; // sorted
    std::map<std::uint64_t, std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> real_map;    // left real index -> right real index
    std::vector<std::uint32_t> complex_map;

    bool covers_prime(std::uint64_t p) const {
        return p <= verified_bound &&
               !std::binary_search(skipped_primes.begin(), skipped_primes.end(), p);
    }

    // Slot image over p; slots without a stored permutation map to themselves.
    std::uint32_t map_slot(std::uint64_t p, std::uint32_t slot) const {
        auto it = perms.find(p);
        if (it == perms.end() || slot >= it->second.size()) return slot;
        return it->second[slot];
    }

    PlaceBijectionData inverse() const {
        PlaceBijectionData inv;
        inv.left_field = right_field;
        inv.right_field = left_field;
        inv.verified_bound = verified_bound;
        inv.skipped_primes = skipped_primes;
        for (const auto& [p, perm] : perms) {
            std::vector<std::uint32_t> ip(perm.size());
            for (std::uint32_t i = 0; i < perm.size(); ++i) ip[perm[i]] = i;
            inv.perms[p] = std::move(ip);
        }
        auto invert = [](const std::vector<std::uint32_t>& m) {
            std::vector<std::uint32_t> r(m.size());
            for (std::uint32_t i = 0; i < m.size(); ++i) r[m[i]] = i;
            return r;
        };
        inv.real_map = invert(real_map);
        inv.complex_map = invert(complex_map);
        return inv;
    }
};

} // namespace adele

#endif
