#ifndef ADELE_PRIMES_HPP
#define ADELE_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace adele {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// q = p^k with p prime, k >= 1. On success stores the base and exponent.
bool is_prime_power_u64(std::uint64_t q, std::uint64_t* base = nullptr, unsigned* exp = nullptr);

// Ascending primes in [2, bound].
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Smallest prime strictly greater than n (n + something within 64 bits).
std::uint64_t next_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

} // namespace adele

#endif
