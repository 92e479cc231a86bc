#include "adele/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace adele {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Integer k-th root by Newton + correction; returns floor(n^(1/k)).
std::uint64_t iroot(std::uint64_t n, unsigned k) {
    if (n == 0) return 0;
    std::uint64_t r = (std::uint64_t)std::pow((double)n, 1.0 / k);
    auto powchk = [&](std::uint64_t b) -> bool {
        // b^k <= n without overflow
        unsigned __int128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= b;
            if (acc > n) return false;
        }
        return true;
    };
    while (r > 1 && !powchk(r)) --r;
    while (powchk(r + 1)) ++r;
    return r;
}

} // namespace

bool is_prime_power_u64(std::uint64_t q, std::uint64_t* base, unsigned* exp) {
    if (q < 2) return false;
    for (unsigned k = 1; k <= 63; ++k) {
        std::uint64_t b = iroot(q, k);
        if (b < 2) break;
        unsigned __int128 acc = 1;
        for (unsigned i = 0; i < k; ++i) acc *= b;
        if (acc == q && is_prime_u64(b)) {
            if (base) *base = b;
            if (exp) *exp = k;
            return true;
        }
    }
    return false;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> comp(bound + 1, false);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
    }
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c <= 2) return 2;
    if ((c & 1) == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

} // namespace adele
