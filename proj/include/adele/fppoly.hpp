#ifndef ADELE_FPPOLY_HPP
#define ADELE_FPPOLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "adele/zpoly.hpp"

namespace adele {

// Dense polynomial over F_p, p an odd-sized or even prime < 2^62.
class FpPoly {
public:
    FpPoly() : p_(2) {}
    explicit FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) { trim(); }
    static FpPoly reduce(const ZPoly& f, std::uint64_t p);
    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    std::uint64_t p() const { return p_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t lc() const { return c_.back(); }
    std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    FpPoly add(const FpPoly& o) const;
    FpPoly sub(const FpPoly& o) const;
    FpPoly mul(const FpPoly& o) const;
    FpPoly mul_scalar(std::uint64_t k) const;
    FpPoly rem(const FpPoly& mod) const;
    FpPoly derivative() const;
    FpPoly monic() const;
    // this^e mod f, e an arbitrary-precision exponent
    FpPoly powmod(const Int& e, const FpPoly& mod) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    // degree first, then coefficient lists from the constant term up
    bool operator<(const FpPoly& o) const;

private:
    void trim();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_; // constant..leading
};

FpPoly fp_gcd(FpPoly a, FpPoly b); // monic gcd

struct FpFactor {
    FpPoly poly;    // monic irreducible
    unsigned mult;
};

// Full factorization of f mod p into monic irreducibles, sorted canonically
// (degree, then lex on coefficient lists). Throws CompositeModulus if p is
// not prime and InvalidInput if f vanishes mod p.
std::vector<FpFactor> factor_mod_p_full(const ZPoly& f, std::uint64_t p);

// Degree multiset with multiplicity: degree -> count.
std::map<unsigned, unsigned> factor_mod_p(const ZPoly& f, std::uint64_t p);

} // namespace adele

#endif
