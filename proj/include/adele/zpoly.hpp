#ifndef ADELE_ZPOLY_HPP
#define ADELE_ZPOLY_HPP

#include <utility>
#include <vector>

#include "adele/bigint.hpp"

namespace adele {

// Dense integer polynomial, coefficients constant..leading, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly x_power(std::size_t k);

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& lc() const { return c_.back(); }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;
    ZPoly derivative() const;
    Int content() const;

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly operator*(const Int& k) const;
    ZPoly shifted(std::size_t k) const; // multiply by x^k
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Int> c_;
};

// Resultant via the subresultant pseudo-remainder sequence.
Int resultant(const ZPoly& a, const ZPoly& b);

// disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f), n = deg f >= 1.
Int poly_discriminant(const ZPoly& f);

// gcd(f, f') constant over Q.
bool is_squarefree(const ZPoly& f);

// Number of distinct real roots by Sturm's theorem; requires squarefree input.
int count_real_roots(const ZPoly& f);

// (r1, r2) with r1 + 2 r2 = deg f. Throws NonSquarefree.
std::pair<int, int> signature_of(const ZPoly& f);

} // namespace adele

#endif
