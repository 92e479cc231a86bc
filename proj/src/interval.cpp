#include "adele/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace adele {

Real Real::of_ui(unsigned long x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_ui(r.v_, x, rnd);
    return r;
}

Real Real::of_int(const Int& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), rnd);
    return r;
}

Real Real::of_rat(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), rnd);
    return r;
}

Real Real::of_str(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, rnd) != 0)
        throw std::invalid_argument("bad real literal: " + s);
    return r;
}

std::string Real::to_string() const {
    char* buf = nullptr;
    // one extra digit over ceil(prec*log10(2)) keeps the string round-trippable
    long digits = (long)(prec() * 0.30103) + 3;
    if (mpfr_asprintf(&buf, "%.*Re", (int)digits, v_) < 0)
        throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ <= hi_)) throw std::logic_error("interval bounds out of order");
}

Interval Interval::exact_ui(unsigned long x, mpfr_prec_t prec) {
    return {Real::of_ui(x, prec, MPFR_RNDD), Real::of_ui(x, prec, MPFR_RNDU)};
}

Interval Interval::exact_int(const Int& x, mpfr_prec_t prec) {
    return {Real::of_int(x, prec, MPFR_RNDD), Real::of_int(x, prec, MPFR_RNDU)};
}

Interval Interval::exact_rat(const Rat& x, mpfr_prec_t prec) {
    return {Real::of_rat(x, prec, MPFR_RNDD), Real::of_rat(x, prec, MPFR_RNDU)};
}

Interval Interval::pi(mpfr_prec_t prec) {
    Real lo(prec), hi(prec);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::from_value_error(const Real& v, const Real& e) {
    if (e.sign() < 0) throw std::invalid_argument("negative error bound");
    Real lo(v.prec()), hi(v.prec());
    mpfr_sub(lo.raw(), v.raw(), e.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), v.raw(), e.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Real Interval::mid() const {
    Real m(prec());
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

Real Interval::rad() const {
    Real m = mid();
    Real a(prec()), b(prec());
    mpfr_sub(a.raw(), hi_.raw(), m.raw(), MPFR_RNDU);
    mpfr_sub(b.raw(), m.raw(), lo_.raw(), MPFR_RNDU);
    return a >= b ? a : b;
}

Real Interval::width() const {
    Real w(prec());
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

bool Interval::contains_rat(const Rat& x) const {
    return mpfr_cmp_q(lo_.raw(), x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.raw(), x.get_mpq_t()) >= 0;
}

Interval operator+(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval operator-(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real lo(p), hi(p);
    mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    // Moore multiplication: extremes over the four endpoint products.
    Real lo(p), hi(p), t(p);
    mpfr_mul(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
    mpfr_mul(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_min(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);

    mpfr_mul(hi.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    mpfr_mul(t.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    mpfr_max(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::recip() const {
    if (lo_.sign() <= 0 && hi_.sign() >= 0)
        throw std::domain_error("interval reciprocal across zero");
    Real lo(prec()), hi(prec());
    mpfr_ui_div(lo.raw(), 1, hi_.raw(), MPFR_RNDD);
    mpfr_ui_div(hi.raw(), 1, lo_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.recip(); }

Interval Interval::sqrt() const {
    if (lo_.sign() < 0) throw std::domain_error("interval sqrt of negative");
    Real lo(prec()), hi(prec());
    mpfr_sqrt(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), hi_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::pow_ui(unsigned long e) const {
    if (e == 0) return exact_ui(1, prec());
    // x^e is monotone on sign-definite intervals; split at zero otherwise.
    if (lo_.sign() >= 0) {
        Real lo(prec()), hi(prec());
        mpfr_pow_ui(lo.raw(), lo_.raw(), e, MPFR_RNDD);
        mpfr_pow_ui(hi.raw(), hi_.raw(), e, MPFR_RNDU);
        return {std::move(lo), std::move(hi)};
    }
    Interval acc = *this;
    for (unsigned long i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

Interval Interval::exp() const {
    Real lo(prec()), hi(prec());
    mpfr_exp(lo.raw(), lo_.raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), hi_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

Interval Interval::neg() const {
    Real lo(prec()), hi(prec());
    mpfr_neg(lo.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), lo_.raw(), MPFR_RNDU);
    return {std::move(lo), std::move(hi)};
}

} // namespace adele
