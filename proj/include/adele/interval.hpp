#ifndef ADELE_INTERVAL_HPP
#define ADELE_INTERVAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "adele/bigint.hpp"

namespace adele {

// RAII wrapper over mpfr_t with value semantics.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real of_ui(unsigned long x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real of_int(const Int& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real of_rat(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Real of_str(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Full-precision decimal, round-trippable at the same precision.
    std::string to_string() const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding; encloses the exact value
// of every expression built from enclosed operands.
class Interval {
public:
    Interval() : lo_(), hi_() {}
    Interval(Real lo, Real hi);

    static Interval exact_ui(unsigned long x, mpfr_prec_t prec);
    static Interval exact_int(const Int& x, mpfr_prec_t prec);
    static Interval exact_rat(const Rat& x, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);
    // [v - e, v + e] with outward rounding; e >= 0.
    static Interval from_value_error(const Real& v, const Real& e);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    Real mid() const;       // round-to-nearest midpoint
    Real rad() const;       // upper bound on max(hi - mid, mid - lo)
    Real width() const;     // upper bound on hi - lo

    bool contains_rat(const Rat& x) const;
    bool is_positive() const { return lo_.sign() > 0; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    Interval recip() const;
    Interval sqrt() const;          // requires lo >= 0
    Interval pow_ui(unsigned long e) const;
    Interval exp() const;
    Interval neg() const;

private:
    Real lo_, hi_;
};

} // namespace adele

#endif
