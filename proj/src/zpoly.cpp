#include "adele/zpoly.hpp"

#include <cassert>
#include <stdexcept>

#include "adele/errors.hpp"

namespace adele {

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::x_power(std::size_t k) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = 1;
    return ZPoly(std::move(c));
}

Int ZPoly::eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return ZPoly();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * (long)i;
    return ZPoly(std::move(d));
}

Int ZPoly::content() const {
    Int g = 0;
    for (const Int& x : c_) g = int_gcd(g, x);
    return g;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator*(const Int& k) const {
    std::vector<Int> c(c_);
    for (Int& x : c) x *= k;
    return ZPoly(std::move(c));
}

ZPoly ZPoly::shifted(std::size_t k) const {
    if (is_zero()) return ZPoly();
    std::vector<Int> c(c_.size() + k, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return ZPoly(std::move(c));
}

namespace {

// Pseudo-remainder: returns R with lc(B)^(deg A - deg B + 1) A = Q B + R.
ZPoly prem(const ZPoly& a, const ZPoly& b) {
    assert(!b.is_zero() && a.degree() >= b.degree());
    const Int& d = b.lc();
    long e = a.degree() - b.degree() + 1;
    ZPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        ZPoly s = b.shifted(r.degree() - b.degree()) * r.lc();
        r = r * d - s;
        --e;
    }
    if (e > 0) {
        Int de;
        mpz_pow_ui(de.get_mpz_t(), d.get_mpz_t(), (unsigned long)e);
        r = r * de;
    }
    return r;
}

ZPoly exact_div_scalar(const ZPoly& a, const Int& k) {
    std::vector<Int> c(a.coeffs());
    for (Int& x : c) {
        assert(mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t()));
        x /= k;
    }
    return ZPoly(std::move(c));
}

} // namespace

Int resultant(const ZPoly& a0, const ZPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) return 0;
    if (a0.degree() == 0) return int_pow(a0.lc(), (unsigned long)b0.degree());
    if (b0.degree() == 0) return int_pow(b0.lc(), (unsigned long)a0.degree());

    ZPoly a = a0, b = b0;
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    }
    Int ca = a.content(), cb = b.content();
    a = exact_div_scalar(a, ca);
    b = exact_div_scalar(b, cb);
    Int t = int_pow(ca, (unsigned long)b.degree()) * int_pow(cb, (unsigned long)a.degree());

    Int g = 1, h = 1;
    while (b.degree() > 0) {
        long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        ZPoly r = prem(a, b);
        a = b;
        Int divisor = g * int_pow(h, (unsigned long)delta);
        if (r.is_zero())
            b = ZPoly();
        else
            b = exact_div_scalar(r, divisor);
        if (b.is_zero()) return 0; // common factor of positive degree
        g = a.lc();
        if (delta >= 1) {
            // h <- g^delta / h^(delta-1), exact in Z
            Int num = int_pow(g, (unsigned long)delta);
            Int den = int_pow(h, (unsigned long)(delta - 1));
            assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
            h = num / den;
        }
    }
    // b is a nonzero constant, a has positive degree
    Int num = int_pow(b.lc(), (unsigned long)a.degree());
    Int den = int_pow(h, (unsigned long)(a.degree() - 1));
    assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
    Int res = num / den;
    return t * (s < 0 ? Int(-res) : res);
}

Int poly_discriminant(const ZPoly& f) {
    int n = f.degree();
    if (n < 1) fail(errc::invalid_input, "discriminant needs degree >= 1");
    if (n == 1) return 1;
    Int r = resultant(f, f.derivative());
    assert(mpz_divisible_p(r.get_mpz_t(), f.lc().get_mpz_t()));
    r /= f.lc();
    long e = (long)n * (n - 1) / 2;
    return (e & 1) ? Int(-r) : r;
}

namespace {

// Rational polynomials, used only for gcd and Sturm sequences.
using QPoly = std::vector<Rat>;

QPoly qp_from(const ZPoly& f) {
    QPoly q(f.coeffs().size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = Rat(f[i]);
    return q;
}

void qp_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qp_rem(QPoly a, const QPoly& b) {
    assert(!b.empty());
    while (a.size() >= b.size()) {
        Rat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back();
        qp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

QPoly qp_gcd(QPoly a, QPoly b) {
    qp_trim(a);
    qp_trim(b);
    while (!b.empty()) {
        QPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int qp_sign_at_inf(const QPoly& f, bool plus_inf) {
    if (f.empty()) return 0;
    int s = sgn(f.back());
    if (!plus_inf && ((f.size() - 1) & 1)) s = -s;
    return s;
}

} // namespace

bool is_squarefree(const ZPoly& f) {
    if (f.degree() <= 0) return !f.is_zero();
    QPoly g = qp_gcd(qp_from(f), qp_from(f.derivative()));
    return g.size() <= 1;
}

int count_real_roots(const ZPoly& f) {
    if (f.degree() <= 0) return 0;
    // Sturm chain: p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i).
    std::vector<QPoly> chain;
    chain.push_back(qp_from(f));
    chain.push_back(qp_from(f.derivative()));
    while (chain.back().size() > 1) {
        QPoly r = qp_rem(chain[chain.size() - 2], chain.back());
        for (Rat& x : r) x = -x;
        if (r.empty()) break; // only happens for non-squarefree input
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool plus_inf) {
        int v = 0, prev = 0;
        for (const QPoly& p : chain) {
            int s = qp_sign_at_inf(p, plus_inf);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    };
    return variations(false) - variations(true);
}

std::pair<int, int> signature_of(const ZPoly& f) {
    if (f.degree() < 1) fail(errc::invalid_input, "signature needs degree >= 1");
    if (!is_squarefree(f)) fail(errc::non_squarefree, "gcd(f, f') is nonconstant");
    int r1 = count_real_roots(f);
    int n = f.degree();
    assert((n - r1) % 2 == 0);
    return {r1, (n - r1) / 2};
}

} // namespace adele
