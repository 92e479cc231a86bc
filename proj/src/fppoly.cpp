#include "adele/fppoly.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "adele/errors.hpp"
#include "adele/primes.hpp"

namespace adele {

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::reduce(const ZPoly& f, std::uint64_t p) {
    FpPoly r(p);
    r.c_.resize(f.coeffs().size());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        Int m = f[i] % (long)p; // sign follows dividend in GMP
        if (m < 0) m += (long)p;
        r.c_[i] = mpz_get_ui(m.get_mpz_t());
    }
    r.trim();
    return r;
}

FpPoly FpPoly::add(const FpPoly& o) const {
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = (r.c_[i] + o.c_[i]) % p_;
    r.trim();
    return r;
}

FpPoly FpPoly::sub(const FpPoly& o) const {
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = (r.c_[i] + p_ - o.c_[i]) % p_;
    r.trim();
    return r;
}

FpPoly FpPoly::mul(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    FpPoly r(p_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = (std::uint64_t)(((unsigned __int128)c_[i] * o.c_[j] + r.c_[i + j]) % p_);
    }
    r.trim();
    return r;
}

FpPoly FpPoly::mul_scalar(std::uint64_t k) const {
    k %= p_;
    FpPoly r(p_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mulmod_u64(c_[i], k, p_);
    r.trim();
    return r;
}

FpPoly FpPoly::rem(const FpPoly& mod) const {
    assert(!mod.is_zero());
    FpPoly r = *this;
    std::uint64_t inv = powmod_u64(mod.lc(), mod.p_ - 2, mod.p_);
    while (!r.is_zero() && r.degree() >= mod.degree()) {
        std::uint64_t q = mulmod_u64(r.lc(), inv, p_);
        std::size_t off = r.c_.size() - mod.c_.size();
        for (std::size_t i = 0; i < mod.c_.size(); ++i) {
            std::uint64_t s = mulmod_u64(q, mod.c_[i], p_);
            r.c_[off + i] = (r.c_[off + i] + p_ - s) % p_;
        }
        r.trim();
    }
    return r;
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1) return FpPoly(p_);
    FpPoly r(p_);
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mulmod_u64(c_[i], i % p_, p_);
    r.trim();
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    return mul_scalar(powmod_u64(lc(), p_ - 2, p_));
}

FpPoly FpPoly::powmod(const Int& e, const FpPoly& mod) const {
    FpPoly base = this->rem(mod);
    FpPoly acc(p_, {1});
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (std::size_t i = bits; i-- > 0;) {
        acc = acc.mul(acc).rem(mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc.mul(base).rem(mod);
    }
    return acc;
}

bool FpPoly::operator<(const FpPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b) {
    // a = q b exactly; synthetic division
    assert(!b.is_zero());
    FpPoly r = a;
    std::uint64_t p = a.p();
    std::uint64_t inv = powmod_u64(b.lc(), p - 2, p);
    std::vector<std::uint64_t> q(a.degree() - b.degree() + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::uint64_t qc = mulmod_u64(r.lc(), inv, p);
        std::size_t off = r.degree() - b.degree();
        q[off] = qc;
        std::vector<std::uint64_t> rc(r.coeffs());
        for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
            std::uint64_t s = mulmod_u64(qc, b.coeffs()[i], p);
            rc[off + i] = (rc[off + i] + p - s) % p;
        }
        r = FpPoly(p, std::move(rc));
    }
    assert(r.is_zero());
    return FpPoly(p, std::move(q));
}

// f = g(x^p) with g recoverable coefficientwise (Frobenius fixes F_p).
FpPoly fp_pth_root(const FpPoly& f) {
    std::uint64_t p = f.p();
    std::vector<std::uint64_t> c;
    c.resize(f.degree() / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f[i * (std::size_t)p];
    return FpPoly(p, std::move(c));
}

// Squarefree decomposition in characteristic p: list of (monic squarefree, multiplicity).
void fp_squarefree(const FpPoly& f, unsigned mult_scale, std::vector<std::pair<FpPoly, unsigned>>& out) {
    std::uint64_t p = f.p();
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        // f is a p-th power
        fp_squarefree(fp_pth_root(f), mult_scale * (unsigned)p, out);
        return;
    }
    FpPoly c = fp_gcd(f, d);
    FpPoly w = fp_divexact(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        FpPoly y = fp_gcd(w, c);
        FpPoly z = fp_divexact(w, y);
        if (!z.is_one()) out.emplace_back(z.monic(), i * mult_scale);
        w = std::move(y);
        c = fp_divexact(c, w);
        ++i;
    }
    if (!c.is_one()) fp_squarefree(fp_pth_root(c), mult_scale * (unsigned)p, out);
}

// Distinct-degree split of a monic squarefree polynomial: (product, factor degree).
std::vector<std::pair<FpPoly, unsigned>> fp_ddf(const FpPoly& f0) {
    std::uint64_t p = f0.p();
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly f = f0;
    FpPoly h = FpPoly::x(p).rem(f);
    unsigned d = 0;
    while (f.degree() >= 2 * (int)(d + 1)) {
        ++d;
        h = h.powmod(Int((unsigned long)p), f);
        FpPoly g = fp_gcd(h.sub(FpPoly::x(p)), f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = fp_divexact(f, g);
            h = h.rem(f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, (unsigned)f.degree());
    return out;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Equal-degree splitting (Cantor-Zassenhaus); the RNG is seeded from the
// input so factorization is reproducible across runs.
void fp_edf(const FpPoly& f, unsigned d, std::vector<FpPoly>& out) {
    std::uint64_t p = f.p();
    if ((unsigned)f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uint64_t seed = mix64(p) ^ mix64(d);
    for (std::uint64_t c : f.coeffs()) seed = mix64(seed ^ c);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);

    FpPoly g(p);
    while (true) {
        std::vector<std::uint64_t> rc(f.degree());
        for (auto& x : rc) x = coeff(rng);
        FpPoly r(p, std::move(rc));
        if (r.is_zero()) continue;
        if (p == 2) {
            // trace map r + r^2 + ... + r^(2^(d-1))
            FpPoly t = r;
            FpPoly acc = r;
            for (unsigned i = 1; i < d; ++i) {
                t = t.mul(t).rem(f);
                acc = acc.add(t);
            }
            g = fp_gcd(acc, f);
        } else {
            Int e = (int_pow(p, d) - 1) / 2;
            FpPoly b = r.powmod(e, f);
            g = fp_gcd(b.sub(FpPoly(p, {1})), f);
        }
        if (!g.is_one() && g.degree() < f.degree()) break;
    }
    fp_edf(g, d, out);
    fp_edf(fp_divexact(f, g), d, out);
}

} // namespace

std::vector<FpFactor> factor_mod_p_full(const ZPoly& f, std::uint64_t p) {
    if (!is_prime_u64(p)) fail(errc::composite_modulus, "modulus " + std::to_string(p) + " is not prime");
    FpPoly fp = FpPoly::reduce(f, p);
    if (fp.is_zero()) fail(errc::invalid_input, "polynomial vanishes mod p");
    std::vector<FpFactor> factors;
    if (fp.degree() == 0) return factors;

    std::vector<std::pair<FpPoly, unsigned>> sqf;
    fp_squarefree(fp.monic(), 1, sqf);
    for (const auto& [g, mult] : sqf) {
        for (const auto& [prod, d] : fp_ddf(g)) {
            std::vector<FpPoly> irr;
            fp_edf(prod, d, irr);
            for (FpPoly& q : irr) factors.push_back({std::move(q), mult});
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const FpFactor& a, const FpFactor& b) { return a.poly < b.poly; });
    return factors;
}

std::map<unsigned, unsigned> factor_mod_p(const ZPoly& f, std::uint64_t p) {
    std::map<unsigned, unsigned> degs;
    for (const FpFactor& fac : factor_mod_p_full(f, p)) degs[(unsigned)fac.poly.degree()] += fac.mult;
    return degs;
}

} // namespace adele
