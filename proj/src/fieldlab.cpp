#include "adele/fieldlab.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "adele/errors.hpp"
#include "adele/fppoly.hpp"
#include "adele/parallel.hpp"
#include "adele/primes.hpp"

namespace adele {

namespace {

// Proper factor degrees consistent with one mod-p degree multiset: every
// degree of a true factor over Z is a subset sum of the mod-p degrees.
std::set<unsigned> achievable_proper_sums(const std::map<unsigned, unsigned>& degs, unsigned n) {
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (const auto& [d, count] : degs)
        for (unsigned c = 0; c < count; ++c)
            for (unsigned s = n; s + 1 > d; --s)
                if (reach[s - d]) reach[s] = 1;
    std::set<unsigned> out;
    for (unsigned s = 1; s < n; ++s)
        if (reach[s]) out.insert(s);
    return out;
}

void irreducibility_screen(const std::string& label, const ZPoly& f, const Int& pdisc) {
    unsigned n = (unsigned)f.degree();
    if (n == 1) return;
    if (f.eval(0) == 0 || f.eval(1) == 0 || f.eval(-1) == 0)
        fail(errc::irreducibility_undecided, "minpoly of " + label + " has a rational root");

    for (std::uint64_t p : primes_up_to(200)) {
        auto degs = factor_mod_p(f, p);
        if (degs.size() == 1 && degs.begin()->first == n && degs.begin()->second == 1) return;
    }

    std::set<unsigned> candidates;
    bool first = true;
    unsigned used = 0;
    std::uint64_t p = 1;
    while (used < 25) {
        p = next_prime_u64(p);
        if (mpz_divisible_ui_p(pdisc.get_mpz_t(), p)) continue;
        ++used;
        auto sums = achievable_proper_sums(factor_mod_p(f, p), n);
        if (first) {
            candidates = std::move(sums);
            first = false;
        } else {
            std::set<unsigned> merged;
            std::set_intersection(candidates.begin(), candidates.end(), sums.begin(), sums.end(),
                                  std::inserter(merged, merged.begin()));
            candidates = std::move(merged);
        }
        if (candidates.empty()) return;
    }
    std::string diag = "cannot certify irreducibility of minpoly of " + label +
                       "; surviving factor degrees after 25-prime sieve:";
    for (unsigned s : candidates) diag += " " + std::to_string(s);
    fail(errc::irreducibility_undecided, diag);
}

} // namespace

NumberFieldSpec::NumberFieldSpec(std::string label, ZPoly minpoly, std::optional<Int> field_discriminant,
                                 std::map<std::uint64_t, RamPairs> supplied_ramified)
    : label_(std::move(label)), minpoly_(std::move(minpoly)), field_disc_(std::move(field_discriminant)),
      ram_(std::move(supplied_ramified)) {
    if (minpoly_.degree() < 1) fail(errc::invalid_input, "minpoly must have degree >= 1");
    if (!minpoly_.is_monic()) fail(errc::invalid_input, "minpoly must be monic");
    poly_disc_ = poly_discriminant(minpoly_);
    irreducibility_screen(label_, minpoly_, poly_disc_);
    unsigned n = (unsigned)minpoly_.degree();
    for (auto& [p, pairs] : ram_) {
        if (!is_prime_u64(p)) fail(errc::invalid_input, "ramified data at composite modulus " + std::to_string(p));
        unsigned long total = 0;
        for (auto& [e, f] : pairs) {
            if (e == 0 || f == 0) fail(errc::invalid_input, "ramified (e, f) must be positive");
            total += (unsigned long)e * f;
        }
        if (total != n)
            fail(errc::invalid_input,
                 "ramified data at p=" + std::to_string(p) + " has sum(e*f) != field degree");
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    }
    sig_ = signature_of(minpoly_);
}

PrimeSplitting splitting_type(const NumberFieldSpec& field, std::uint64_t p) {
    PrimeSplitting out;
    out.p = p;
    if (!mpz_divisible_ui_p(field.poly_disc().get_mpz_t(), p)) {
        out.status = PrimeSplitting::Status::Unramified;
        for (const auto& [d, count] : factor_mod_p(field.minpoly(), p)) {
            assert(count >= 1);
            for (unsigned c = 0; c < count; ++c) out.degrees.push_back(d);
        }
        std::sort(out.degrees.begin(), out.degrees.end());
        return out;
    }
    auto it = field.supplied_ramified().find(p);
    if (it != field.supplied_ramified().end()) {
        out.status = PrimeSplitting::Status::RamifiedUserSupplied;
        for (const auto& [e, f] : it->second) out.degrees.push_back(f);
        // pairs are stored (f, e)-sorted, so degrees come out ascending
        return out;
    }
    out.status = PrimeSplitting::Status::Undetermined;
    return out;
}

std::optional<unsigned> residue_degree_gcd(const NumberFieldSpec& field, std::uint64_t p) {
    PrimeSplitting split = splitting_type(field, p);
    if (!split.determined()) return std::nullopt;
    unsigned g = 0;
    for (unsigned d : split.degrees) g = std::gcd(g, d);
    return g;
}

std::optional<std::vector<unsigned>> local_degrees(const NumberFieldSpec& field, std::uint64_t p) {
    PrimeSplitting split = splitting_type(field, p);
    if (!split.determined()) return std::nullopt;
    if (split.status == PrimeSplitting::Status::Unramified) return split.degrees;
    std::vector<unsigned> out;
    for (const auto& [e, f] : field.supplied_ramified().at(p)) out.push_back(e * f);
    return out;
}

ZetaEstimate zeta_partial(const NumberFieldSpec& field, unsigned s, std::uint64_t prime_bound,
                          mpfr_prec_t precision_bits) {
    if (s < 2) fail(errc::invalid_input, "zeta_partial needs s >= 2");
    if (prime_bound < 2) fail(errc::invalid_input, "zeta_partial needs prime bound >= 2");
    if (precision_bits < 16 || precision_bits > (1 << 24))
        fail(errc::precision_unattainable,
             "working precision " + std::to_string(precision_bits) + " bits cannot bound rounding");

    const mpfr_prec_t prec = precision_bits;
    const unsigned n = (unsigned)field.degree();
    std::vector<std::uint64_t> primes = primes_up_to(prime_bound);

    struct Chunk {
        Interval value;
        Interval undet_halfwidth; // product of sqrt brackets over Undetermined primes
    };
    auto eval_chunk = [&](std::size_t lo, std::size_t hi) {
        Chunk ch{Interval::exact_ui(1, prec), Interval::exact_ui(1, prec)};
        for (std::size_t i = lo; i < hi; ++i) {
            std::uint64_t p = primes[i];
            PrimeSplitting split = splitting_type(field, p);
            if (split.determined()) {
                for (unsigned f : split.degrees) {
                    Int qs = int_pow(int_pow(p, f), s);
                    ch.value = ch.value * Interval::exact_rat(Rat(qs, qs - 1), prec);
                }
            } else {
                // bracket [1, (1 - p^-s)^-n]; contribute its geometric mean
                Int ps = int_pow(p, (unsigned long)s);
                Interval bracket = Interval::exact_rat(rat_pow(Rat(ps, ps - 1), n), prec);
                Interval geo = bracket.sqrt();
                ch.value = ch.value * geo;
                ch.undet_halfwidth = ch.undet_halfwidth * geo;
            }
        }
        return ch;
    };
    Chunk total = parallel_chunk_reduce<Chunk>(
        primes.size(), 2048, Chunk{Interval::exact_ui(1, prec), Interval::exact_ui(1, prec)}, eval_chunk,
        [](const Chunk& a, const Chunk& b) {
            return Chunk{a.value * b.value, a.undet_halfwidth * b.undet_halfwidth};
        });

    // Euler tail over p > B: log prod <= n * B^(1-s) / ((s-1)(1 - B^-s))
    Real tail_log_hi(prec);
    {
        Interval B = Interval::exact_ui(prime_bound, prec);
        Interval bpow = B.pow_ui(s - 1).recip();                       // B^(1-s)
        Interval denom = Interval::exact_ui(1, prec) - B.pow_ui(s).recip();
        Interval lg = Interval::exact_ui(n, prec) * bpow / (Interval::exact_ui(s - 1, prec) * denom);
        tail_log_hi = lg.hi();
    }
    Interval tail(Real::of_ui(1, prec, MPFR_RNDD),
                  Interval(Real(prec), tail_log_hi).exp().hi());
    // tail.lo is exactly 1: the omitted factors only increase the product

    // Enclosure of the true zeta value around the reported truncation:
    // divide out / multiply in the undetermined half-width, then the tail.
    Interval enclosure(
        (total.value / total.undet_halfwidth).lo(),
        (total.value * total.undet_halfwidth * tail).hi());

    ZetaEstimate est;
    est.s = s;
    est.prime_bound = prime_bound;
    est.value = total.value.mid();
    Real e1(prec), e2(prec);
    mpfr_sub(e1.raw(), enclosure.hi().raw(), est.value.raw(), MPFR_RNDU);
    mpfr_sub(e2.raw(), est.value.raw(), enclosure.lo().raw(), MPFR_RNDU);
    est.error_bound = e1 >= e2 ? e1 : e2;
    return est;
}

} // namespace adele
