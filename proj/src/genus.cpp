#include "adele/genus.hpp"

#include <algorithm>
#include <numeric>

#include "adele/errors.hpp"
#include "adele/volume.hpp"

namespace adele {

namespace {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const Int& ten_pow_33() {
    static const Int v = int_pow(10ul, 33);
    return v;
}

} // namespace

Int theta(const std::vector<unsigned>& local_degrees) {
    Int t = 1;
    for (unsigned d : local_degrees) {
        if (d < 2) fail(errc::invalid_input, "local degree must be >= 2");
        t *= euler_phi(d);
    }
    return t;
}

Int pr_bound(const Rat& volume, unsigned d) {
    if (volume <= 0) fail(errc::invalid_input, "volume must be positive");
    if (d < 2) fail(errc::invalid_input, "division algebra degree must be >= 2");
    Rat bound = Rat(1) + volume;
    if (d <= 28) bound = Rat(1) + Rat(ten_pow_33()) * volume;
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
    return out;
}

LambdaBudget lambda_budget(const Rat& volume, unsigned d, const std::optional<Int>& abs_disc,
                           mpfr_prec_t precision_bits) {
    if (volume <= 0) fail(errc::invalid_input, "volume must be positive");
    if (d < 2) fail(errc::invalid_input, "division algebra degree must be >= 2");
    if (!abs_disc) fail(errc::missing_field_discriminant, "lambda budget needs |D_K|");
    if (*abs_disc < 1) fail(errc::invalid_input, "|D_K| must be >= 1");
    LambdaBudget out;
    out.coarse = Rat(ten_pow_33()) * volume;
    out.coarse.canonicalize();
    unsigned long e2 = (unsigned long)d * d - 1; // twice the exponent of |D_K|
    Interval disc_pow = Interval::exact_int(int_pow(*abs_disc, e2), precision_bits).sqrt();
    out.refined = Interval::exact_rat(out.coarse, precision_bits) / disc_pow;
    return out;
}

IsoBound isobound(const Rat& budget) {
    if (budget < 1) fail(errc::invalid_input, "budget must be >= 1");
    IsoBound out;
    Int pow3 = 3;
    while (Rat(pow3) <= budget) {
        ++out.alpha;
        pow3 *= 3;
    }
    out.bound = out.alpha < 2 ? Int(1) : int_pow(2ul, out.alpha);
    return out;
}

std::vector<DmaxPlace> dmax_construct(unsigned alpha) {
    if (alpha < 2) fail(errc::alpha_too_small, "construction needs alpha >= 2");
    // k invariants 2/3 with alpha + k = 0 mod 3; the remaining alpha - k are 1/3
    unsigned k = (3 - alpha % 3) % 3;
    std::vector<DmaxPlace> out;
    out.reserve(alpha);
    for (unsigned i = 0; i < alpha; ++i)
        out.push_back(DmaxPlace{i, QmodZ::of(i < alpha - k ? 1 : 2, 3)});
    return out;
}

BrauerClass dmax_as_class(const std::vector<DmaxPlace>& places, const std::string& field_label) {
    BrauerClass c{field_label, {}};
    for (const DmaxPlace& pl : places) c.inv.emplace(Place::finite(2, pl.slot), pl.invariant);
    require_valid(c);
    return c;
}

GenusBoundReport genus_report(const Rat& volume, unsigned d, const std::optional<Int>& abs_disc,
                              const std::vector<unsigned>& ram_degrees, mpfr_prec_t precision_bits) {
    GenusBoundReport report;
    report.theta = theta(ram_degrees);
    for (unsigned dv : ram_degrees) report.details.push_back(euler_phi(dv));

    // budget from the volume, disc-refined when the discriminant is known
    Rat coarse = Rat(ten_pow_33()) * volume;
    coarse.canonicalize();
    if (abs_disc) {
        LambdaBudget b = lambda_budget(volume, d, abs_disc, precision_bits);
        report.budget = b.refined.hi();
    } else {
        report.budget = Real::of_rat(coarse, precision_bits, MPFR_RNDU);
    }

    Rat budget_rat(coarse); // the coarse budget is always valid for isobound
    IsoBound iso = budget_rat >= 1 ? isobound(budget_rat) : IsoBound{0, Int(1)};
    report.alpha = iso.alpha;

    Int pr = pr_bound(volume, d);
    if (d > 28) {
        report.bound = pr;
        report.branch = "d>28";
    } else if (iso.bound < pr) {
        report.bound = iso.bound;
        report.branch = "isobound";
    } else {
        report.bound = pr;
        report.branch = "general";
    }
    return report;
}

namespace {

// Exact-order invariants a_i/d_i (gcd(a_i, d_i) = 1) summing to 0 in Q/Z,
// decided by reachable-sum DP in (1/nd)Z/Z = Z/nd.
bool reciprocity_realizable(unsigned nd, const std::vector<unsigned>& degrees) {
    std::uint64_t reach = 1; // bit s: sum s/nd reachable (nd <= 63)
    for (unsigned d : degrees) {
        std::uint64_t next = 0;
        unsigned step = nd / d;
        for (unsigned a = 1; a < d; ++a) {
            if (std::gcd(a, d) != 1) continue;
            unsigned shift = a * step; // < nd
            next |= (reach << shift | reach >> (nd - shift)) & (((std::uint64_t)1 << nd) - 1);
        }
        reach = next;
    }
    return (reach & 1) != 0;
}

struct SearchState {
    Rat budget;
    unsigned nd = 2;
    std::vector<unsigned> divisors; // admissible d_v for this nd
    std::vector<Rat> lambdas;       // lambda(q=2, nd, d_v), aligned with divisors
    unsigned max_places = 0;
    ThetaSearchResult* best = nullptr;

    std::vector<unsigned> stack;

    void consider() {
        ++best->configurations_checked;
        unsigned lcm = 1;
        for (unsigned d : stack) lcm = std::lcm(lcm, d);
        if (lcm != nd) return; // not a division algebra of degree nd
        if (!reciprocity_realizable(nd, stack)) return;
        Int t = theta(stack);
        bool better = t > best->best_theta;
        if (!better && t == best->best_theta) {
            auto mine = std::pair(nd, stack);
            auto theirs = std::pair(best->best_nd, best->best_degrees);
            better = mine < theirs;
        }
        if (better) {
            best->best_theta = t;
            best->best_nd = nd;
            best->best_degrees = stack;
            best->best_lambda_product = 1;
            for (unsigned d : stack)
                for (std::size_t i = 0; i < divisors.size(); ++i)
                    if (divisors[i] == d) best->best_lambda_product *= lambdas[i];
        }
    }

    void recurse(std::size_t min_div, const Rat& used) {
        if (!stack.empty()) consider();
        if (stack.size() >= max_places) return;
        for (std::size_t i = min_div; i < divisors.size(); ++i) {
            Rat next = used * lambdas[i];
            if (next > budget) break; // lambdas increase with d_v at fixed nd
            stack.push_back(divisors[i]);
            recurse(i, next);
            stack.pop_back();
        }
    }
};

} // namespace

ThetaSearchResult brute_force_theta_max(const Rat& budget, unsigned max_places, unsigned d_min,
                                        unsigned d_max) {
    if (budget < 1) fail(errc::invalid_input, "budget must be >= 1");
    if (budget > Rat(int_pow(3ul, 10)))
        fail(errc::search_space_too_large, "budget exceeds the desk-scale cap 3^10");
    if (d_min < 2 || d_max < d_min) fail(errc::invalid_input, "bad degree range");
    if (d_max > 12 || max_places > 24)
        fail(errc::search_space_too_large, "degree range or place count too large");

    ThetaSearchResult best; // empty configuration: lambda product 1, theta 1
    for (unsigned nd = d_min; nd <= d_max; ++nd) {
        SearchState st;
        st.budget = budget;
        st.nd = nd;
        for (unsigned d = 2; d <= nd; ++d)
            if (nd % d == 0) {
                st.divisors.push_back(d);
                st.lambdas.push_back(lambda_factor(Int(2), nd, d));
            }
        st.max_places = max_places;
        st.best = &best;
        st.recurse(0, Rat(1));
    }
    return best;
}

} // namespace adele
