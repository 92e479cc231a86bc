#ifndef ADELE_GENUS_HPP
#define ADELE_GENUS_HPP

#include <optional>
#include <vector>

#include "adele/bigint.hpp"
#include "adele/brauer.hpp"
#include "adele/interval.hpp"

namespace adele {

// Theta = prod phi(d_v) over the finite ramified places; each d_v >= 2.
Int theta(const std::vector<unsigned>& local_degrees);

// Upper bound on the number of commensurability classes: floor(1 + 10^33 V),
// which drops to floor(1 + V) once d > 28.
Int pr_bound(const Rat& volume, unsigned d);

struct LambdaBudget {
    Rat coarse;       // 10^33 V, exact
    Interval refined; // 10^33 V / |D_K|^((d^2-1)/2)
};
// Throws MissingFieldDiscriminant when abs_disc is absent.
LambdaBudget lambda_budget(const Rat& volume, unsigned d, const std::optional<Int>& abs_disc,
                           mpfr_prec_t precision_bits = 128);

struct IsoBound {
    unsigned alpha = 0; // largest alpha with 3^alpha <= N
    Int bound = 1;      // 1 if alpha < 2, else 2^alpha
};
IsoBound isobound(const Rat& budget);

// The maximizer construction: alpha places over 2 with local degree 3 and
// invariants in {1/3, 2/3} summing to 0 in Q/Z. Requires alpha >= 2.
struct DmaxPlace {
    std::uint32_t slot = 0; // place over the rational prime 2
    QmodZ invariant;
};
std::vector<DmaxPlace> dmax_construct(unsigned alpha);
BrauerClass dmax_as_class(const std::vector<DmaxPlace>& places, const std::string& field_label = "dmax");

// Aggregate report: Theta of a ramification configuration together with the
// effective bound, the branch that produced it, and the lambda budget.
struct GenusBoundReport {
    Int theta = 1;                   // prod phi(d_v) over the supplied degrees
    std::vector<unsigned> details;   // phi(d_v) per place
    Int bound = 1;
    std::string branch;              // "general", "d>28", or "isobound"
    unsigned alpha = 0;
    Real budget;                     // upper end of the refined lambda budget
};
GenusBoundReport genus_report(const Rat& volume, unsigned d, const std::optional<Int>& abs_disc,
                              const std::vector<unsigned>& ram_degrees,
                              mpfr_prec_t precision_bits = 128);

// Exhaustive maximizer of Theta over ramification configurations with
// q_v = 2 whose lambda product stays within the budget, subject to the
// existence of exact-order local invariants summing to 0 in Q/Z. Ties go to
// the lexicographically smallest (nd, degrees) configuration.
struct ThetaSearchResult {
    Int best_theta = 1;
    unsigned best_nd = 1;                // 1 encodes the empty configuration
    std::vector<unsigned> best_degrees;  // sorted ascending
    Rat best_lambda_product = 1;
    std::size_t configurations_checked = 0;
};
ThetaSearchResult brute_force_theta_max(const Rat& budget, unsigned max_places = 16, unsigned d_min = 2,
                                        unsigned d_max = 8);

} // namespace adele

#endif
