#ifndef ADELE_BRAUER_HPP
#define ADELE_BRAUER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adele/bigint.hpp"
#include "adele/fieldlab.hpp"
#include "adele/matching.hpp"
#include "adele/places.hpp"

namespace adele {

// Element of Q/Z, stored reduced with 0 <= num < den, gcd(num, den) = 1.
struct QmodZ {
    std::int64_t num = 0;
    std::int64_t den = 1;

    // a/m reduced into [0, 1); m != 0.
    static QmodZ of(std::int64_t a, std::int64_t m);

    bool is_zero() const { return num == 0; }
    bool is_reduced() const;
    QmodZ plus(const QmodZ& o) const;
    QmodZ negated() const { return of(-num, den); }
    QmodZ times(std::int64_t k) const;

    friend bool operator==(const QmodZ&, const QmodZ&) = default;
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// A Brauer class presented by its finitely supported Hasse-invariant vector.
struct BrauerClass {
    std::string field;
    std::map<Place, QmodZ> inv; // support only, no zero entries

    bool is_trivial() const { return inv.empty(); }
    friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
};

BrauerClass trivial_class(const std::string& field);

// Structural validity: reciprocity (sum of invariants = 0 in Q/Z),
// archimedean constraints (real places carry 1/2 only, complex never
// stored), reduced fractions, no stored zeros. Violations are values.
std::vector<std::string> validate(const BrauerClass& c);
void require_valid(const BrauerClass& c); // throws InvalidInput with the violation list

BrauerClass tensor(const BrauerClass& a, const BrauerClass& b);
BrauerClass inverse(const BrauerClass& c);
bool is_trivial(const BrauerClass& c);

// Degree of the underlying division algebra: lcm of the local orders.
Int division_algebra_degree(const BrauerClass& c);

struct RamSets {
    std::vector<Place> finite;
    std::vector<Place> archimedean;
};
RamSets ram_sets(const BrauerClass& c);

// Res_{K/Q}: Inv_v = [K_v : Q_p] * Inv_p for v | p, real 1/2 spread over the
// real places of K. Every support prime must be <= prime_bound and have
// determined splitting in K.
BrauerClass restrict_from_Q(const BrauerClass& c, const NumberFieldSpec& K, std::uint64_t prime_bound);

// Relabel invariants along a verified place matching.
BrauerClass transport(const BrauerClass& c, const PlaceBijectionData& phi);

// Archimedean group decomposition for SL_n of the algebra with class c.
struct ArchDecomposition {
    unsigned nd = 0;            // matrix size times division algebra degree
    unsigned complex_copies = 0;    // SL(nd, C)
    unsigned real_copies = 0;       // SL(nd, R)
    unsigned quaternionic_copies = 0; // SL(nd/2, H)
    bool quaternionic_compact = false; // nd/2 == 1
};
ArchDecomposition archimedean_group_type(const BrauerClass& c, unsigned n, std::pair<int, int> signature);

} // namespace adele

#endif
