#ifndef ADELE_ORDERS_HPP
#define ADELE_ORDERS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adele/bigint.hpp"
#include "adele/brauer.hpp"
#include "adele/matching.hpp"
#include "adele/places.hpp"

namespace adele {

// Level ideal of an order, as a finitely supported exponent vector over
// finite places. Trivial (empty) exactly for maximal orders.
struct LevelIdeal {
    std::map<Place, unsigned> exponents; // no zero entries

    bool is_trivial() const { return exponents.empty(); }
    friend bool operator==(const LevelIdeal&, const LevelIdeal&) = default;
};

// An order inside a fixed maximal order of the algebra with class `ambient`,
// presented by its finite local deviations. The local label is an opaque
// token: equality is its only operation.
struct OrderData {
    struct Deviation {
        unsigned level = 0; // exponent of the local order ideal
        std::string label;
        friend bool operator==(const Deviation&, const Deviation&) = default;
    };

    BrauerClass ambient;
    std::map<Place, Deviation> deviations; // finite places, zero levels pruned

    friend bool operator==(const OrderData&, const OrderData&) = default;
};

// Prunes zero-level deviations and rejects non-finite deviation places.
OrderData make_order(BrauerClass ambient, std::map<Place, OrderData::Deviation> deviations);

LevelIdeal level_ideal(const OrderData& order);
bool is_maximal(const OrderData& order);

// Relabels deviations along phi. transported_class must equal the transport
// of the ambient class (ClassMismatch otherwise).
OrderData transport_order(const OrderData& order, const PlaceBijectionData& phi,
                          const BrauerClass& transported_class);

LevelIdeal transport_level_ideal(const LevelIdeal& ideal, const PlaceBijectionData& phi);

// Vertex of the Bruhat-Tits tree for SL_2(Q_p): the homothety class of the
// lattice spanned by (p^a, b) and (0, p^n), in reduced normal form
// (0 <= b < p^n and no common p factor across p^a, b, p^n).
struct TreeVertex {
    std::uint64_t p = 2;
    unsigned a = 0;
    unsigned n = 0;
    Int b = 0;

    friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
    friend bool operator<(const TreeVertex& x, const TreeVertex& y) {
        if (x.p != y.p) return x.p < y.p;
        if (x.a != y.a) return x.a < y.a;
        if (x.n != y.n) return x.n < y.n;
        return x.b < y.b;
    }
};

// Normalizes (a, n, b) to the reduced representative of its homothety class.
TreeVertex tree_vertex(std::uint64_t p, unsigned a, unsigned n, Int b);
TreeVertex standard_vertex(std::uint64_t p);

// d(u, v) = difference of the elementary divisor exponents of a basis change
// matrix between representatives. Throws PrimeMismatch.
unsigned tree_distance(const TreeVertex& u, const TreeVertex& v);

// The p + 1 index-p neighbors, in reduced normal form, sorted.
std::vector<TreeVertex> tree_neighbors(const TreeVertex& u);

} // namespace adele

#endif
