#include "adele/orders.hpp"

#include <algorithm>
#include <cassert>

#include "adele/errors.hpp"
#include "adele/primes.hpp"

namespace adele {

OrderData make_order(BrauerClass ambient, std::map<Place, OrderData::Deviation> deviations) {
    require_valid(ambient);
    OrderData order;
    order.ambient = std::move(ambient);
    for (auto& [place, dev] : deviations) {
        if (!place.is_finite())
            fail(errc::invalid_input, "order deviation at non-finite place " + place.str());
        if (dev.level == 0) continue;
        order.deviations.emplace(place, std::move(dev));
    }
    return order;
}

LevelIdeal level_ideal(const OrderData& order) {
    LevelIdeal ideal;
    for (const auto& [place, dev] : order.deviations) ideal.exponents.emplace(place, dev.level);
    return ideal;
}

bool is_maximal(const OrderData& order) { return level_ideal(order).is_trivial(); }

namespace {

Place transport_finite_place(const Place& place, const PlaceBijectionData& phi) {
    assert(place.is_finite());
    if (!phi.covers_prime(place.p))
        fail(errc::out_of_matching_range, "place " + place.str() + " is not matched");
    return Place::finite(place.p, phi.map_slot(place.p, place.index));
}

} // namespace

OrderData transport_order(const OrderData& order, const PlaceBijectionData& phi,
                          const BrauerClass& transported_class) {
    BrauerClass image = transport(order.ambient, phi);
    if (!(image == transported_class))
        fail(errc::class_mismatch, "ambient class does not transport to the supplied class");
    OrderData out;
    out.ambient = transported_class;
    for (const auto& [place, dev] : order.deviations)
        out.deviations.emplace(transport_finite_place(place, phi), dev);
    return out;
}

LevelIdeal transport_level_ideal(const LevelIdeal& ideal, const PlaceBijectionData& phi) {
    LevelIdeal out;
    for (const auto& [place, e] : ideal.exponents)
        out.exponents.emplace(transport_finite_place(place, phi), e);
    return out;
}

namespace {

struct Mat2 {
    // column basis [[x1, x2], [y1, y2]]: columns (x1, y1), (x2, y2)
    Int x1, x2, y1, y2;
};

// Column Hermite form [[pa, 0], [b, pn]] of the lattice spanned by the
// columns; requires nonzero determinant.
Mat2 column_hnf(const Mat2& m) {
    Int det = m.x1 * m.y2 - m.x2 * m.y1;
    assert(det != 0);
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.x1.get_mpz_t(), m.x2.get_mpz_t());
    Mat2 h;
    if (g == 0) {
        // both top entries vanish: swap roles so the first column carries y
        fail(errc::invalid_input, "degenerate lattice basis");
    }
    h.x1 = g;
    h.y1 = s * m.y1 + t * m.y2;
    h.x2 = 0;
    h.y2 = (m.x1 / g) * m.y2 - (m.x2 / g) * m.y1;
    if (h.x1 < 0) {
        h.x1 = -h.x1;
        h.y1 = -h.y1;
    }
    if (h.y2 < 0) h.y2 = -h.y2;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), h.y1.get_mpz_t(), h.y2.get_mpz_t());
    h.y1 = r;
    return h;
}

} // namespace

TreeVertex tree_vertex(std::uint64_t p, unsigned a, unsigned n, Int b) {
    if (!is_prime_u64(p)) fail(errc::composite_modulus, std::to_string(p) + " is not prime");
    Int pn = int_pow(p, n);
    if (b < 0 || b >= pn) fail(errc::invalid_input, "tree vertex needs 0 <= b < p^n");
    // strip the content p^c common to p^a, b, p^n
    unsigned c = std::min(a, n);
    if (b != 0) c = std::min(c, (unsigned)p_valuation(b, Int((unsigned long)p)));
    if (c > 0) {
        a -= c;
        n -= c;
        b /= int_pow(p, c);
    }
    return TreeVertex{p, a, n, b};
}

TreeVertex standard_vertex(std::uint64_t p) { return tree_vertex(p, 0, 0, 0); }

unsigned tree_distance(const TreeVertex& u, const TreeVertex& v) {
    if (u.p != v.p)
        fail(errc::prime_mismatch,
             "vertices live over p=" + std::to_string(u.p) + " and p=" + std::to_string(v.p));
    Int p((unsigned long)u.p);
    // C = adj(M_u) * M_v with M = [[p^a, 0], [b, p^n]]
    Int ua = int_pow(u.p, u.a), un = int_pow(u.p, u.n);
    Int va = int_pow(v.p, v.a), vn = int_pow(v.p, v.n);
    Int c11 = un * va;
    Int c21 = -u.b * va + ua * v.b;
    Int c22 = ua * vn;
    // det C has valuation (a_u + n_u) + (a_v + n_v); the elementary divisor
    // gap is that minus twice the content valuation.
    unsigned long det_val = (unsigned long)u.a + u.n + v.a + v.n;
    unsigned long content_val = std::min(p_valuation(c11, p), p_valuation(c22, p));
    if (c21 != 0) content_val = std::min(content_val, p_valuation(c21, p));
    assert(det_val >= 2 * content_val);
    return (unsigned)(det_val - 2 * content_val);
}

std::vector<TreeVertex> tree_neighbors(const TreeVertex& u) {
    Int p((unsigned long)u.p);
    Int pa = int_pow(u.p, u.a), pn = int_pow(u.p, u.n);
    std::vector<TreeVertex> out;
    out.reserve(u.p + 1);
    auto push = [&](const Mat2& basis) {
        Mat2 h = column_hnf(basis);
        unsigned a = (unsigned)p_valuation(h.x1, p);
        unsigned n = (unsigned)p_valuation(h.y2, p);
        assert(int_pow(u.p, a) == h.x1 && int_pow(u.p, n) == h.y2);
        out.push_back(tree_vertex(u.p, a, n, h.y1));
    };
    // index-p sublattices: span(u1 + t*u2, p*u2) for t in [0, p), and span(u2, p*u1)
    for (Int t = 0; t < p; ++t) push(Mat2{pa, Int(0), u.b + t * pn, p * pn});
    push(Mat2{Int(0), p * pa, pn, p * u.b});
    std::sort(out.begin(), out.end());
    assert(std::adjacent_find(out.begin(), out.end()) == out.end());
    return out;
}

} // namespace adele
