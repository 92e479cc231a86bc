#include "adele/brauer.hpp"

#include <numeric>

#include "adele/errors.hpp"

namespace adele {

namespace {

// Denominator cap after reduction; keeps every cross-multiplication in
// plus()/times() well inside __int128.
constexpr std::int64_t kMaxDen = 1000000000000000; // 10^15

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

QmodZ reduce128(__int128 a, __int128 m) {
    if (m == 0) fail(errc::invalid_input, "zero denominator");
    if (m < 0) {
        a = -a;
        m = -m;
    }
    a %= m;
    if (a < 0) a += m;
    __int128 g = gcd128(a, m);
    if (g == 0) g = m; // a == 0
    a /= g;
    m /= g;
    if (m > kMaxDen) fail(errc::invalid_input, "invariant denominator too large");
    return QmodZ{(std::int64_t)a, (std::int64_t)m};
}

} // namespace

std::string Place::str() const {
    switch (kind) {
    case Kind::finite: return "(" + std::to_string(p) + "," + std::to_string(index) + ")";
    case Kind::real: return "real" + std::to_string(index);
    case Kind::complex: return "complex" + std::to_string(index);
    }
    return "?";
}

QmodZ QmodZ::of(std::int64_t a, std::int64_t m) { return reduce128(a, m); }

bool QmodZ::is_reduced() const {
    return den >= 1 && num >= 0 && num < den && (std::gcd(num, den) == 1 || (num == 0 && den == 1));
}

QmodZ QmodZ::plus(const QmodZ& o) const {
    __int128 n = (__int128)num * o.den + (__int128)o.num * den;
    return reduce128(n, (__int128)den * o.den);
}

QmodZ QmodZ::times(std::int64_t k) const { return reduce128((__int128)num * k, den); }

BrauerClass trivial_class(const std::string& field) { return BrauerClass{field, {}}; }

std::vector<std::string> validate(const BrauerClass& c) {
    std::vector<std::string> bad;
    QmodZ sum{0, 1};
    for (const auto& [place, q] : c.inv) {
        if (!q.is_reduced()) bad.push_back("unreduced invariant " + q.str() + " at " + place.str());
        if (q.is_zero()) bad.push_back("stored zero invariant at " + place.str());
        switch (place.kind) {
        case Place::Kind::real:
            if (!(q.num == 1 && q.den == 2))
                bad.push_back("real place " + place.str() + " carries " + q.str() + ", only 1/2 allowed");
            break;
        case Place::Kind::complex:
            bad.push_back("complex place " + place.str() + " carries a nonzero invariant");
            break;
        case Place::Kind::finite:
            break;
        }
        sum = sum.plus(q);
    }
    if (!sum.is_zero()) bad.push_back("reciprocity failure: invariants sum to " + sum.str());
    return bad;
}

void require_valid(const BrauerClass& c) {
    std::vector<std::string> bad = validate(c);
    if (bad.empty()) return;
    std::string msg = "invalid Brauer class over " + c.field;
    for (const std::string& b : bad) msg += "; " + b;
    fail(errc::invalid_input, msg);
}

BrauerClass tensor(const BrauerClass& a, const BrauerClass& b) {
    if (a.field != b.field)
        fail(errc::field_mismatch, "tensor of classes over " + a.field + " and " + b.field);
    require_valid(a);
    require_valid(b);
    BrauerClass out{a.field, a.inv};
    for (const auto& [place, q] : b.inv) {
        auto [it, inserted] = out.inv.emplace(place, q);
        if (!inserted) {
            it->second = it->second.plus(q);
            if (it->second.is_zero()) out.inv.erase(it);
        }
    }
    return out;
}

BrauerClass inverse(const BrauerClass& c) {
    require_valid(c);
    BrauerClass out{c.field, {}};
    for (const auto& [place, q] : c.inv) out.inv.emplace(place, q.negated());
    return out;
}

bool is_trivial(const BrauerClass& c) { return c.inv.empty(); }

Int division_algebra_degree(const BrauerClass& c) {
    require_valid(c);
    Int d = 1;
    for (const auto& [place, q] : c.inv) d = int_lcm(d, Int((long)q.den));
    return d;
}

RamSets ram_sets(const BrauerClass& c) {
    require_valid(c);
    RamSets out;
    for (const auto& [place, q] : c.inv)
        (place.is_finite() ? out.finite : out.archimedean).push_back(place);
    return out;
}

BrauerClass restrict_from_Q(const BrauerClass& c, const NumberFieldSpec& K, std::uint64_t prime_bound) {
    require_valid(c);
    BrauerClass out{K.label(), {}};
    auto [r1, r2] = K.signature();
    for (const auto& [place, q] : c.inv) {
        if (place.is_finite()) {
            if (place.index != 0)
                fail(errc::invalid_input, "class is not over Q: finite slot " + place.str());
            if (place.p > prime_bound)
                fail(errc::invalid_input,
                     "support prime " + std::to_string(place.p) + " exceeds bound " + std::to_string(prime_bound));
            auto degs = local_degrees(K, place.p);
            if (!degs)
                fail(errc::undetermined_prime,
                     "splitting of " + K.label() + " at " + std::to_string(place.p) + " is undetermined");
            for (std::uint32_t slot = 0; slot < degs->size(); ++slot) {
                QmodZ v = q.times((*degs)[slot]);
                if (!v.is_zero()) out.inv.emplace(Place::finite(place.p, slot), v);
            }
        } else if (place.is_real()) {
            if (place.index != 0) fail(errc::invalid_input, "class is not over Q: " + place.str());
            for (int i = 0; i < r1; ++i) out.inv.emplace(Place::real((std::uint32_t)i), q);
            // complex places of K receive the zero invariant
        } else {
            fail(errc::invalid_input, "class is not over Q: " + place.str());
        }
    }
    require_valid(out);
    return out;
}

BrauerClass transport(const BrauerClass& c, const PlaceBijectionData& phi) {
    require_valid(c);
    if (c.field != phi.left_field)
        fail(errc::field_mismatch, "class over " + c.field + ", matching from " + phi.left_field);
    BrauerClass out{phi.right_field, {}};
    for (const auto& [place, q] : c.inv) {
        Place image = place;
        switch (place.kind) {
        case Place::Kind::finite:
            if (!phi.covers_prime(place.p))
                fail(errc::out_of_matching_range, "finite place " + place.str() + " is not matched");
            image = Place::finite(place.p, phi.map_slot(place.p, place.index));
            break;
        case Place::Kind::real:
            if (place.index >= phi.real_map.size())
                fail(errc::out_of_matching_range, "real place " + place.str() + " is not matched");
            image = Place::real(phi.real_map[place.index]);
            break;
        case Place::Kind::complex:
            if (place.index >= phi.complex_map.size())
                fail(errc::out_of_matching_range, "complex place " + place.str() + " is not matched");
            image = Place::complex(phi.complex_map[place.index]);
            break;
        }
        out.inv.emplace(image, q);
    }
    require_valid(out);
    return out;
}

ArchDecomposition archimedean_group_type(const BrauerClass& c, unsigned n, std::pair<int, int> signature) {
    require_valid(c);
    if (n == 0) fail(errc::invalid_input, "matrix size must be >= 1");
    Int deg = division_algebra_degree(c);
    if (!deg.fits_ulong_p()) fail(errc::invalid_input, "division algebra degree too large");
    unsigned long d = deg.get_ui();
    unsigned long nd = n * d;
    auto [r1, r2] = signature;

    unsigned ram_inf = 0;
    for (const auto& [place, q] : c.inv) {
        if (!place.is_real()) continue;
        if ((int)place.index >= r1)
            fail(errc::invalid_input, "real place index " + std::to_string(place.index) +
                                          " outside signature (" + std::to_string(r1) + "," + std::to_string(r2) + ")");
        ++ram_inf;
    }
    if (ram_inf > 0 && nd % 2 != 0)
        fail(errc::odd_quaternionic_rank,
             "nd = " + std::to_string(nd) + " is odd but the class ramifies at a real place");

    ArchDecomposition out;
    out.nd = (unsigned)nd;
    out.complex_copies = (unsigned)r2;
    out.real_copies = (unsigned)r1 - ram_inf;
    out.quaternionic_copies = ram_inf;
    out.quaternionic_compact = (ram_inf > 0 && nd / 2 == 1);
    return out;
}

} // namespace adele
