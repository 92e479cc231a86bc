// Shared test fixtures and independent oracles. Everything here must stay
// independent of the library code paths it is used to check.
#ifndef ADELE_TESTS_SUPPORT_HPP
#define ADELE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "adele/bigint.hpp"
#include "adele/brauer.hpp"
#include "adele/fieldlab.hpp"
#include "adele/zpoly.hpp"

namespace adele::testing {

inline ZPoly poly(std::vector<long> coeffs) {
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return ZPoly(std::move(c));
}

// Q presented as x - 1.
inline NumberFieldSpec make_Q() { return NumberFieldSpec("Q", poly({-1, 1}), Int(1)); }

inline NumberFieldSpec make_Qi() { return NumberFieldSpec("Qi", poly({1, 0, 1}), Int(-4), {{2, {{2, 1}}}}); }

inline NumberFieldSpec make_cubic2() { return NumberFieldSpec("cubic2", poly({-2, 0, 0, 1})); }

inline NumberFieldSpec make_dsp1() {
    std::vector<Int> c(9, Int(0));
    c[0] = -799;
    c[8] = 1;
    return NumberFieldSpec("K1", ZPoly(std::move(c)));
}

inline NumberFieldSpec make_dsp2() {
    std::vector<Int> c(9, Int(0));
    c[0] = -12784;
    c[8] = 1;
    return NumberFieldSpec("K2", ZPoly(std::move(c)));
}

// Brute-force resultant via the Sylvester matrix with Bareiss elimination;
// independent of the subresultant implementation.
inline Int sylvester_resultant(const ZPoly& a, const ZPoly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    std::vector<std::vector<Int>> mat(size, std::vector<Int>(size, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) mat[r][r + (m - i)] = a[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) mat[n + r][r + (n - i)] = b[i];
    // Bareiss fraction-free elimination
    Int sign = 1, prev = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (mat[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < size; ++r)
                if (mat[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(mat[k], mat[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) {
                Int num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mat[i][j] = num / prev; // exact by Bareiss
            }
        prev = mat[k][k];
    }
    return sign * mat[size - 1][size - 1];
}

// Random integer polynomial with |coeffs| <= 9, returned squarefree.
inline ZPoly random_squarefree_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (;;) {
        int n = deg(rng);
        std::vector<Int> c(n + 1);
        for (int i = 0; i < n; ++i) c[i] = coeff(rng);
        c[n] = coeff(rng);
        if (c[n] == 0) c[n] = 1;
        ZPoly f(std::move(c));
        if (f.degree() == n && is_squarefree(f)) return f;
    }
}

// Random valid Brauer class supported on the given finite places (plus an
// optional real pair). Reciprocity is fixed up on the final place.
inline BrauerClass random_class(std::mt19937_64& rng, const std::string& field,
                                const std::vector<Place>& pool, int max_support = 4,
                                int real_places = 0) {
    std::uniform_int_distribution<int> support(2, std::max(2, max_support));
    std::uniform_int_distribution<int> den_pick(2, 6);
    for (;;) {
        int want = std::min<int>((int)pool.size(), support(rng));
        std::vector<Place> chosen = pool;
        std::shuffle(chosen.begin(), chosen.end(), rng);
        chosen.resize(want);
        std::sort(chosen.begin(), chosen.end());
        BrauerClass c{field, {}};
        QmodZ sum{0, 1};
        for (int i = 0; i + 1 < want; ++i) {
            std::int64_t den = den_pick(rng);
            std::uniform_int_distribution<std::int64_t> num_pick(1, den - 1);
            QmodZ q = QmodZ::of(num_pick(rng), den);
            if (q.is_zero()) continue;
            c.inv.emplace(chosen[i], q);
            sum = sum.plus(q);
        }
        if (real_places >= 2 && std::uniform_int_distribution<int>(0, 1)(rng)) {
            c.inv.emplace(Place::real(0), QmodZ::of(1, 2));
            c.inv.emplace(Place::real(1), QmodZ::of(1, 2));
        }
        QmodZ last = sum.negated();
        if (!last.is_zero()) c.inv.emplace(chosen[want - 1], last);
        if (c.inv.empty()) continue;
        if (!validate(c).empty()) continue;
        return c;
    }
}

} // namespace adele::testing

#endif
