#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "motivic/partition.hpp"
#include "motivic/series.hpp"

namespace motivic {

struct malformed_log : std::domain_error {
    explicit malformed_log(const std::string& what) : std::domain_error(what) {}
};

// The two equivariant Hilbert scheme flavours: the full invariant locus of
// the ordinary Hilbert scheme, and the component mapping birationally onto
// the symmetric power of the quotient.
enum class equivariant_variant : int { invariant_locus = 1, birational = 2 };

inline equivariant_variant variant_from_int(int v) {
    if (v != 1 && v != 2) throw std::invalid_argument("variant must be 1 or 2");
    return static_cast<equivariant_variant>(v);
}

// Z_M acting on the plane by (x, y) -> (sigma x, sigma^N y); N is stored
// reduced mod M.
struct group_action {
    unsigned M;
    unsigned N;
    equivariant_variant variant;

    group_action(unsigned M_, long long N_, equivariant_variant v)
        : M(M_), N(0), variant(v) {
        if (M < 1) throw std::invalid_argument("group order M must be >= 1");
        N = static_cast<unsigned>(((N_ % static_cast<long long>(M)) + M) % M);
    }
};

/* Dimension of the Bialynicki-Birula cell attached to a fixed-point
 * partition, for the Hilbert scheme of points supported on the invariant
 * line: the count of monomials lambda^{i-j-1} mu^{b_{i-1}-s-1} over
 * 1 <= i <= j <= r, b_j <= s <= b_{j-1}-1 (with b_r = 0) whose weight
 * N(i-j-1) + (b_{i-1}-s-1) vanishes mod M.
 */
inline unsigned cell_dimension(const partition& p, unsigned M, long long N) {
    if (M < 1) throw std::invalid_argument("group order M must be >= 1");
    const long long m = M;
    const long long n = ((N % m) + m) % m;
    const unsigned r = p.rows();
    unsigned count = 0;
    for (unsigned i = 1; i <= r; ++i) {
        const long long top = p.part(i - 1);
        for (unsigned j = i; j <= r; ++j) {
            const unsigned lo = p.part(j);
            const unsigned hi = p.part(j - 1);
            const long long base = n * (static_cast<long long>(i) - j - 1) + top - 1;
            for (unsigned s = lo; s < hi; ++s)
                if (((base - s) % m + m) % m == 0) ++count;
        }
    }
    return count;
}

// Generating series over the invariant line: coefficient of T^k sums
// L^{cell dimension} over the fixed-point partitions of k. Variant 2 keeps
// only the partitions with equidistributed box weights.
inline series line_local_series(const group_action& a, unsigned order) {
    series s(order);
    for (unsigned k = 0; k <= order; ++k) {
        std::map<unsigned, unsigned> dim_counts;
        for (const auto& p : partitions_of(k)) {
            if (a.variant == equivariant_variant::birational &&
                !is_equidistributed(p, a.M, a.N))
                continue;
            ++dim_counts[cell_dimension(p, a.M, a.N)];
        }
        polynomial c;
        for (const auto& [d, count] : dim_counts) c += polynomial::term(count, d);
        s[k] = c;
    }
    return s;
}

// prod_{i>=1} 1/(1 - L^{i-1} T^{Mi}): the series of a smooth surface point
// whose orbit has length M.
inline series smooth_point_series(unsigned M, unsigned order) {
    if (M < 1) throw std::invalid_argument("group order M must be >= 1");
    series s = series::one(order);
    for (unsigned i = 1; static_cast<unsigned long long>(M) * i <= order; ++i)
        s *= factor_power(order, M * i, i - 1, -1);
    return s;
}

// Series at the origin: the line series divided by the contribution of the
// free part of the line, i.e. times prod (1 - L^i T^{Mi})/(1 - L^{i-1} T^{Mi}).
inline series origin_local_series(const group_action& a, unsigned order) {
    series s = line_local_series(a, order);
    for (unsigned i = 1; static_cast<unsigned long long>(a.M) * i <= order; ++i) {
        s *= factor_power(order, a.M * i, i, 1);
        s *= factor_power(order, a.M * i, i - 1, -1);
    }
    return s;
}

enum class support_kind { origin, line };

// Closed product forms for the A_{M-1} action (N = -1 mod M).
inline series closed_form_theorem2(unsigned M, equivariant_variant variant,
                                   support_kind support, unsigned order) {
    if (M < 1) throw std::invalid_argument("group order M must be >= 1");
    series s = series::one(order);
    if (support == support_kind::line) {
        for (unsigned i = 1; static_cast<unsigned long long>(M) * i <= order; ++i)
            s *= factor_power(order, M * i, i, -static_cast<long long>(M));
    } else {
        for (unsigned i = 1; static_cast<unsigned long long>(M) * i <= order; ++i) {
            s *= factor_power(order, M * i, i, -(static_cast<long long>(M) - 1));
            s *= factor_power(order, M * i, i - 1, -1);
        }
    }
    if (variant == equivariant_variant::invariant_locus)
        s *= core_counting_series(M, order);
    return s;
}

// Conjectural product for the invariant locus of the (3,1) action at the
// origin: prod 1/((1-L^{i-1}T^{3i-2})(1-L^i T^{3i-1})(1-L^{i-1}T^{3i})).
inline series conjecture_series_3_1(unsigned order) {
    series s = series::one(order);
    for (unsigned i = 1; 3u * i - 2 <= order; ++i) {
        s *= factor_power(order, 3 * i - 2, i - 1, -1);
        if (3 * i - 1 <= order) s *= factor_power(order, 3 * i - 1, i, -1);
        if (3 * i <= order) s *= factor_power(order, 3 * i, i - 1, -1);
    }
    return s;
}

// Splits a Log table supported on powers of T^M into rows indexed by i with
// T^{Mi}; a nonzero row at an exponent not divisible by M is rejected.
inline std::map<unsigned, polynomial> log_rows_scaled(const log_series& l, unsigned M) {
    std::map<unsigned, polynomial> rows;
    for (unsigned i : l.rows()) {
        if (i % M != 0)
            throw malformed_log("nonzero Log term at T^" + std::to_string(i) +
                                " not divisible by " + std::to_string(M));
        rows[i / M] = l.row(i);
    }
    return rows;
}

/* Stabilization data: the polynomials p_i(L) with
 * Log H(T) = sum_i p_i(L) T^{Mi} for the variant-2 origin series of the
 * (M, 1) action, tabulated for i = 1..i_max and each listed M.
 */
inline std::map<std::pair<unsigned, unsigned>, polynomial> stabilization_table(
    unsigned i_max, const std::vector<unsigned>& M_list) {
    std::map<std::pair<unsigned, unsigned>, polynomial> table;
    for (unsigned M : M_list) {
        if (M < 2) throw std::invalid_argument("stabilization requires M >= 2");
        const unsigned order = M * i_max;
        group_action a(M, 1, equivariant_variant::birational);
        auto rows = log_rows_scaled(log(origin_local_series(a, order)), M);
        for (const auto& [i, poly] : rows)
            if (i >= 1 && i <= i_max) table[{M, i}] = poly;
    }
    return table;
}

}  // namespace motivic
