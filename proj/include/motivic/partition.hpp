#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "motivic/series.hpp"

namespace motivic {

// Young diagram: weakly decreasing positive parts, empty allowed. The box in
// row b (y-exponent) and column a (x-exponent) corresponds to the monomial
// x^a y^b outside the associated monomial ideal.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const { return size_; }
    unsigned rows() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // b_i with the convention b_i = 0 for i >= number of rows
    unsigned part(unsigned i) const { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const partition& a, const partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const partition& a, const partition& b) { return !(a == b); }
    friend bool operator<(const partition& a, const partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out + "]";
    }

private:
    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

// All partitions of k in descending lexicographic order: (k), ..., (1^k).
inline std::vector<partition> partitions_of(unsigned k) {
    std::vector<partition> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<unsigned> p{k};
    for (;;) {
        out.push_back(partition(p));
        std::size_t i = p.size();
        while (i > 0 && p[i - 1] == 1) --i;
        if (i == 0) break;
        --i;
        unsigned freed = static_cast<unsigned>(p.size() - 1 - i) + 1;
        p[i] -= 1;
        p.resize(i + 1);
        const unsigned cap = p[i];
        while (freed > cap) {
            p.push_back(cap);
            freed -= cap;
        }
        if (freed) p.push_back(freed);
    }
    return out;
}

// Hook length (arm + leg + 1) of every box, in row-major box order.
inline std::vector<unsigned> hook_lengths(const partition& p) {
    const auto& parts = p.parts();
    const unsigned r = p.rows();
    const unsigned width = parts.empty() ? 0 : parts[0];
    // conjugate part c[a] = number of rows longer than a
    std::vector<unsigned> conj(width, 0);
    for (unsigned b = 0; b < r; ++b)
        for (unsigned a = 0; a < parts[b]; ++a) ++conj[a];
    std::vector<unsigned> hooks;
    hooks.reserve(p.size());
    for (unsigned b = 0; b < r; ++b)
        for (unsigned a = 0; a < parts[b]; ++a)
            hooks.push_back((parts[b] - 1 - a) + (conj[a] - 1 - b) + 1);
    return hooks;
}

// Number of boxes in each quasi-homogeneous weight class: the box of
// x^a y^b has weight (a + N*b) mod M.
inline std::vector<unsigned> box_weight_counts(const partition& p, unsigned M, long long N) {
    if (M < 1) throw std::invalid_argument("group order M must be >= 1");
    const long long n = ((N % static_cast<long long>(M)) + M) % M;
    std::vector<unsigned> counts(M, 0);
    const auto& parts = p.parts();
    for (unsigned b = 0; b < parts.size(); ++b) {
        const unsigned row_base = static_cast<unsigned>((n * b) % M);
        for (unsigned a = 0; a < parts[b]; ++a) ++counts[(row_base + a) % M];
    }
    return counts;
}

inline bool is_equidistributed(const partition& p, unsigned M, long long N) {
    auto counts = box_weight_counts(p, M, N);
    for (unsigned w = 1; w < M; ++w)
        if (counts[w] != counts[0]) return false;
    return true;
}

struct core_quotient {
    partition core;
    std::vector<partition> quotient;  // exactly M components

    unsigned quotient_size() const {
        unsigned s = 0;
        for (const auto& q : quotient) s += q.size();
        return s;
    }
};

/* M-core and M-quotient via beta-numbers. The first-column hook lengths of
 * the diagram, padded to a length divisible by M, are split into residue
 * classes mod M; each class read as a beta-set of its own gives one quotient
 * component, and pushing every class down to its minimal configuration gives
 * the beta-set of the core. The core is what iterated removal of rim hooks
 * of length M leaves behind, independent of the removal order.
 */
inline core_quotient core_and_quotient(const partition& p, unsigned M) {
    if (M < 1) throw std::invalid_argument("group order M must be >= 1");
    const unsigned r = p.rows();
    const unsigned padded = (r + M - 1) / M * M;

    std::vector<unsigned> beta(padded);
    for (unsigned i = 0; i < padded; ++i) beta[i] = p.part(i) + (padded - 1 - i);

    core_quotient result;
    std::vector<std::vector<unsigned>> classes(M);
    for (unsigned b : beta) classes[b % M].push_back(b / M);

    std::vector<unsigned> core_beta;
    core_beta.reserve(padded);
    for (unsigned s = 0; s < M; ++s) {
        auto& vals = classes[s];
        std::sort(vals.rbegin(), vals.rend());
        const unsigned n = static_cast<unsigned>(vals.size());
        std::vector<unsigned> parts;
        for (unsigned t = 0; t < n; ++t) {
            unsigned part = vals[t] - (n - 1 - t);
            if (part) parts.push_back(part);
        }
        result.quotient.emplace_back(std::move(parts));
        for (unsigned t = 0; t < n; ++t) core_beta.push_back(s + t * M);
    }

    std::sort(core_beta.rbegin(), core_beta.rend());
    std::vector<unsigned> core_parts;
    for (unsigned i = 0; i < padded; ++i) {
        unsigned part = core_beta[i] - (padded - 1 - i);
        if (part) core_parts.push_back(part);
    }
    result.core = partition(std::move(core_parts));
    return result;
}

// prod_{i>=1} (1 - T^{Mi})^M / (1 - T^i): coefficient of T^k counts the
// M-core partitions of k.
inline series core_counting_series(unsigned M, unsigned order) {
    if (M < 1) throw std::invalid_argument("group order M must be >= 1");
    series s = series::one(order);
    for (unsigned i = 1; i <= order; ++i) s *= factor_power(order, i, 0, -1);
    for (unsigned i = 1; static_cast<unsigned long long>(M) * i <= order; ++i)
        s *= factor_power(order, M * i, 0, integer(M));
    return s;
}

}  // namespace motivic
