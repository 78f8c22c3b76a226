#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "motivic/polynomial.hpp"

namespace motivic {

struct non_unit_constant_term : std::domain_error {
    non_unit_constant_term()
        : std::domain_error("series operation requires constant term 1") {}
};

/* Power series in T over the polynomial ring in L, truncated at an explicit
 * order (inclusive). A binary operation on series of different orders
 * truncates to the smaller one.
 */
class series {
public:
    explicit series(unsigned order) : order_(order), coeffs_(order + 1) {}

    static series one(unsigned order) {
        series s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    unsigned order() const { return order_; }

    const polynomial& operator[](unsigned k) const { return coeffs_.at(k); }
    polynomial& operator[](unsigned k) { return coeffs_.at(k); }

    friend series operator*(const series& a, const series& b) {
        series r(std::min(a.order_, b.order_));
        for (unsigned i = 0; i <= r.order_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (unsigned j = 0; i + j <= r.order_; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    series& operator*=(const series& o) { return *this = *this * o; }

    friend bool operator==(const series& a, const series& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const series& a, const series& b) { return !(a == b); }

    // "T^k: <polynomial>" for every k = 0..order
    std::string str() const {
        std::string out;
        for (unsigned k = 0; k <= order_; ++k)
            out += "T^" + std::to_string(k) + ": " + coeffs_[k].str() + "\n";
        return out;
    }

private:
    unsigned order_;
    std::vector<polynomial> coeffs_;
};

/* Sparse exponent table of the factorization prod_{i,j} (1 - L^j T^i)^{-k_ij}
 * of a series with unit constant term; this is the Log of the series with
 * respect to the power structure. Exponents may be negative.
 */
class log_series {
public:
    explicit log_series(unsigned order) : order_(order) {}

    unsigned order() const { return order_; }
    bool empty() const { return terms_.empty(); }

    const std::map<std::pair<unsigned, unsigned>, integer>& terms() const {
        return terms_;
    }

    integer exponent(unsigned i, unsigned j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? integer(0) : it->second;
    }

    void add(unsigned i, unsigned j, const integer& k) {
        if (k == 0) return;
        if (i < 1 || i > order_)
            throw std::invalid_argument("log_series term index out of range");
        auto [it, inserted] = terms_.try_emplace({i, j}, k);
        if (!inserted) {
            it->second += k;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // sum_j k_ij L^j for a fixed T-power i
    polynomial row(unsigned i) const {
        polynomial p;
        for (auto it = terms_.lower_bound({i, 0});
             it != terms_.end() && it->first.first == i; ++it)
            p += polynomial::term(it->second, it->first.second);
        return p;
    }

    // T-powers with at least one nonzero exponent, ascending
    std::vector<unsigned> rows() const {
        std::vector<unsigned> out;
        for (const auto& [key, k] : terms_)
            if (out.empty() || out.back() != key.first) out.push_back(key.first);
        return out;
    }

    friend bool operator==(const log_series& a, const log_series& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const log_series& a, const log_series& b) { return !(a == b); }

    // "T^i: <polynomial>" for the nonzero rows, ascending
    std::string str() const {
        std::string out;
        for (unsigned i : rows())
            out += "T^" + std::to_string(i) + ": " + row(i).str() + "\n";
        return out;
    }

private:
    unsigned order_;
    std::map<std::pair<unsigned, unsigned>, integer> terms_;
};

namespace detail {

inline integer binomial(const integer& n, unsigned m) {
    integer r = 1;
    for (unsigned t = 1; t <= m; ++t) r = r * (n - m + t) / t;
    return r;
}

}  // namespace detail

// (1 - L^j T^i)^e expanded to the given order, for any integer exponent e.
inline series factor_power(unsigned order, unsigned i, unsigned j, const integer& e) {
    if (i < 1) throw std::invalid_argument("factor_power requires i >= 1");
    series r = series::one(order);
    if (e == 0) return r;
    if (e > 0) {
        // binomial expansion, alternating signs
        unsigned mmax = order / i;
        if (e < mmax) mmax = e.convert_to<unsigned>();
        for (unsigned m = 1; m <= mmax; ++m) {
            integer c = detail::binomial(e, m);
            r[i * m] = polynomial::term(m % 2 ? -c : c, j * m);
        }
    } else {
        // geometric-type expansion of the negative power
        integer k = -e;
        for (unsigned m = 1; m * i <= order; ++m)
            r[i * m] = polynomial::term(detail::binomial(k + m - 1, m), j * m);
    }
    return r;
}

inline series inverse(const series& a) {
    if (!a[0].is_one()) throw non_unit_constant_term();
    series b(a.order());
    b[0] = 1;
    for (unsigned k = 1; k <= a.order(); ++k) {
        polynomial acc;
        for (unsigned m = 1; m <= k; ++m) acc += a[m] * b[k - m];
        b[k] = -acc;
    }
    return b;
}

// T -> T^s; the order is kept, coefficients pushed beyond it are dropped.
inline series substitute_power(const series& a, unsigned s) {
    if (s < 1) throw std::invalid_argument("substitute_power requires s >= 1");
    series r(a.order());
    for (unsigned k = 0; static_cast<unsigned long long>(k) * s <= a.order(); ++k)
        r[k * s] = a[k];
    return r;
}

/* Triangular elimination: at the lowest T-degree n whose residual coefficient
 * sum_j c_j L^j is nonzero, record k_{n,j} = c_j and multiply the residual by
 * prod_j (1 - L^j T^n)^{c_j}, which clears degree n and leaves lower degrees
 * untouched. The resulting decomposition is unique.
 */
inline log_series log(const series& a) {
    if (!a[0].is_one()) throw non_unit_constant_term();
    log_series out(a.order());
    series residual = a;
    for (unsigned n = 1; n <= a.order(); ++n) {
        const polynomial c = residual[n];
        if (c.is_zero()) continue;
        for (const auto& [j, cj] : c.terms()) {
            out.add(n, j, cj);
            residual *= factor_power(a.order(), n, j, cj);
        }
    }
    return out;
}

inline series exp(const log_series& l) {
    series r = series::one(l.order());
    for (const auto& [key, k] : l.terms())
        r *= factor_power(l.order(), key.first, key.second, -k);
    return r;
}

/* Power structure exponentiation A(T)^m for m in the polynomial ring: the Log
 * of A is multiplied by m termwise, with L^s shifting the table column, then
 * exponentiated back. This reproduces (1 - T)^{-L^s} = (1 - L^s T)^{-1} and is
 * additive and multiplicative in m.
 */
inline series pow(const series& a, const polynomial& m) {
    if (!a[0].is_one()) throw non_unit_constant_term();
    log_series la = log(a);
    log_series lm(a.order());
    for (const auto& [key, k] : la.terms())
        for (const auto& [s, c] : m.terms()) lm.add(key.first, key.second + s, c * k);
    return exp(lm);
}

inline series kapranov_zeta(const polynomial& m, unsigned order) {
    return pow(inverse(factor_power(order, 1, 0, 1)), m);
}

inline std::vector<integer> euler_specialization(const series& a) {
    std::vector<integer> out(a.order() + 1);
    for (unsigned k = 0; k <= a.order(); ++k) out[k] = a[k].evaluate(1);
    return out;
}

}  // namespace motivic
