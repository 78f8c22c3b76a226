#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace motivic {

using integer = boost::multiprecision::cpp_int;

/* Polynomial in the Lefschetz class L (the class of the affine line) with
 * arbitrary-precision integer coefficients. This is the value ring for every
 * class computed by the library. Zero coefficients are never stored, so
 * equality is plain map equality.
 */
class polynomial {
public:
    polynomial() = default;
    polynomial(long long c) { set(0, integer(c)); }
    explicit polynomial(integer c) { set(0, std::move(c)); }

    // L^k
    static polynomial lefschetz(unsigned k = 1) { return term(1, k); }

    // c * L^k
    static polynomial term(integer c, unsigned k) {
        polynomial p;
        p.set(k, std::move(c));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }

    // degree of the zero polynomial is reported as 0
    unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    integer coeff(unsigned k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? integer(0) : it->second;
    }

    const std::map<unsigned, integer>& terms() const { return coeffs_; }

    polynomial& operator+=(const polynomial& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }

    polynomial& operator-=(const polynomial& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, -c);
        return *this;
    }

    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        polynomial r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) r.add(ka + kb, ca * cb);
        return r;
    }

    polynomial operator-() const {
        polynomial r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
        return r;
    }

    friend bool operator==(const polynomial& a, const polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const polynomial& a, const polynomial& b) { return !(a == b); }

    integer evaluate(const integer& t) const {
        integer acc = 0, tp = 1;
        unsigned at = 0;
        for (const auto& [k, c] : coeffs_) {
            for (; at < k; ++at) tp *= t;
            acc += c * tp;
        }
        return acc;
    }

    // "c_k*L^k + ... + c_0", descending degree, zero terms omitted
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [k, c] = *it;
            integer a = c;
            if (first) {
                if (a < 0) {
                    os << '-';
                    a = -a;
                }
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (k == 0) {
                os << a;
            } else {
                if (a != 1) os << a << '*';
                os << 'L';
                if (k != 1) os << '^' << k;
            }
        }
        return os.str();
    }

    // Accepts the grammar produced by str() plus bare integer literals;
    // the '*' between coefficient and L is optional on input.
    static polynomial parse(std::string_view s);

private:
    void add(unsigned k, const integer& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    void set(unsigned k, integer c) {
        if (c != 0) coeffs_[k] = std::move(c);
    }

    std::map<unsigned, integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const polynomial& p) {
    return os << p.str();
}

inline polynomial polynomial::parse(std::string_view s) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto fail = [&](const char* what) -> void {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    };
    auto read_uint = [&]() -> integer {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return integer(std::string(s.substr(start, pos - start)));
    };

    polynomial result;
    skip_ws();
    if (pos == s.size()) fail("empty input");
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        integer coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = read_uint();
            have_coeff = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        unsigned deg = 0;
        if (pos < s.size() && s[pos] == 'L') {
            ++pos;
            deg = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip_ws();
                integer e = read_uint();
                if (e > 1000000) fail("exponent out of range");
                deg = e.convert_to<unsigned>();
            }
        } else if (!have_coeff) {
            fail("expected coefficient or 'L'");
        }
        result.add(deg, sign < 0 ? -coeff : coeff);
        skip_ws();
        first = false;
    }
    return result;
}

}  // namespace motivic
