#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "motivic/series.hpp"

using motivic::factor_power;
using motivic::integer;
using motivic::log_series;
using motivic::non_unit_constant_term;
using motivic::polynomial;
using motivic::series;

namespace {

polynomial L(unsigned k = 1) { return polynomial::lefschetz(k); }

series make(unsigned order, std::initializer_list<polynomial> coeffs) {
    series s(order);
    unsigned k = 0;
    for (const auto& c : coeffs) s[k++] = c;
    return s;
}

series random_unit_series(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> deg(0, 3);
    series s = series::one(order);
    for (unsigned k = 1; k <= order; ++k) {
        polynomial p;
        for (unsigned t = 0, n = deg(rng) + 1; t < n; ++t)
            p += polynomial::term(coeff(rng), deg(rng));
        s[k] = p;
    }
    return s;
}

}  // namespace

TEST_CASE("product", "[series]") {
    const series one_plus = make(4, {1, 1});
    const series one_minus = make(4, {1, -1});
    series want(4);
    want[0] = 1;
    want[2] = -1;
    CHECK(one_plus * one_minus == want);
    CHECK(one_plus * series::one(4) == one_plus);

    const series a = make(2, {1, L()});
    const series b = make(2, {1, 1});
    CHECK(a * b == make(2, {1, L() + 1, L()}));
}

TEST_CASE("product truncates to the smaller order", "[series]") {
    const series a = series::one(7);
    const series b = series::one(3);
    CHECK((a * b).order() == 3);
}

TEST_CASE("inverse", "[series]") {
    const unsigned order = 8;
    series geo = inverse(make(order, {1, -1}));
    for (unsigned k = 0; k <= order; ++k) CHECK(geo[k] == polynomial(1));

    CHECK(inverse(series::one(order)) == series::one(order));

    // zeta of the affine line: 1/(1 - L T) = sum L^k T^k
    series zeta_line = inverse(make(order, {1, -L()}));
    for (unsigned k = 0; k <= order; ++k) CHECK(zeta_line[k] == L(k));

    std::mt19937 rng(3u);
    const series a = random_unit_series(rng, order);
    CHECK(a * inverse(a) == series::one(order));

    CHECK_THROWS_AS(inverse(make(4, {polynomial(2), 1})), non_unit_constant_term);
}

TEST_CASE("substitute power", "[series]") {
    CHECK(substitute_power(make(4, {1, 1}), 3) == make(4, {1, 0, 0, 1}));
    const series a = make(5, {1, L(), L(2), 3, 0, 7});
    CHECK(substitute_power(a, 1) == a);
    series want(5);
    want[0] = 1;
    want[2] = L();
    want[4] = L(2);
    CHECK(substitute_power(make(5, {1, L(), L(2)}), 2) == want);
    CHECK_THROWS_AS(substitute_power(a, 0), std::invalid_argument);
}

TEST_CASE("factor_power expands binomially", "[series]") {
    // (1 - L T)^2 = 1 - 2 L T + L^2 T^2
    CHECK(factor_power(4, 1, 1, 2) == make(4, {1, polynomial(-2) * L(), L(2)}));
    // (1 - T^2)^{-1} = 1 + T^2 + T^4
    CHECK(factor_power(4, 2, 0, -1) == make(4, {1, 0, 1, 0, 1}));
    // (1 - T)^{-3}: coefficients C(k+2, 2)
    const series s = factor_power(5, 1, 0, -3);
    for (unsigned k = 0; k <= 5; ++k)
        CHECK(s[k] == polynomial(integer((k + 2) * (k + 1) / 2)));
    CHECK(factor_power(4, 1, 0, 0) == series::one(4));
}

TEST_CASE("log of 1 + T", "[series]") {
    // (1 - T^2)/(1 - T) = 1 + T exactly, so the table is {(1,0): 1, (2,0): -1}
    const log_series l = motivic::log(make(6, {1, 1}));
    CHECK(l.terms().size() == 2);
    CHECK(l.exponent(1, 0) == 1);
    CHECK(l.exponent(2, 0) == -1);
}

TEST_CASE("log of 1 is empty", "[series]") {
    CHECK(motivic::log(series::one(5)).empty());
    CHECK_THROWS_AS(motivic::log(make(4, {polynomial(0), 1})), non_unit_constant_term);
}

TEST_CASE("exp of a single geometric factor", "[series]") {
    log_series l(5);
    l.add(1, 1, 1);
    CHECK(motivic::exp(l) == inverse(make(5, {1, -L()})));
    CHECK(motivic::exp(log_series(5)) == series::one(5));
}

TEST_CASE("exp and log are mutually inverse", "[series]") {
    std::mt19937 rng(11u);
    for (int round = 0; round < 8; ++round) {
        const series a = random_unit_series(rng, 9);
        CHECK(motivic::exp(motivic::log(a)) == a);
    }
    // log(exp(table)) = table on a handmade sparse table
    log_series l(9);
    l.add(1, 0, 2);
    l.add(3, 2, -1);
    l.add(4, 1, 5);
    l.add(9, 0, 1);
    CHECK(motivic::log(motivic::exp(l)) == l);
}

TEST_CASE("pow reproduces the defining relation", "[series]") {
    const unsigned order = 7;
    // (1 - T)^{-L} = (1 - L T)^{-1}
    CHECK(pow(factor_power(order, 1, 0, -1), L()) == factor_power(order, 1, 1, -1));
    std::mt19937 rng(5u);
    const series a = random_unit_series(rng, order);
    CHECK(pow(a, polynomial()) == series::one(order));
    CHECK(pow(a, polynomial(1)) == a);
    CHECK_THROWS_AS(pow(make(3, {polynomial(2)}), L()), non_unit_constant_term);
}

TEST_CASE("pow of 1 + T by L", "[series]") {
    /* Geometric oracle: (1 + T)^{[A^1]} has coefficient at T^k the class of
     * the space of k distinct unordered points of the line, i.e. of monic
     * squarefree polynomials of degree k: 1, L, L^2 - L, L^3 - L^2, ...
     */
    const series got = pow(make(3, {1, 1}), L());
    CHECK(got[0] == polynomial(1));
    CHECK(got[1] == L());
    CHECK(got[2] == L(2) - L());
    CHECK(got[3] == L(3) - L(2));
    // same thing as Exp(L (T - T^2))
    log_series l(3);
    l.add(1, 1, 1);
    l.add(2, 1, -1);
    CHECK(got == motivic::exp(l));
}

TEST_CASE("pow exponential laws on random inputs", "[series]") {
    std::mt19937 rng(13u);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<unsigned> deg(0, 2);
    auto random_poly = [&] {
        polynomial p;
        for (unsigned t = 0, n = deg(rng) + 1; t < n; ++t)
            p += polynomial::term(coeff(rng), deg(rng));
        return p;
    };
    const unsigned order = 8;
    for (int round = 0; round < 4; ++round) {
        const series a = random_unit_series(rng, order);
        const series b = random_unit_series(rng, order);
        const polynomial m = random_poly();
        const polynomial m2 = random_poly();
        CHECK(pow(a, m + m2) == pow(a, m) * pow(a, m2));
        CHECK(pow(a * b, m) == pow(a, m) * pow(b, m));
        CHECK(pow(pow(a, m), m2) == pow(a, m * m2));
        series cube = a * a * a;
        CHECK(pow(a, polynomial(3)) == cube);
        for (unsigned s = 2; s <= 3; ++s)
            CHECK(pow(substitute_power(a, s), m) == substitute_power(pow(a, m), s));
    }
}

TEST_CASE("negative integer exponent is a plain polynomial power", "[series]") {
    const unsigned order = 6;
    const series base = factor_power(order, 2, 1, -1);  // 1/(1 - L T^2)
    CHECK(pow(base, polynomial(-1)) == factor_power(order, 2, 1, 1));
    CHECK(pow(base, polynomial(-2)) == factor_power(order, 2, 1, 2));
}

TEST_CASE("kapranov zeta", "[series]") {
    const unsigned order = 9;
    const series zl = motivic::kapranov_zeta(L(), order);
    for (unsigned k = 0; k <= order; ++k) CHECK(zl[k] == L(k));  // S^k A^1 = A^k

    CHECK(motivic::kapranov_zeta(polynomial(), order) == series::one(order));

    // zeta of the projective line: S^k P^1 = P^k, computed independently as
    // the product of the two geometric factors
    const series zp1 = motivic::kapranov_zeta(L() + 1, order);
    const series direct = factor_power(order, 1, 0, -1) * factor_power(order, 1, 1, -1);
    CHECK(zp1 == direct);
    for (unsigned k = 0; k <= order; ++k) {
        polynomial want;
        for (unsigned j = 0; j <= k; ++j) want += L(j);
        CHECK(zp1[k] == want);
    }
}

TEST_CASE("euler specialization", "[series]") {
    const unsigned order = 6;
    const auto ones = euler_specialization(factor_power(order, 1, 1, -1));
    for (unsigned k = 0; k <= order; ++k) CHECK(ones[k] == 1);
    const auto unit = euler_specialization(series::one(order));
    CHECK(unit[0] == 1);
    for (unsigned k = 1; k <= order; ++k) CHECK(unit[k] == 0);
}

TEST_CASE("euler specialization respects the power structure", "[series]") {
    // chi(A^m) = chi(A)^{chi(m)} as integer series, with the right side
    // computed by plain multiplication and inversion
    std::mt19937 rng(17u);
    const unsigned order = 7;
    for (int round = 0; round < 5; ++round) {
        const series a = random_unit_series(rng, order);
        std::uniform_int_distribution<int> mdist(-3, 3);
        const int n = mdist(rng);
        const polynomial m = polynomial(n) * L() - polynomial(n) * L(3) + polynomial(n);
        // chi(m) = n + n - n = n
        series spec(order);
        for (unsigned k = 0; k <= order; ++k) spec[k] = polynomial(a[k].evaluate(1));
        series want = series::one(order);
        const series base = n >= 0 ? spec : inverse(spec);
        for (int t = 0; t < std::abs(n); ++t) want *= base;
        const auto lhs = euler_specialization(pow(a, m));
        for (unsigned k = 0; k <= order; ++k) CHECK(lhs[k] == want[k].evaluate(1));
    }
}

TEST_CASE("series rendering", "[series]") {
    CHECK(series::one(1).str() == "T^0: 1\nT^1: 0\n");
    CHECK(make(2, {1, L() + 1, L()}).str() == "T^0: 1\nT^1: L + 1\nT^2: L\n");
    log_series l(12);
    l.add(3, 0, 1);
    l.add(3, 1, 1);
    l.add(12, 2, -1);
    CHECK(l.str() == "T^3: L + 1\nT^12: -L^2\n");
}
