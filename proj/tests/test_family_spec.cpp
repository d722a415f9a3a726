#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uniratio/family_spec.hpp"

using namespace uniratio;

TEST_CASE("validate_spec accepts well-formed data") {
    const FamilySpec s = validate_spec(1, 0, {-1, -1}, {1});
    CHECK(s.k == 1);
    CHECK(s.l == 0);
    CHECK(s.palindromic());  // length-1 b

    const FamilySpec pisot = validate_spec(0, 2, {0}, {-1, -1, 1});
    CHECK_FALSE(pisot.palindromic());
}

TEST_CASE("validate_spec rejects malformed data") {
    CHECK_THROWS_AS(validate_spec(0, 0, {0}, {0}), SpecError);        // zero b0
    CHECK_THROWS_AS(validate_spec(0, 1, {0}, {1, 0}), SpecError);     // zero bl
    CHECK_THROWS_AS(validate_spec(-1, 0, {0}, {1}), SpecError);       // negative k
    CHECK_THROWS_AS(validate_spec(0, -2, {0}, {1}), SpecError);       // negative l
    CHECK_THROWS_AS(validate_spec(1, 0, {0}, {1}), SpecError);        // |a| != k+1
    CHECK_THROWS_AS(validate_spec(0, 1, {0}, {1}), SpecError);        // |b| != l+1
    CHECK_THROWS_AS(validate_spec(2, 0, {1, 1, 0}, {1}), SpecError);  // a_k = 0, k > 0
}

TEST_CASE("expand_polynomial matches hand expansions") {
    SUBCASE("single peripheral term") {
        const auto p = expand_polynomial(validate_spec(0, 0, {3}, {1}), 4);
        CHECK(p.coeffs == std::vector<long long>{1, 0, 0, 0, 3, 0, 0, 0, 1});  // x^8 + 3x^4 + 1
    }
    SUBCASE("l = 1 all ones") {
        const auto p = expand_polynomial(validate_spec(0, 1, {1}, {1, 1}), 2);
        CHECK(p.coeffs == std::vector<long long>{1, 1, 0, 1, 0, 1, 1});  // x^6+x^5+x^3+x+1
    }
    SUBCASE("Pisot coefficients, n = 3") {
        const auto p = expand_polynomial(validate_spec(0, 2, {0}, {-1, -1, 1}), 3);
        CHECK(p.coeffs == std::vector<long long>{1, -1, -1, 0, 0, 0, 0, 0, -1, -1, 1});
        CHECK(p.degree() == 10);
    }
}

TEST_CASE("expand_polynomial requires 2n > k and k <= n+l") {
    const FamilySpec s = validate_spec(4, 2, {0, 0, 0, 0, 1}, {1, 0, 1});
    CHECK_THROWS_AS(expand_polynomial(s, 2), SpecError);  // 2n = k
    CHECK_NOTHROW(expand_polynomial(s, 3));
    // k > n+l: the defining expression has a negative exponent
    const FamilySpec tall = validate_spec(4, 0, {0, 0, 0, 0, 1}, {1});
    CHECK_THROWS_AS(expand_polynomial(tall, 3), SpecError);
}

TEST_CASE("IntPolynomial basics") {
    IntPolynomial p{{0, 0, 2, -3}};
    CHECK(p.degree() == 3);
    CHECK(p.normalize_trailing() == 2);
    CHECK(p.coeffs == std::vector<long long>{2, -3});
    CHECK_FALSE(p.is_reciprocal());
    CHECK(IntPolynomial{{1, -1, -1, -1, 1}}.is_reciprocal());
}

namespace {

FamilySpec random_palindromic_spec(std::mt19937& gen) {
    const int l = static_cast<int>(gen() % 5);
    const int k = static_cast<int>(gen() % 4);
    std::vector<long long> b(static_cast<std::size_t>(l) + 1, 0);
    for (int j = 0; j <= l / 2; ++j) {
        long long v = static_cast<long long>(gen() % 7) - 3;
        if (j == 0 && v == 0) v = 1;
        b[static_cast<std::size_t>(j)] = v;
        b[static_cast<std::size_t>(l - j)] = v;
    }
    std::vector<long long> a(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 0; j <= k; ++j)
        a[static_cast<std::size_t>(j)] = static_cast<long long>(gen() % 7) - 3;
    if (k > 0 && a.back() == 0) a.back() = 1;
    return validate_spec(k, l, a, b);
}

}  // namespace

TEST_CASE("expansion of palindromic specs is reciprocal with exact degree") {
    std::mt19937 gen(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const FamilySpec s = random_palindromic_spec(gen);
        const int n = static_cast<int>(gen() % 20) + s.k + 1;
        const auto p = expand_polynomial(s, n);
        CAPTURE(s.k);
        CAPTURE(s.l);
        CAPTURE(n);
        CHECK(p.degree() == 2 * n + 2 * s.l);
        CHECK(p.is_reciprocal());
    }
}

TEST_CASE("middle block carries a-values, periphery carries b-values") {
    std::mt19937 gen(777);
    for (int trial = 0; trial < 100; ++trial) {
        const FamilySpec s = random_palindromic_spec(gen);
        const int n = s.k + 5 + static_cast<int>(gen() % 10);  // k < n: no collisions
        const auto p = expand_polynomial(s, n);
        const int center = n + s.l;
        CHECK(p.coeffs[static_cast<std::size_t>(center)] == s.a[0]);
        for (int j = 1; j <= s.k; ++j) {
            CHECK(p.coeffs[static_cast<std::size_t>(center + j)] ==
                  s.a[static_cast<std::size_t>(j)]);
            CHECK(p.coeffs[static_cast<std::size_t>(center - j)] ==
                  s.a[static_cast<std::size_t>(j)]);
        }
        for (int j = 0; j <= s.l; ++j) {
            CHECK(p.coeffs[static_cast<std::size_t>(center + n + j)] ==
                  s.b[static_cast<std::size_t>(j)]);
            CHECK(p.coeffs[static_cast<std::size_t>(center - n - j)] ==
                  s.b[static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("expansion detects 64-bit overflow instead of wrapping") {
    // k = n makes the a- and b-contributions collide on one coefficient
    const long long big = 6000000000000000000LL;
    const FamilySpec s = validate_spec(1, 0, {0, big}, {big});
    CHECK_THROWS_AS(expand_polynomial(s, 1), NumericError);
}
