#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncgram/polynomial.hpp"

using namespace ncgram;

namespace {

IntPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 10);
    std::uniform_int_distribution<long> coef(-50, 50);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = coef(rng);
    return IntPolynomial(c);
}

// U_n(v) from the three-term recurrence on plain integers
BigInt chebyshev_value(std::size_t n, const BigInt& v) {
    BigInt a = 1, b = v;
    if (n == 0)
        return a;
    for (std::size_t i = 1; i < n; ++i) {
        BigInt c = v * b - a;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace

TEST_CASE("normal form") {
    CHECK(IntPolynomial({1, 2, 0, 0}).coefficients().size() == 2);
    CHECK(IntPolynomial({0, 0}).is_zero());
    CHECK(IntPolynomial().degree() == -1);
    CHECK(IntPolynomial(7L).degree() == 0);
    CHECK((IntPolynomial::X() - IntPolynomial::X()).is_zero());
    CHECK(IntPolynomial::monomial(3, 2) == IntPolynomial({0, 0, 0, 2}));
    CHECK(IntPolynomial({1, 0, 3}).substitute_power(2) == IntPolynomial({1, 0, 0, 0, 3}));
}

TEST_CASE("arithmetic laws on random inputs") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntPolynomial());
        CHECK(-(-a) == a);
        BigInt x = t - 100;
        CHECK((a * b)(x) == a(x) * b(x));
        if (!b.is_zero())
            CHECK(divide_exact(a * b, b) == a);
    }
    CHECK_THROWS_AS(divide_exact(IntPolynomial({1, 0, 1}), IntPolynomial({1, 1})), InvariantViolation);
}

TEST_CASE("evaluation and interpolation") {
    IntPolynomial p({-1, 0, 1});
    CHECK(p(BigInt(3)) == 8);
    CHECK(p(BigRational(1, 2)) == BigRational(-3, 4));
    std::vector<BigInt> xs, ys;
    IntPolynomial q({5, -3, 0, 2});
    for (long x = 1; x <= 6; ++x) {
        xs.emplace_back(x);
        ys.push_back(q(BigInt(x)));
    }
    CHECK(interpolate(xs, ys) == q);
    CHECK_THROWS_AS(interpolate({0, 2}, {0, 1}), InvariantViolation);
}

TEST_CASE("reversed Beraha polynomials") {
    CHECK(beraha(0) == IntPolynomial());
    CHECK(beraha(1) == IntPolynomial(1L));
    CHECK(beraha(2) == IntPolynomial(1L));
    CHECK(beraha(3) == IntPolynomial({1, -1}));
    CHECK(beraha(5) == IntPolynomial({1, -3, 1}));
    for (std::size_t n = 1; n <= 30; ++n)
        CHECK(beraha(n).degree() == static_cast<long>((n - 1) / 2));
    for (std::size_t n = 1; n + 1 <= 30; ++n)
        CHECK(beraha(n + 1) == beraha(n) - IntPolynomial::X() * beraha(n - 1));
    for (long N : {4L, 5L, 9L})
        CHECK(beraha(1)(BigRational(1, N)) == 1);
}

TEST_CASE("dilated Chebyshev polynomials") {
    CHECK(chebyshev_dilated(0) == IntPolynomial(1L));
    CHECK(chebyshev_dilated(1) == IntPolynomial::X());
    CHECK(chebyshev_dilated(2) == IntPolynomial({-1, 0, 1}));
    CHECK(chebyshev_dilated(3) == IntPolynomial({0, -2, 0, 1}));
    for (std::size_t n = 0; n <= 40; ++n)
        for (long v : {-5L, -3L, -2L, 2L, 3L, 4L, 7L}) {
            BigInt value = chebyshev_dilated(n)(BigInt(v));
            CHECK(value == chebyshev_value(n, v));
            CHECK(value != 0);
        }
}

TEST_CASE("classical Chebyshev polynomials") {
    CHECK(chebyshev_classical(0) == IntPolynomial(1L));
    CHECK(chebyshev_classical(1) == IntPolynomial({0, 2}));
    CHECK(chebyshev_classical(2) == IntPolynomial({-1, 0, 4}));
    for (std::size_t n = 0; n <= 20; ++n)
        CHECK(chebyshev_classical(n)(BigInt(1)) == BigInt(static_cast<unsigned long>(n + 1)));
    for (std::size_t n = 0; n <= 15; ++n)
        for (long v : {-1L, 0L, 1L, 2L})
            CHECK(chebyshev_dilated(n)(BigInt(2 * v)) == chebyshev_classical(n)(BigInt(v)));
    // sin((n+1)t)/sin t at cos t = 1/2 cycles 1, 1, 0, −1, −1, 0
    const long cycle[] = {1, 1, 0, -1, -1, 0};
    for (std::size_t n = 0; n <= 24; ++n)
        CHECK(chebyshev_classical(n)(BigRational(1, 2)) == cycle[n % 6]);
}

TEST_CASE("Beraha and Chebyshev relation under N = x^2") {
    CHECK(beraha_reversed_in_x(1) == IntPolynomial(1L));
    CHECK(beraha_reversed_in_x(2) == IntPolynomial({0, 0, 1}));
    CHECK(IntPolynomial::X() * chebyshev_dilated(1) == IntPolynomial({0, 0, 1}));
    for (std::size_t j = 1; j <= 30; ++j) {
        auto rhs = j % 2 == 0 ? IntPolynomial::X() * chebyshev_dilated(j - 1) : chebyshev_dilated(j - 1);
        CHECK(beraha_reversed_in_x(j) == rhs);
    }
    auto report = check_beraha_chebyshev_relation(30);
    CHECK(report.passed());
    CHECK(report.j_max == 30);
    // pointwise at N = v^2
    for (std::size_t j = 1; j <= 12; ++j)
        for (long v : {2L, 3L}) {
            std::size_t s = j / 2;
            BigRational lhs = BigRational(ipow(BigInt(v * v), s)) * beraha(j)(BigRational(1, v * v));
            BigRational rhs = chebyshev_dilated(j - 1)(BigRational(v));
            if (j % 2 == 0)
                rhs *= v;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Beraha values at 1/N") {
    auto four = beraha_nonzero_at(4, 50);
    CHECK(four.passed());
    REQUIRE(four.values.size() == 50);
    for (const auto& v : four.values)
        CHECK(v > 0);
    // β_n(1/4) = n / 2^{n−1}
    for (std::size_t n = 1; n <= 50; ++n) {
        BigRational expected(BigInt(static_cast<unsigned long>(n)), ipow(2, n - 1));
        expected.canonicalize();
        CHECK(four.values[n - 1] == expected);
    }
    for (long N : {5L, 6L, 7L, 100L})
        CHECK(beraha_nonzero_at(N, 50).passed());
    // N = 3 is outside the guarantee: β_6(1/3) is recorded
    auto three = beraha_nonzero_at(3, 6);
    CHECK(three.values[5] == beraha(6)(BigRational(1, 3)));
    CHECK(three.values[5] == 0);
    CHECK(three.first_zero == 6u);
}
