#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ncgram/numeric.hpp"

namespace ncgram {

// Univariate polynomial over Z, ascending coefficients, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long c);  // NOLINT: constants convert implicitly
    IntPolynomial(const BigInt& c);  // NOLINT
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial X() { return IntPolynomial({0, 1}); }
    static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);

    const std::vector<BigInt>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }

    BigInt operator()(const BigInt& x) const;
    BigRational operator()(const BigRational& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator-(IntPolynomial a);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // p(X^k)
    IntPolynomial substitute_power(std::size_t k) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

// Exact quotient a / b over Z[X]; throws InvariantViolation if b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Interpolates the unique polynomial of degree < xs.size() through (xs, ys);
// throws InvariantViolation if the result has non-integer coefficients.
IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

// β_0 = 0, β_1 = 1, β_{n+1} = β_n − X β_{n−1}
IntPolynomial beraha(std::size_t n);
// U_0 = 1, U_1 = X, U_{n+1} = X U_n − U_{n−1}
IntPolynomial chebyshev_dilated(std::size_t n);
// 𝒰_0 = 1, 𝒰_1 = 2X, 𝒰_{n+1} = 2X 𝒰_n − 𝒰_{n−1}
IntPolynomial chebyshev_classical(std::size_t n);

struct RelationReport {
    std::size_t j_max = 0;
    std::optional<std::size_t> first_failure;
    bool passed() const { return !first_failure; }
};

// With N = x²: x^{2s} β_j(x^{−2}) equals x U_{j−1}(x) for j = 2s and U_{j−1}(x) for j = 2s+1.
RelationReport check_beraha_chebyshev_relation(std::size_t j_max);
// Left-hand side above as a polynomial in x.
IntPolynomial beraha_reversed_in_x(std::size_t j);

struct NonzeroReport {
    long N = 0;
    std::vector<BigRational> values;  // β_1(1/N) .. β_{n_max}(1/N)
    std::optional<std::size_t> first_zero;
    bool passed() const { return !first_zero; }
};

NonzeroReport beraha_nonzero_at(long N, std::size_t n_max);

}  // namespace ncgram
