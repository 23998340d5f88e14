#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ncgram/numeric.hpp"
#include "ncgram/partition.hpp"
#include "ncgram/polynomial.hpp"

namespace ncgram {

template <class T>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    bool square() const { return rows == cols; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

using IntMatrix = Matrix<BigInt>;
using PolyMatrix = Matrix<IntPolynomial>;
using Scalar = std::variant<BigInt, IntPolynomial>;

IntMatrix identity_matrix(std::size_t n);

// Dense matrix in one fixed scalar mode with partition labels on both axes.
struct ExactMatrix {
    std::variant<IntMatrix, PolyMatrix> entries;
    std::vector<Partition> row_labels;
    std::vector<Partition> col_labels;

    bool is_integer() const { return std::holds_alternative<IntMatrix>(entries); }
    const IntMatrix& integer() const { return std::get<IntMatrix>(entries); }
    const PolyMatrix& polynomial() const { return std::get<PolyMatrix>(entries); }
    std::size_t rows() const;
    std::size_t cols() const;
};

// rl(q*, p): loops left when p is stacked under the mirror of q
std::size_t remaining_loops(const Partition& p, const Partition& q);

// Entry (p,q) = N^{rl(q*,p)}; nullopt N gives the polynomial matrix in N.
ExactMatrix build_gram(std::size_t n, PartitionClass cls, std::optional<long> N);
ExactMatrix build_gram(const std::vector<Partition>& labels, std::optional<long> N);

BigInt determinant(const IntMatrix& m);
// Direct Bareiss over Z[X] when rows <= kDirectPolyLimit, otherwise evaluation
// at 1..D+1 and interpolation with D = (max entry degree) * rows.
IntPolynomial determinant(const PolyMatrix& m);
IntPolynomial determinant_direct(const PolyMatrix& m);
IntPolynomial determinant_interpolated(const PolyMatrix& m, std::size_t degree_bound);
Scalar determinant(const ExactMatrix& m);

inline constexpr std::size_t kDirectPolyLimit = 64;

std::size_t rank(const IntMatrix& m);
std::size_t rank(const ExactMatrix& m);

// Leading principal minors 1..k, stopping after the first zero one.
std::vector<BigInt> leading_principal_minors(const IntMatrix& m);

IntMatrix evaluate(const PolyMatrix& m, const BigInt& x);

}  // namespace ncgram
