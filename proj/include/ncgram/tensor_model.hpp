#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ncgram/check.hpp"
#include "ncgram/numeric.hpp"
#include "ncgram/partition.hpp"

namespace ncgram {

inline constexpr std::size_t kDenseBudget = 1'000'000;

// N^legs, throwing BudgetExceeded past kDenseBudget
std::size_t dense_size(std::size_t N, std::size_t legs);

// Element of (C^N)^{⊗legs}; multi-indices are row-major with the
// leftmost leg most significant and values in [0, N).
class DenseTensor {
public:
    DenseTensor(std::size_t N, std::size_t legs);

    std::size_t dimension_per_leg() const { return N_; }
    std::size_t legs() const { return legs_; }
    std::size_t size() const { return entries_.size(); }

    const BigInt& operator[](std::size_t flat) const { return entries_[flat]; }
    BigInt& operator[](std::size_t flat) { return entries_[flat]; }
    const BigInt& at(const std::vector<std::size_t>& index) const;

    std::size_t flat_index(const std::vector<std::size_t>& index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

private:
    std::size_t N_;
    std::size_t legs_;
    std::vector<BigInt> entries_;
};

// Labels may be any values; only equality matters.
int delta_p(const Partition& p, const std::vector<std::size_t>& i, const std::vector<std::size_t>& j);

DenseTensor vector_of(const Partition& p, std::size_t N);
BigInt inner_product(const DenseTensor& u, const DenseTensor& v);

// T_p for p on (k,l) as an N^l x N^k matrix, entry (j,i) = delta_p(i,j).
struct DenseMap {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    friend bool operator==(const DenseMap&, const DenseMap&) = default;
};

DenseMap map_of(const Partition& p, std::size_t N);
DenseMap multiply(const DenseMap& a, const DenseMap& b);
DenseMap kronecker(const DenseMap& a, const DenseMap& b);
DenseMap transpose(const DenseMap& a);

// Tensor, involution and composition laws over every partition with at
// most max_points points in each row (operands and results alike).
std::vector<CheckResult> check_functor_laws(std::size_t N, std::size_t max_points);

struct BasisExpansion {
    bool trivial = false;  // b(q) <= N: the expansion is q itself
    std::vector<std::pair<Partition, BigRational>> coefficients;  // nonzero only, enumeration order
};

// Writes T_q(1) as a combination of T_p(1) with b(p) <= N and q ⪯ p.
BasisExpansion express_in_bounded_basis(const Partition& q, std::size_t N);

}  // namespace ncgram
