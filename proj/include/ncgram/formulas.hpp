#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncgram/numeric.hpp"

namespace ncgram {

struct ExponentTable {
    std::size_t n = 0;
    std::map<std::size_t, BigInt> entries;  // i -> a_{n,i}
};

// a_{n,i} = C(2n,n−i) − 2C(2n,n−i−1) + C(2n,n−i−2), i = 1..n
ExponentTable difrancesco_exponents(std::size_t n);
// ∏ U_i(N)^{a_{n,i}}: determinant of the Gram matrix of NC₂ on 2n points
BigRational difrancesco_det(std::size_t n, long N);

// b(n,k) = k/n · C(2n−k−1, n−1)
BigRational kosmolinsky_b(long n, long k);

// Gram determinant of NC₂ on the given number of points (1 for odd counts: empty index set).
BigInt nc2_gram_det(std::size_t points, long N);

struct FormulaComparison {
    std::size_t n = 0;
    long N = 0;
    std::string variant;  // "verbatim" or "doubled"
    BigInt direct;
    std::optional<BigRational> formula;  // unset when the product is undefined
    bool match = false;
};

// Product over i of det(A_{NC₂}(m_i, 0))^{(−1)^i C(n−i+1, i)} times
// ∏ (U_{n−i}(N)/U_i(N))^{b(n−i, n−2i)}, compared with det A_{NC₂}(2n,0).
// "verbatim" takes m_i = n−i points, "doubled" takes m_i = 2(n−i).
std::vector<FormulaComparison> kosmolinsky_check(std::size_t n_max, long N);

}  // namespace ncgram
