#include "ncgram/gram.hpp"

#include <algorithm>
#include <utility>

namespace ncgram {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::size_t ExactMatrix::rows() const {
    return std::visit([](const auto& m) { return m.rows; }, entries);
}

std::size_t ExactMatrix::cols() const {
    return std::visit([](const auto& m) { return m.cols; }, entries);
}

std::size_t remaining_loops(const Partition& p, const Partition& q) {
    return compose(involution(q), p).remaining_loops;
}

ExactMatrix build_gram(const std::vector<Partition>& labels, std::optional<long> N) {
    std::size_t d = labels.size();
    ExactMatrix out;
    out.row_labels = labels;
    out.col_labels = labels;
    std::vector<std::size_t> loops(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            loops[i * d + j] = remaining_loops(labels[i], labels[j]);
    if (N) {
        IntMatrix m(d, d);
        std::vector<BigInt> powers;
        for (std::size_t i = 0; i < d * d; ++i) {
            while (powers.size() <= loops[i])
                powers.push_back(ipow(BigInt(*N), powers.size()));
            m.data[i] = powers[loops[i]];
        }
        out.entries = std::move(m);
    } else {
        PolyMatrix m(d, d);
        for (std::size_t i = 0; i < d * d; ++i)
            m.data[i] = IntPolynomial::monomial(loops[i]);
        out.entries = std::move(m);
    }
    return out;
}

ExactMatrix build_gram(std::size_t n, PartitionClass cls, std::optional<long> N) {
    if (n < 1)
        throw ArgumentError("build_gram needs n >= 1");
    return build_gram(enumerate(n, cls), N);
}

BigInt determinant(const IntMatrix& input) {
    if (!input.square())
        throw DimensionError("determinant of a non-square matrix");
    std::size_t n = input.rows;
    if (n == 0)
        return 1;
    IntMatrix a = input;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(r, c));
            sign = -sign;
        }
        mpz_srcptr pivot = a(k, k).get_mpz_t();
        for (std::size_t i = k + 1; i < n; ++i) {
            mpz_srcptr aik = a(i, k).get_mpz_t();
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_ptr aij = a(i, j).get_mpz_t();
                mpz_mul(aij, aij, pivot);
                mpz_submul(aij, aik, a(k, j).get_mpz_t());
                mpz_divexact(aij, aij, prev.get_mpz_t());
            }
        }
        for (std::size_t i = k + 1; i < n; ++i)
            a(i, k) = 0;
        prev = a(k, k);
    }
    BigInt det = a(n - 1, n - 1);
    return sign < 0 ? BigInt(-det) : det;
}

IntPolynomial determinant_direct(const PolyMatrix& input) {
    if (!input.square())
        throw DimensionError("determinant of a non-square matrix");
    std::size_t n = input.rows;
    if (n == 0)
        return 1;
    PolyMatrix a = input;
    IntPolynomial prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a(r, k).is_zero())
                ++r;
            if (r == n)
                return {};
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(r, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

IntMatrix evaluate(const PolyMatrix& m, const BigInt& x) {
    IntMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i)
        out.data[i] = m.data[i](x);
    return out;
}

IntPolynomial determinant_interpolated(const PolyMatrix& m, std::size_t degree_bound) {
    if (!m.square())
        throw DimensionError("determinant of a non-square matrix");
    std::vector<BigInt> xs, ys;
    for (std::size_t v = 1; v <= degree_bound + 1; ++v) {
        xs.emplace_back(static_cast<unsigned long>(v));
        ys.push_back(determinant(evaluate(m, xs.back())));
    }
    return interpolate(xs, ys);
}

IntPolynomial determinant(const PolyMatrix& m) {
    if (!m.square())
        throw DimensionError("determinant of a non-square matrix");
    if (m.rows <= kDirectPolyLimit)
        return determinant_direct(m);
    long max_degree = 0;
    for (const auto& e : m.data)
        max_degree = std::max(max_degree, e.degree());
    return determinant_interpolated(m, static_cast<std::size_t>(max_degree) * m.rows);
}

Scalar determinant(const ExactMatrix& m) {
    return std::visit([](const auto& mat) -> Scalar { return determinant(mat); }, m.entries);
}

std::size_t rank(const IntMatrix& input) {
    IntMatrix a = input;
    BigInt prev = 1;
    std::size_t r = 0;  // rows already used as pivots
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a(p, c) == 0)
            ++p;
        if (p == a.rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols; ++j)
                std::swap(a(r, j), a(p, j));
        // after this step each entry below is a minor of the pivot rows and columns
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            for (std::size_t j = c + 1; j < a.cols; ++j) {
                mpz_ptr aij = a(i, j).get_mpz_t();
                mpz_mul(aij, aij, a(r, c).get_mpz_t());
                mpz_submul(aij, a(i, c).get_mpz_t(), a(r, j).get_mpz_t());
                mpz_divexact(aij, aij, prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

std::size_t rank(const ExactMatrix& m) {
    if (!m.is_integer())
        throw ArgumentError("rank needs an integer matrix");
    return rank(m.integer());
}

std::vector<BigInt> leading_principal_minors(const IntMatrix& input) {
    if (!input.square())
        throw DimensionError("leading minors of a non-square matrix");
    std::size_t n = input.rows;
    IntMatrix a = input;
    BigInt prev = 1;
    std::vector<BigInt> minors;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(a(k, k));
        if (a(k, k) == 0)
            break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_ptr aij = a(i, j).get_mpz_t();
                mpz_mul(aij, aij, a(k, k).get_mpz_t());
                mpz_submul(aij, a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
                mpz_divexact(aij, aij, prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return minors;
}

}  // namespace ncgram
