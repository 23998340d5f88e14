#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncgram/gram.hpp"
#include "ncgram/tensor_model.hpp"
#include "oracles.hpp"

using namespace ncgram;

namespace {

std::size_t index_of(const std::vector<Partition>& v, const Partition& p) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == p)
            return i;
    return v.size();
}

// number of set partitions of n points with at most N blocks
std::size_t bounded_count(std::size_t n, std::size_t N) {
    std::size_t c = 0;
    for (const auto& blocks : oracle::set_partitions(n))
        c += blocks.size() <= N ? 1 : 0;
    return c;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, long range) {
    std::uniform_int_distribution<long> d(-range, range);
    IntMatrix m(n, n);
    for (auto& x : m.data)
        x = d(rng);
    return m;
}

}  // namespace

TEST_CASE("two-point non-crossing Gram matrix") {
    auto g = build_gram(2, PartitionClass::noncrossing, 4);
    REQUIRE(g.rows() == 2);
    auto single = index_of(g.row_labels, Partition::singletons(0, 2));
    auto pair = index_of(g.row_labels, Partition::pair());
    REQUIRE(single < 2);
    REQUIRE(pair < 2);
    const auto& m = g.integer();
    CHECK(m(single, single) == 16);
    CHECK(m(single, pair) == 4);
    CHECK(m(pair, single) == 4);
    CHECK(m(pair, pair) == 4);
    CHECK(std::get<BigInt>(determinant(g)) == 48);

    auto sym = build_gram(2, PartitionClass::noncrossing, std::nullopt);
    CHECK_FALSE(sym.is_integer());
    CHECK(std::get<IntPolynomial>(determinant(sym)) == IntPolynomial({0, 0, -1, 1}));
    auto one = build_gram(1, PartitionClass::noncrossing, std::nullopt);
    CHECK(std::get<IntPolynomial>(determinant(one)) == IntPolynomial::X());
    CHECK(std::get<BigInt>(determinant(build_gram(1, PartitionClass::noncrossing, 7))) == 7);
}

TEST_CASE("labels follow enumeration order") {
    for (auto cls : {PartitionClass::all, PartitionClass::noncrossing, PartitionClass::noncrossing_pairs}) {
        auto g = build_gram(4, cls, 3);
        CHECK(g.row_labels == enumerate(4, cls));
        CHECK(g.col_labels == g.row_labels);
    }
}

TEST_CASE("entries, symmetry and diagonal") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto g = build_gram(n, PartitionClass::noncrossing, 3);
        const auto& m = g.integer();
        for (std::size_t i = 0; i < m.rows; ++i) {
            CHECK(m(i, i) == ipow(BigInt(3), g.row_labels[i].block_count()));
            for (std::size_t j = 0; j < i; ++j)
                CHECK(m(i, j) == m(j, i));
        }
    }
    for (std::size_t n = 1; n <= 4; ++n)
        for (long N : {2L, 3L, 4L})
            for (auto cls : {PartitionClass::noncrossing, PartitionClass::all}) {
                auto g = build_gram(n, cls, N);
                const auto& m = g.integer();
                std::vector<DenseTensor> v;
                for (const auto& p : g.row_labels)
                    v.push_back(vector_of(p, static_cast<std::size_t>(N)));
                for (std::size_t i = 0; i < m.rows; ++i)
                    for (std::size_t j = 0; j < m.cols; ++j)
                        CHECK(m(i, j) == inner_product(v[i], v[j]));
            }
}

TEST_CASE("integer determinant against rational elimination") {
    CHECK(determinant(identity_matrix(5)) == 1);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    std::mt19937 rng(3);
    for (std::size_t n = 1; n <= 9; ++n)
        for (int t = 0; t < 20; ++t) {
            auto m = random_matrix(rng, n, t % 2 ? 2 : 40);
            CHECK(BigRational(determinant(m)) == oracle::rational_det(m));
            CHECK(rank(m) == oracle::rational_rank(m));
        }
    // a zero leading pivot forces a row swap
    IntMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(determinant(swap) == -1);
    for (std::size_t n = 1; n <= 5; ++n)
        for (auto cls : {PartitionClass::noncrossing, PartitionClass::all}) {
            auto m = build_gram(n, cls, 2).integer();
            CHECK(BigRational(determinant(m)) == oracle::rational_det(m));
        }
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("polynomial determinant agrees with integer mode") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto cls : {PartitionClass::noncrossing, PartitionClass::all, PartitionClass::noncrossing_pairs}) {
            auto sym = build_gram(n, cls, std::nullopt);
            auto det = std::get<IntPolynomial>(determinant(sym));
            for (long v : {1L, 2L, 3L, 4L, 5L, 9L})
                CHECK(det(BigInt(v)) == std::get<BigInt>(determinant(build_gram(n, cls, v))));
            CHECK(evaluate(sym.polynomial(), BigInt(3)) == build_gram(n, cls, 3).integer());
        }
    auto m = build_gram(4, PartitionClass::noncrossing, std::nullopt).polynomial();
    auto direct = determinant_direct(m);
    CHECK(determinant_interpolated(m, 4 * m.rows) == direct);
    CHECK(determinant_interpolated(m, 200) == direct);
    // above the direct limit the interpolating path is taken
    std::size_t size = kDirectPolyLimit + 1;
    PolyMatrix tri(size, size);
    IntPolynomial expected(1L);
    for (std::size_t i = 0; i < size; ++i) {
        tri(i, i) = IntPolynomial({static_cast<long>(i % 3) - 1, 1});
        expected *= tri(i, i);
        for (std::size_t j = 0; j < i; ++j)
            tri(i, j) = IntPolynomial({static_cast<long>(i * j % 5), static_cast<long>(i + j) % 2});
    }
    CHECK(determinant(tri) == expected);
    auto big = build_gram(5, PartitionClass::all, std::nullopt);
    auto det = determinant_interpolated(big.polynomial(), 5 * big.rows());
    for (long v : {2L, 5L})
        CHECK(det(BigInt(v)) == determinant(build_gram(5, PartitionClass::all, v).integer()));
    CHECK_THROWS_AS(determinant_direct(PolyMatrix(1, 2)), DimensionError);
}

TEST_CASE("rank of block-bounded families") {
    CHECK(rank(IntMatrix(3, 3)) == 0);
    CHECK(rank(build_gram(4, PartitionClass::all, 2)) == 8);
    for (std::size_t n = 1; n <= 5; ++n)
        for (long N : {1L, 2L, 3L, 4L})
            CHECK(rank(build_gram(n, PartitionClass::all, N)) == bounded_count(n, static_cast<std::size_t>(N)));
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(BigInt(static_cast<unsigned long>(rank(build_gram(n, PartitionClass::noncrossing, 4)))) ==
              oracle::catalan(n));
    CHECK_THROWS(rank(build_gram(2, PartitionClass::all, std::nullopt)));
}

TEST_CASE("leading principal minors are positive") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (long N : {4L, 5L}) {
            auto m = build_gram(n, PartitionClass::noncrossing, N).integer();
            auto minors = leading_principal_minors(m);
            CHECK(minors.size() == m.rows);
            for (const auto& d : minors)
                CHECK(d > 0);
            CHECK(minors.back() == determinant(m));
        }
}

TEST_CASE("remaining loops") {
    CHECK(remaining_loops(Partition::pair(), Partition::pair()) == 1);
    CHECK(remaining_loops(Partition::singletons(0, 2), Partition::pair()) == 1);
    CHECK(remaining_loops(Partition::singletons(0, 2), Partition::singletons(0, 2)) == 2);
    for (const auto& p : enumerate(4, PartitionClass::all))
        for (const auto& q : enumerate(4, PartitionClass::all))
            CHECK(remaining_loops(p, q) == oracle::loops(p, q));
}
