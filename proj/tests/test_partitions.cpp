#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "ncgram/partition.hpp"
#include "oracles.hpp"

using namespace ncgram;

namespace {

Partition line(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
    return Partition::on_line(n, blocks);
}

// every partition on (k,l) with k,l <= m
std::vector<Partition> small_shapes(std::size_t m) {
    std::vector<Partition> out;
    for (std::size_t k = 0; k <= m; ++k)
        for (std::size_t l = 0; l <= m; ++l)
            for (auto& p : enumerate_shape(k, l))
                out.push_back(p);
    return out;
}

Partition id_power(std::size_t k) { return k == 0 ? Partition() : Partition::identity(k); }

}  // namespace

TEST_CASE("canonical form and text round trip") {
    auto p = Partition::from_labels(0, 4, {7, 7, 3, 7});
    CHECK(p.to_string() == "0|4|0010");
    CHECK(p == Partition::parse("0|4|0010"));
    CHECK(p.block_count() == 2);
    CHECK(p == line(4, {{3}, {1, 2, 4}}));
    for (const auto& q : small_shapes(2))
        CHECK(Partition::parse(q.to_string()) == q);
    CHECK_THROWS(Partition::parse("0|3|01"));
    CHECK_THROWS(Partition::parse("0|2|10"));
    CHECK_THROWS(Partition::parse("garbage"));
    auto shapes = small_shapes(2);
    std::unordered_set<Partition> seen(shapes.begin(), shapes.end());
    CHECK(seen.size() == shapes.size());
}

TEST_CASE("enumeration counts against recurrence oracles") {
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(BigInt(static_cast<unsigned long>(enumerate(n, PartitionClass::noncrossing).size())) ==
              oracle::catalan(n));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(BigInt(static_cast<unsigned long>(enumerate(n, PartitionClass::all).size())) == oracle::bell(n));
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(BigInt(static_cast<unsigned long>(enumerate(2 * n, PartitionClass::noncrossing_pairs).size())) ==
              oracle::catalan(n));
    for (std::size_t n = 1; n <= 11; n += 2)
        CHECK(enumerate(n, PartitionClass::noncrossing_pairs).empty());
}

TEST_CASE("enumeration examples") {
    auto empty = enumerate(0, PartitionClass::all);
    REQUIRE(empty.size() == 1);
    CHECK(empty.front().point_count() == 0);
    CHECK(empty.front().block_count() == 0);
    CHECK(enumerate(3, PartitionClass::all).size() == 5);
    CHECK(enumerate(4, PartitionClass::noncrossing).size() == 14);
    // restricted-growth order: strictly increasing, no repeats
    auto all = enumerate(6, PartitionClass::all);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].rgs() < all[i].rgs());
    // same set as the insertion oracle
    std::set<Partition> mine(all.begin(), all.end());
    std::set<Partition> theirs;
    for (const auto& blocks : oracle::set_partitions(6)) {
        std::vector<std::vector<std::size_t>> b(blocks.begin(), blocks.end());
        theirs.insert(line(6, b));
    }
    CHECK(mine == theirs);
}

TEST_CASE("crossing test against the quadruple definition") {
    CHECK(is_noncrossing(Partition::pair()));
    CHECK_FALSE(is_noncrossing(line(4, {{1, 3}, {2, 4}})));
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(is_noncrossing(Partition::one_block(0, n)));
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& p : enumerate(n, PartitionClass::all))
            CHECK(is_noncrossing(p) == oracle::quadruple_noncrossing(p));
    // on two rows the cyclic order u1..uk, lk..l1 is used
    auto cross = Partition::from_blocks(2, 2, {{{Row::upper, 1}, {Row::lower, 1}}, {{Row::upper, 2}, {Row::lower, 2}}});
    CHECK(is_noncrossing(cross));
    auto twist = Partition::from_blocks(2, 2, {{{Row::upper, 1}, {Row::lower, 2}}, {{Row::upper, 2}, {Row::lower, 1}}});
    CHECK_FALSE(is_noncrossing(twist));
}

TEST_CASE("tensor product") {
    auto pp = tensor(Partition::pair(), Partition::pair());
    CHECK(pp == line(4, {{1, 2}, {3, 4}}));
    for (const auto& p : small_shapes(2)) {
        CHECK(tensor(Partition(), p) == p);
        CHECK(tensor(p, Partition()) == p);
    }
    std::mt19937 rng(7);
    auto pool = small_shapes(2);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        auto ab = tensor(a, b);
        CHECK(ab.block_count() == a.block_count() + b.block_count());
        CHECK(ab.upper_count() == a.upper_count() + b.upper_count());
        CHECK(ab.lower_count() == a.lower_count() + b.lower_count());
    }
}

TEST_CASE("involution") {
    auto top = involution(Partition::pair());
    CHECK(top.upper_count() == 2);
    CHECK(top.lower_count() == 0);
    CHECK(top.block_count() == 1);
    for (std::size_t k = 0; k <= 4; ++k)
        for (const auto& p : enumerate_shape(k, 4 - k))
            CHECK(involution(involution(p)) == p);
    auto pool = small_shapes(3);
    std::vector<Partition> small;
    for (const auto& p : pool)
        if (p.point_count() <= 3)
            small.push_back(p);
    for (const auto& a : small)
        for (const auto& b : small)
            CHECK(involution(tensor(a, b)) == tensor(involution(a), involution(b)));
}

TEST_CASE("composition") {
    for (const auto& s : small_shapes(2)) {
        auto c = compose(id_power(s.lower_count()), s);
        CHECK(c.partition == s);
        CHECK(c.remaining_loops == 0);
        auto d = compose(s, id_power(s.upper_count()));
        CHECK(d.partition == s);
        CHECK(d.remaining_loops == 0);
    }
    auto loop = compose(involution(Partition::pair()), Partition::pair());
    CHECK(loop.remaining_loops == 1);
    CHECK(loop.partition.point_count() == 0);
    for (std::size_t n = 0; n <= 5; ++n) {
        auto all = enumerate(n, PartitionClass::noncrossing);
        for (const auto& p : all) {
            CHECK(compose(involution(p), p).remaining_loops == p.block_count());
            for (const auto& q : all) {
                auto c = compose(involution(q), p);
                CHECK(is_noncrossing(c.partition));
                CHECK(c.remaining_loops <= n);
                CHECK(c.remaining_loops == oracle::loops(p, q));
            }
        }
    }
    CHECK_THROWS_AS(compose(Partition::identity(3), Partition::pair()), DimensionError);
}

TEST_CASE("composition and involution on small shapes") {
    auto pool = small_shapes(3);
    for (const auto& s : pool)
        for (const auto& t : pool) {
            if (t.upper_count() != s.lower_count())
                continue;
            auto ts = compose(t, s);
            auto rev = compose(involution(s), involution(t));
            CHECK(involution(ts.partition) == rev.partition);
            CHECK(ts.remaining_loops == rev.remaining_loops);
        }
}

TEST_CASE("tensor associativity") {
    auto pool = small_shapes(1);
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
}

TEST_CASE("rotations") {
    CHECK(rotate(Partition::identity(1), Corner::upper_right_down) == Partition::pair());
    CHECK(rotate(Partition::identity(1), Corner::upper_left_down) == Partition::pair());
    std::pair<Corner, Corner> inverse[] = {{Corner::upper_right_down, Corner::lower_right_up},
                                           {Corner::lower_right_up, Corner::upper_right_down},
                                           {Corner::upper_left_down, Corner::lower_left_up},
                                           {Corner::lower_left_up, Corner::upper_left_down}};
    for (const auto& p : enumerate_shape(2, 2)) {
        for (auto [c, inv] : inverse)
            CHECK(rotate(rotate(p, c), inv) == p);
        // right rotation of u_k: (p ⊗ id) ∘ (id^{k−1} ⊗ ⊓)
        auto lhs = rotate(p, Corner::upper_right_down);
        auto rhs = compose(tensor(p, Partition::identity(1)), tensor(id_power(1), Partition::pair()));
        CHECK(lhs == rhs.partition);
        CHECK(rhs.remaining_loops == 0);
    }
    for (std::size_t l = 0; l <= 3; ++l)
        for (const auto& p : enumerate_shape(3, l)) {
            auto rhs = compose(tensor(p, Partition::identity(1)), tensor(id_power(2), Partition::pair()));
            CHECK(rotate(p, Corner::upper_right_down) == rhs.partition);
        }
    // the moved point keeps its block
    auto p = Partition::from_blocks(2, 1, {{{Row::upper, 1}, {Row::lower, 1}}, {{Row::upper, 2}}});
    CHECK(rotate(p, Corner::upper_left_down) ==
          Partition::from_blocks(1, 2, {{{Row::lower, 1}, {Row::lower, 2}}, {{Row::upper, 1}}}));
    CHECK_THROWS_AS(rotate(Partition::pair(), Corner::upper_right_down), RotationUndefined);
    CHECK_THROWS_AS(rotate(involution(Partition::pair()), Corner::lower_left_up), RotationUndefined);
    // non-crossing is preserved by rotation
    for (std::size_t k = 0; k <= 4; ++k)
        for (const auto& q : enumerate_shape(k, 4 - k))
            if (k > 0 && is_noncrossing(q))
                CHECK(is_noncrossing(rotate(q, Corner::upper_right_down)));
}

TEST_CASE("kernel") {
    CHECK(kernel({1, 1, 2}) == line(3, {{1, 2}, {3}}));
    CHECK(kernel({5, 6, 6}) == line(3, {{1}, {2, 3}}));
    CHECK(kernel({4, 4, 4, 4}) == Partition::one_block(0, 4));
    CHECK(kernel({}) == Partition());
    CHECK(kernel({3, 1, 3, 2}) == line(4, {{1, 3}, {2}, {4}}));
}

TEST_CASE("refinement order") {
    for (std::size_t n = 0; n <= 4; ++n) {
        auto all = enumerate(n, PartitionClass::all);
        auto bottom = Partition::singletons(0, n);
        auto top = Partition::one_block(0, n);
        for (const auto& p : all) {
            CHECK(refines(bottom, p));
            CHECK(refines(p, p));
            CHECK(refines(p, top));
            if (refines(top, p))
                CHECK(p == top);
            for (const auto& q : all) {
                if (refines(p, q) && refines(q, p))
                    CHECK(p == q);
                for (const auto& r : all)
                    if (refines(p, q) && refines(q, r))
                        CHECK(refines(p, r));
            }
        }
    }
    CHECK(refines(line(3, {{1}, {2, 3}}), line(3, {{1, 2, 3}})));
    CHECK_FALSE(refines(line(3, {{1, 2}, {3}}), line(3, {{1}, {2, 3}})));
}

TEST_CASE("invariant suite") {
    auto results = check_partition_invariants(2);
    CHECK(all_passed(results));
    CHECK(results.size() == 7);
    for (const auto& r : results) {
        INFO(r.name);
        CHECK(r.checked > 0);
    }
}
