#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncgram/gram.hpp"
#include "ncgram/numeric.hpp"
#include "ncgram/partition.hpp"

namespace ncgram {

// Strata of NC(0,n). Point numbers are 1-based throughout this header.
bool in_W(const Partition& p, std::size_t r);
bool in_Y(const Partition& p, std::size_t r);
// Same set via the singleton / shared-block description.
bool in_Y_direct(const Partition& p, std::size_t r);

std::vector<Partition> stratum_W(std::size_t n, std::size_t r);
std::vector<Partition> stratum_Y(std::size_t n, std::size_t r);

// The 2n-point graph of p (points 1..n) and q (points 1'..n'), joined by
// vertical edges i–i'. The cut variant drops the edges i–i' for i <= s+1.
class PairGraph {
public:
    PairGraph(const Partition& p, const Partition& q);
    static PairGraph cut(const Partition& p, const Partition& q, std::size_t r);

    std::size_t n() const { return n_; }
    std::size_t component_count() const { return components_; }
    bool connected_pp(std::size_t i, std::size_t j) const { return comp_[i - 1] == comp_[j - 1]; }
    bool connected_qq(std::size_t i, std::size_t j) const { return comp_[n_ + i - 1] == comp_[n_ + j - 1]; }
    // point i of p with point j' of q
    bool connected_pq(std::size_t i, std::size_t j) const { return comp_[i - 1] == comp_[n_ + j - 1]; }
    // vertex ids: i -> i-1, j' -> n+j-1
    std::size_t component_of(std::size_t vertex) const { return comp_[vertex]; }

private:
    PairGraph(const Partition& p, const Partition& q, std::size_t vertical_from);
    std::size_t n_;
    std::size_t components_;
    std::vector<std::size_t> comp_;
};

bool has_r_flaw(const Partition& p, const Partition& q, std::size_t r);
BigInt e_r(const Partition& p, const Partition& q, std::size_t r, long N);

// Square matrix over W(n,r), Y(n,r) first, both parts in enumeration order.
ExactMatrix build_A(std::size_t n, std::size_t r, long N);
ExactMatrix build_B(std::size_t n, std::size_t r, long N);
std::vector<Partition> stratified_labels(std::size_t n, std::size_t r);

// Deletes point s+2 (odd r) or the singleton s+1 (even r) of p in Y(n,r).
Partition reduce_Y(const Partition& p, std::size_t r);

Partition f_manip(std::size_t i, const Partition& q, std::size_t r);
Partition g_manip(std::size_t i, const Partition& q, std::size_t r);

struct Structure {
    enum class Kind { single, pair, zero, none };
    Kind kind = Kind::none;
    std::size_t i = 0;  // [i] or [i,i+1]

    static Structure single(std::size_t i) { return {Kind::single, i}; }
    static Structure pair(std::size_t i) { return {Kind::pair, i}; }
    static Structure zero() { return {Kind::zero, 0}; }
    static Structure none() { return {Kind::none, 0}; }

    std::string to_string() const;
    friend bool operator==(const Structure&, const Structure&) = default;
};

// Every structure tag defined for (n, r), in a fixed order.
std::vector<Structure> candidate_structures(std::size_t r);
// Checks one connection scheme on H_r(p,q) pairwise.
bool structure_holds(const Partition& p, const Partition& q, std::size_t r, const Structure& st);
Structure classify_structure(const Partition& p, const Partition& q, std::size_t r);

enum class Manip { f, g };

// rl(p, manip(i,q)) − rl(p,q) as predicted from the structure of H_r(p,q).
long component_shift(const Partition& p, const Partition& q, std::size_t r, Manip kind, std::size_t i);

BigRational F_r_value(const Partition& p, const Partition& q, std::size_t r, long N);

struct RecursionStep {
    std::size_t level_n = 0;
    std::size_t r = 0;
    std::optional<BigRational> factor_beta;  // β_{r+3}(z) / β_{r+2}(z)
    std::size_t exponent = 0;                // #W(n, r+1)
    std::string B_case;                      // odd, even or zero
    std::size_t B_scale_exponent = 0;        // power of N relating B(n,r) to the smaller A
    std::optional<BigInt> base_value;
    BigRational value;                       // det A(level_n, r)
};

struct RecursionResult {
    BigRational det;
    std::vector<RecursionStep> trace;  // one entry per distinct A(m, r), in completion order
};

RecursionResult recursion_det(std::size_t n, long N);

}  // namespace ncgram
