#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncgram/check.hpp"

namespace ncgram {

enum class Row { upper, lower };

struct PointLabel {
    Row row;
    std::size_t index;  // 1-based
};

enum class PartitionClass { all, noncrossing, noncrossing_pairs };

enum class Corner { upper_right_down, lower_right_up, upper_left_down, lower_left_up };

// Set partition of k upper and l lower points.
//
// Stored as a restricted-growth string over the points in the order
// u1..uk, l1..ll: label[x] is the index of the block of point x, blocks
// being numbered by first occurrence.
class Partition {
public:
    Partition() = default;

    // Arbitrary labels are accepted and canonicalized; equal labels mean same block.
    static Partition from_labels(std::size_t k, std::size_t l, const std::vector<std::size_t>& labels);
    static Partition from_blocks(std::size_t k, std::size_t l,
                                 const std::vector<std::vector<PointLabel>>& blocks);
    // Blocks on (0,n) with 1-based point numbers.
    static Partition on_line(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
    // Text form k|l|rgs
    static Partition parse(std::string_view text);

    static Partition identity(std::size_t k);
    static Partition pair();  // the pair partition in P(0,2)
    static Partition singletons(std::size_t k, std::size_t l);
    static Partition one_block(std::size_t k, std::size_t l);

    std::size_t upper_count() const { return k_; }
    std::size_t lower_count() const { return labels_.size() - k_; }
    std::size_t point_count() const { return labels_.size(); }
    std::size_t block_count() const { return blocks_; }

    // 0-based position in u1..uk,l1..ll
    std::size_t position(PointLabel pt) const;
    std::uint8_t block_of(std::size_t position) const { return labels_[position]; }
    const std::vector<std::uint8_t>& rgs() const { return labels_; }

    // each block as ascending positions
    std::vector<std::vector<std::size_t>> blocks() const;
    std::size_t block_size(std::size_t position) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::size_t k_ = 0;
    std::size_t blocks_ = 0;
    std::vector<std::uint8_t> labels_;
};

struct Composition {
    Partition partition;
    std::size_t remaining_loops = 0;
};

std::vector<Partition> enumerate(std::size_t points, PartitionClass cls);
// Partitions on (k,l) in restricted-growth order.
std::vector<Partition> enumerate_shape(std::size_t k, std::size_t l);

bool is_noncrossing(const Partition& p);
bool is_pair_partition(const Partition& p);
bool in_class(const Partition& p, PartitionClass cls);

Partition tensor(const Partition& p, const Partition& q);
Partition involution(const Partition& p);
// t after s: s on (k,l), t on (l,m)
Composition compose(const Partition& t, const Partition& s);
Partition rotate(const Partition& p, Corner corner);
Partition kernel(const std::vector<std::size_t>& labels);
bool refines(const Partition& p, const Partition& q);

// Structural identities over all partitions with at most max_points points
// in each row (operands and results alike).
std::vector<CheckResult> check_partition_invariants(std::size_t max_points);

std::string_view class_name(PartitionClass cls);
std::string_view corner_name(Corner c);

}  // namespace ncgram

template <>
struct std::hash<ncgram::Partition> {
    std::size_t operator()(const ncgram::Partition& p) const noexcept;
};
