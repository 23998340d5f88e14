#include "ncgram/partition.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "ncgram/numeric.hpp"
#include "ncgram/union_find.hpp"

namespace ncgram {

namespace {

constexpr std::string_view kDigits =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

std::size_t parse_count(std::string_view s) {
    if (s.empty())
        throw ArgumentError("partition text: empty count");
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw ArgumentError("partition text: bad count '" + std::string(s) + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

}  // namespace

Partition Partition::from_labels(std::size_t k, std::size_t l, const std::vector<std::size_t>& labels) {
    if (labels.size() != k + l)
        throw DimensionError("label count does not match k+l");
    Partition p;
    p.k_ = k;
    p.labels_.resize(labels.size());
    std::unordered_map<std::size_t, std::uint8_t> seen;
    for (std::size_t x = 0; x < labels.size(); ++x) {
        auto [it, fresh] = seen.try_emplace(labels[x], static_cast<std::uint8_t>(seen.size()));
        if (fresh && seen.size() > std::numeric_limits<std::uint8_t>::max())
            throw ArgumentError("too many blocks");
        p.labels_[x] = it->second;
    }
    p.blocks_ = seen.size();
    return p;
}

Partition Partition::from_blocks(std::size_t k, std::size_t l,
                                 const std::vector<std::vector<PointLabel>>& blocks) {
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> labels(k + l, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw ArgumentError("empty block");
        for (PointLabel pt : blocks[b]) {
            std::size_t count = pt.row == Row::upper ? k : l;
            if (pt.index == 0 || pt.index > count)
                throw ArgumentError("point index out of range");
            std::size_t pos = (pt.row == Row::upper ? 0 : k) + pt.index - 1;
            if (labels[pos] != unset)
                throw ArgumentError("blocks are not disjoint");
            labels[pos] = b;
        }
    }
    if (std::find(labels.begin(), labels.end(), unset) != labels.end())
        throw ArgumentError("blocks do not cover all points");
    return from_labels(k, l, labels);
}

Partition Partition::on_line(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<std::vector<PointLabel>> tagged;
    for (const auto& b : blocks) {
        auto& t = tagged.emplace_back();
        for (std::size_t i : b)
            t.push_back({Row::lower, i});
    }
    return from_blocks(0, n, tagged);
}

Partition Partition::parse(std::string_view text) {
    auto a = text.find('|');
    auto b = a == std::string_view::npos ? a : text.find('|', a + 1);
    if (b == std::string_view::npos)
        throw ArgumentError("partition text must look like k|l|rgs");
    std::size_t k = parse_count(text.substr(0, a));
    std::size_t l = parse_count(text.substr(a + 1, b - a - 1));
    std::string_view rgs = text.substr(b + 1);
    if (rgs.size() != k + l)
        throw ArgumentError("partition text: rgs length differs from k+l");
    std::vector<std::size_t> labels;
    std::size_t next = 0;
    for (char c : rgs) {
        auto v = kDigits.find(c);
        if (v == std::string_view::npos || v > next)
            throw ArgumentError("partition text: not a restricted-growth string");
        if (v == next)
            ++next;
        labels.push_back(v);
    }
    return from_labels(k, l, labels);
}

Partition Partition::identity(std::size_t k) {
    std::vector<std::size_t> labels(2 * k);
    for (std::size_t i = 0; i < k; ++i)
        labels[i] = labels[k + i] = i;
    return from_labels(k, k, labels);
}

Partition Partition::pair() { return from_labels(0, 2, {0, 0}); }

Partition Partition::singletons(std::size_t k, std::size_t l) {
    std::vector<std::size_t> labels(k + l);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    return from_labels(k, l, labels);
}

Partition Partition::one_block(std::size_t k, std::size_t l) {
    return from_labels(k, l, std::vector<std::size_t>(k + l, 0));
}

std::size_t Partition::position(PointLabel pt) const {
    std::size_t count = pt.row == Row::upper ? upper_count() : lower_count();
    if (pt.index == 0 || pt.index > count)
        throw ArgumentError("point index out of range");
    return (pt.row == Row::upper ? 0 : k_) + pt.index - 1;
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(blocks_);
    for (std::size_t x = 0; x < labels_.size(); ++x)
        out[labels_[x]].push_back(x);
    return out;
}

std::size_t Partition::block_size(std::size_t position) const {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), labels_[position]));
}

std::string Partition::to_string() const {
    std::string s = std::to_string(upper_count()) + "|" + std::to_string(lower_count()) + "|";
    for (auto v : labels_) {
        if (v >= kDigits.size())
            throw ArgumentError("too many blocks for text form");
        s += kDigits[v];
    }
    return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.k_ <=> b.k_; c != 0)
        return c;
    if (auto c = a.labels_.size() <=> b.labels_.size(); c != 0)
        return c;
    return a.labels_ <=> b.labels_;
}

std::vector<Partition> enumerate_shape(std::size_t k, std::size_t l) {
    std::size_t n = k + l;
    std::vector<Partition> out;
    std::vector<std::size_t> a(n, 0);
    // prefix_max[i] = max(a[0..i-1]), with a[0] fixed to 0
    std::vector<std::size_t> prefix_max(n + 1, 0);
    while (true) {
        out.push_back(Partition::from_labels(k, l, a));
        if (n <= 1)
            break;
        std::size_t i = n - 1;
        while (i > 0 && a[i] > prefix_max[i])
            --i;
        if (i == 0)
            break;
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j)
            a[j] = 0;
        for (std::size_t j = i; j < n; ++j)
            prefix_max[j + 1] = std::max(prefix_max[j], a[j]);
    }
    return out;
}

std::vector<Partition> enumerate(std::size_t points, PartitionClass cls) {
    auto all = enumerate_shape(0, points);
    if (cls == PartitionClass::all)
        return all;
    std::vector<Partition> out;
    for (auto& p : all)
        if (in_class(p, cls))
            out.push_back(std::move(p));
    return out;
}

bool is_noncrossing(const Partition& p) {
    // cyclic order u1..uk, ll..l1
    std::vector<std::uint8_t> seq(p.rgs().begin(), p.rgs().begin() + static_cast<long>(p.upper_count()));
    for (std::size_t j = p.lower_count(); j > 0; --j)
        seq.push_back(p.rgs()[p.upper_count() + j - 1]);

    std::vector<std::size_t> last(p.block_count(), 0);
    for (std::size_t x = 0; x < seq.size(); ++x)
        last[seq[x]] = x;
    std::vector<bool> opened(p.block_count(), false);
    std::vector<std::uint8_t> stack;
    for (std::size_t x = 0; x < seq.size(); ++x) {
        auto b = seq[x];
        if (!opened[b]) {
            opened[b] = true;
            if (last[b] != x)
                stack.push_back(b);
            continue;
        }
        if (stack.empty() || stack.back() != b)
            return false;
        if (last[b] == x)
            stack.pop_back();
    }
    return true;
}

bool is_pair_partition(const Partition& p) {
    std::vector<std::size_t> sizes(p.block_count(), 0);
    for (auto v : p.rgs())
        ++sizes[v];
    return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });
}

bool in_class(const Partition& p, PartitionClass cls) {
    switch (cls) {
        case PartitionClass::all:
            return true;
        case PartitionClass::noncrossing:
            return is_noncrossing(p);
        case PartitionClass::noncrossing_pairs:
            return is_pair_partition(p) && is_noncrossing(p);
    }
    return false;
}

Partition tensor(const Partition& p, const Partition& q) {
    std::size_t bp = p.block_count();
    std::vector<std::size_t> labels;
    labels.reserve(p.point_count() + q.point_count());
    auto pu = p.rgs().begin(), qu = q.rgs().begin();
    auto pk = static_cast<long>(p.upper_count()), qk = static_cast<long>(q.upper_count());
    for (auto it = pu; it != pu + pk; ++it)
        labels.push_back(*it);
    for (auto it = qu; it != qu + qk; ++it)
        labels.push_back(bp + *it);
    for (auto it = pu + pk; it != p.rgs().end(); ++it)
        labels.push_back(*it);
    for (auto it = qu + qk; it != q.rgs().end(); ++it)
        labels.push_back(bp + *it);
    return Partition::from_labels(p.upper_count() + q.upper_count(),
                                  p.lower_count() + q.lower_count(), labels);
}

Partition involution(const Partition& p) {
    std::vector<std::size_t> labels(p.rgs().begin() + static_cast<long>(p.upper_count()), p.rgs().end());
    labels.insert(labels.end(), p.rgs().begin(), p.rgs().begin() + static_cast<long>(p.upper_count()));
    return Partition::from_labels(p.lower_count(), p.upper_count(), labels);
}

Composition compose(const Partition& t, const Partition& s) {
    if (s.lower_count() != t.upper_count())
        throw DimensionError("compose: lower row of s differs from upper row of t");
    std::size_t k = s.upper_count(), l = s.lower_count(), m = t.lower_count();
    // nodes: s upper [0,k), middle [k,k+l), t lower [k+l,k+l+m)
    UnionFind uf(k + l + m);
    auto join_blocks = [&](const Partition& p, std::size_t offset) {
        std::vector<std::size_t> first(p.block_count(), SIZE_MAX);
        for (std::size_t x = 0; x < p.point_count(); ++x) {
            auto b = p.block_of(x);
            if (first[b] == SIZE_MAX)
                first[b] = offset + x;
            else
                uf.unite(first[b], offset + x);
        }
    };
    join_blocks(s, 0);
    join_blocks(t, k);

    std::vector<std::size_t> labels;
    labels.reserve(k + m);
    std::vector<bool> outer_root(k + l + m, false);
    for (std::size_t x = 0; x < k; ++x) {
        labels.push_back(uf.find(x));
        outer_root[labels.back()] = true;
    }
    for (std::size_t x = 0; x < m; ++x) {
        labels.push_back(uf.find(k + l + x));
        outer_root[labels.back()] = true;
    }
    std::size_t loops = 0;
    std::vector<bool> counted(k + l + m, false);
    for (std::size_t x = k; x < k + l; ++x) {
        auto r = uf.find(x);
        if (!outer_root[r] && !counted[r]) {
            counted[r] = true;
            ++loops;
        }
    }
    return {Partition::from_labels(k, m, labels), loops};
}

Partition rotate(const Partition& p, Corner corner) {
    std::size_t k = p.upper_count(), l = p.lower_count();
    const auto& a = p.rgs();
    std::vector<std::size_t> up(a.begin(), a.begin() + static_cast<long>(k));
    std::vector<std::size_t> low(a.begin() + static_cast<long>(k), a.end());
    switch (corner) {
        case Corner::upper_right_down:
        case Corner::upper_left_down:
            if (k == 0)
                throw RotationUndefined("rotation from an empty upper row");
            break;
        case Corner::lower_right_up:
        case Corner::lower_left_up:
            if (l == 0)
                throw RotationUndefined("rotation from an empty lower row");
            break;
    }
    switch (corner) {
        case Corner::upper_right_down:
            low.push_back(up.back());
            up.pop_back();
            break;
        case Corner::lower_right_up:
            up.push_back(low.back());
            low.pop_back();
            break;
        case Corner::upper_left_down:
            low.insert(low.begin(), up.front());
            up.erase(up.begin());
            break;
        case Corner::lower_left_up:
            up.insert(up.begin(), low.front());
            low.erase(low.begin());
            break;
    }
    std::size_t nk = up.size(), nl = low.size();
    up.insert(up.end(), low.begin(), low.end());
    return Partition::from_labels(nk, nl, up);
}

Partition kernel(const std::vector<std::size_t>& labels) {
    return Partition::from_labels(0, labels.size(), labels);
}

bool refines(const Partition& p, const Partition& q) {
    if (p.upper_count() != q.upper_count() || p.point_count() != q.point_count())
        throw DimensionError("refines: shapes differ");
    constexpr std::size_t unset = SIZE_MAX;
    std::vector<std::size_t> image(p.block_count(), unset);
    for (std::size_t x = 0; x < p.point_count(); ++x) {
        auto& img = image[p.block_of(x)];
        if (img == unset)
            img = q.block_of(x);
        else if (img != q.block_of(x))
            return false;
    }
    return true;
}

std::string_view class_name(PartitionClass cls) {
    switch (cls) {
        case PartitionClass::all:
            return "all";
        case PartitionClass::noncrossing:
            return "nc";
        case PartitionClass::noncrossing_pairs:
            return "nc2";
    }
    return "?";
}

std::string_view corner_name(Corner c) {
    switch (c) {
        case Corner::upper_right_down:
            return "upper_right_down";
        case Corner::lower_right_up:
            return "lower_right_up";
        case Corner::upper_left_down:
            return "upper_left_down";
        case Corner::lower_left_up:
            return "lower_left_up";
    }
    return "?";
}

}  // namespace ncgram

std::size_t std::hash<ncgram::Partition>::operator()(const ncgram::Partition& p) const noexcept {
    std::size_t h = p.upper_count() * 1000003u + p.point_count();
    for (auto v : p.rgs())
        h = h * 131 + v;
    return h;
}

namespace ncgram {

std::vector<CheckResult> check_partition_invariants(std::size_t max_points) {
    std::vector<std::vector<std::vector<Partition>>> shapes(max_points + 1);
    for (std::size_t k = 0; k <= max_points; ++k)
        for (std::size_t l = 0; l <= max_points; ++l)
            shapes[k].push_back(enumerate_shape(k, l));
    auto each = [&](auto&& f) {
        for (const auto& row : shapes)
            for (const auto& list : row)
                for (const auto& p : list)
                    f(p);
    };
    auto fits = [&](const Partition& p) {
        return p.upper_count() <= max_points && p.lower_count() <= max_points;
    };

    CheckResult involutive{"involution_involutive", 0, {}};
    CheckResult reverses{"involution_reverses_composition", 0, {}};
    CheckResult over_tensor{"involution_over_tensor", 0, {}};
    CheckResult associative{"tensor_associative", 0, {}};
    CheckResult inverse{"rotation_inverse", 0, {}};
    CheckResult rot_identity{"rotation_identity", 0, {}};
    CheckResult nc_closed{"noncrossing_composition", 0, {}};

    each([&](const Partition& p) {
        ++involutive.checked;
        if (involution(involution(p)) != p)
            involutive.fail(p.to_string());

        const std::pair<Corner, Corner> corners[] = {
            {Corner::upper_right_down, Corner::lower_right_up},
            {Corner::lower_right_up, Corner::upper_right_down},
            {Corner::upper_left_down, Corner::lower_left_up},
            {Corner::lower_left_up, Corner::upper_left_down}};
        for (auto [there, back] : corners) {
            bool from_upper = there == Corner::upper_right_down || there == Corner::upper_left_down;
            if ((from_upper ? p.upper_count() : p.lower_count()) == 0)
                continue;
            ++inverse.checked;
            if (rotate(rotate(p, there), back) != p)
                inverse.fail(p.to_string() + " " + std::string(corner_name(there)));
        }

        if (std::size_t k = p.upper_count(); k > 0) {
            ++rot_identity.checked;
            auto lhs = rotate(p, Corner::upper_right_down);
            auto rhs = compose(tensor(p, Partition::identity(1)),
                               tensor(Partition::identity(k - 1), Partition::pair()));
            if (rhs.remaining_loops != 0 || rhs.partition != lhs)
                rot_identity.fail(p.to_string());
        }
    });

    each([&](const Partition& s) {
        for (std::size_t m = 0; m <= max_points; ++m)
            for (const auto& t : shapes[s.lower_count()][m]) {
                auto st = compose(t, s);
                ++reverses.checked;
                auto ts = compose(involution(s), involution(t));
                if (ts.partition != involution(st.partition) || ts.remaining_loops != st.remaining_loops)
                    reverses.fail(t.to_string() + " , " + s.to_string());
                if (is_noncrossing(s) && is_noncrossing(t)) {
                    ++nc_closed.checked;
                    if (!is_noncrossing(st.partition))
                        nc_closed.fail(t.to_string() + " , " + s.to_string());
                }
            }
    });

    each([&](const Partition& p) {
        each([&](const Partition& q) {
            auto pq = tensor(p, q);
            if (!fits(pq))
                return;
            ++over_tensor.checked;
            if (involution(pq) != tensor(involution(p), involution(q)))
                over_tensor.fail(p.to_string() + " , " + q.to_string());
            each([&](const Partition& r) {
                if (!fits(tensor(pq, r)))
                    return;
                ++associative.checked;
                if (tensor(pq, r) != tensor(p, tensor(q, r)))
                    associative.fail(p.to_string() + " , " + q.to_string() + " , " + r.to_string());
            });
        });
    });

    return {involutive, reverses, over_tensor, associative, inverse, rot_identity, nc_closed};
}

}  // namespace ncgram
