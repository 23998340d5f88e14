#include "ncgram/tensor_model.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ncgram {

namespace {

// labels constant on every block of p; values taken from i then j
bool valid_labelling(const Partition& p, const std::size_t* values) {
    std::vector<std::size_t> first(p.block_count(), SIZE_MAX);
    for (std::size_t x = 0; x < p.point_count(); ++x) {
        auto b = p.block_of(x);
        if (first[b] == SIZE_MAX)
            first[b] = values[x];
        else if (first[b] != values[x])
            return false;
    }
    return true;
}

// enumerates [0,N)^len in row-major order, calling f(values) each time
template <class F>
void for_each_index(std::size_t N, std::size_t len, F&& f) {
    std::vector<std::size_t> v(len, 0);
    while (true) {
        f(v);
        std::size_t pos = len;
        while (pos > 0) {
            --pos;
            if (++v[pos] < N)
                break;
            v[pos] = 0;
            if (pos == 0)
                return;
        }
        if (len == 0)
            return;
    }
}

std::string law_pair(const Partition& a, const Partition& b) {
    return a.to_string() + " , " + b.to_string();
}

}  // namespace

std::size_t dense_size(std::size_t N, std::size_t legs) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < legs; ++i) {
        size *= N;
        if (size > kDenseBudget)
            throw BudgetExceeded("dense tensor exceeds " + std::to_string(kDenseBudget) + " entries");
    }
    return size;
}

DenseTensor::DenseTensor(std::size_t N, std::size_t legs)
    : N_(N), legs_(legs), entries_(dense_size(N, legs)) {
    if (N == 0)
        throw ArgumentError("N must be positive");
}

std::size_t DenseTensor::flat_index(const std::vector<std::size_t>& index) const {
    if (index.size() != legs_)
        throw DimensionError("multi-index length differs from leg count");
    std::size_t flat = 0;
    for (auto v : index) {
        if (v >= N_)
            throw ArgumentError("multi-index entry out of range");
        flat = flat * N_ + v;
    }
    return flat;
}

std::vector<std::size_t> DenseTensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(legs_);
    for (std::size_t pos = legs_; pos > 0; --pos) {
        index[pos - 1] = flat % N_;
        flat /= N_;
    }
    return index;
}

const BigInt& DenseTensor::at(const std::vector<std::size_t>& index) const {
    return entries_[flat_index(index)];
}

int delta_p(const Partition& p, const std::vector<std::size_t>& i, const std::vector<std::size_t>& j) {
    if (i.size() != p.upper_count() || j.size() != p.lower_count())
        throw DimensionError("delta_p: labelling does not fit the partition");
    std::vector<std::size_t> values(i);
    values.insert(values.end(), j.begin(), j.end());
    return valid_labelling(p, values.data()) ? 1 : 0;
}

DenseTensor vector_of(const Partition& p, std::size_t N) {
    if (p.upper_count() != 0)
        throw DimensionError("vector_of expects a partition without upper points");
    DenseTensor t(N, p.point_count());
    std::size_t flat = 0;
    for_each_index(N, p.point_count(), [&](const std::vector<std::size_t>& v) {
        if (valid_labelling(p, v.data()))
            t[flat] = 1;
        ++flat;
    });
    return t;
}

BigInt inner_product(const DenseTensor& u, const DenseTensor& v) {
    if (u.dimension_per_leg() != v.dimension_per_leg() || u.legs() != v.legs())
        throw DimensionError("inner_product: shapes differ");
    BigInt sum = 0;
    for (std::size_t x = 0; x < u.size(); ++x)
        if (u[x] != 0 && v[x] != 0)
            sum += u[x] * v[x];
    return sum;
}

DenseMap map_of(const Partition& p, std::size_t N) {
    if (N == 0)
        throw ArgumentError("N must be positive");
    DenseMap m;
    m.cols = dense_size(N, p.upper_count());
    m.rows = dense_size(N, p.lower_count());
    dense_size(N, p.point_count());
    m.data.assign(m.rows * m.cols, 0);
    // full labelling u1..uk,l1..ll flattens to i * N^l + j
    std::size_t flat = 0;
    for_each_index(N, p.point_count(), [&](const std::vector<std::size_t>& v) {
        if (valid_labelling(p, v.data())) {
            std::size_t i = flat / m.rows, j = flat % m.rows;
            m.data[j * m.cols + i] = 1;
        }
        ++flat;
    });
    return m;
}

DenseMap multiply(const DenseMap& a, const DenseMap& b) {
    if (a.cols != b.rows)
        throw DimensionError("multiply: inner dimensions differ");
    DenseMap c{a.rows, b.cols, std::vector<std::int64_t>(a.rows * b.cols, 0)};
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t t = 0; t < a.cols; ++t) {
            auto x = a.data[r * a.cols + t];
            if (x == 0)
                continue;
            for (std::size_t col = 0; col < b.cols; ++col)
                c.data[r * c.cols + col] += x * b.data[t * b.cols + col];
        }
    return c;
}

DenseMap kronecker(const DenseMap& a, const DenseMap& b) {
    DenseMap c{a.rows * b.rows, a.cols * b.cols, {}};
    c.data.assign(c.rows * c.cols, 0);
    for (std::size_t ra = 0; ra < a.rows; ++ra)
        for (std::size_t ca = 0; ca < a.cols; ++ca) {
            auto x = a.at(ra, ca);
            if (x == 0)
                continue;
            for (std::size_t rb = 0; rb < b.rows; ++rb)
                for (std::size_t cb = 0; cb < b.cols; ++cb)
                    c.data[(ra * b.rows + rb) * c.cols + ca * b.cols + cb] = x * b.at(rb, cb);
        }
    return c;
}

DenseMap transpose(const DenseMap& a) {
    DenseMap t{a.cols, a.rows, std::vector<std::int64_t>(a.data.size())};
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c)
            t.data[c * t.cols + r] = a.at(r, c);
    return t;
}

std::vector<CheckResult> check_functor_laws(std::size_t N, std::size_t max_points) {
    if (N == 0)
        throw ArgumentError("N must be positive");
    // shapes[k][l] holds P(k,l) and their maps
    std::vector<std::vector<std::vector<std::pair<Partition, DenseMap>>>> shapes(max_points + 1);
    for (std::size_t k = 0; k <= max_points; ++k) {
        shapes[k].resize(max_points + 1);
        for (std::size_t l = 0; l <= max_points; ++l)
            for (auto& p : enumerate_shape(k, l))
                shapes[k][l].emplace_back(p, map_of(p, N));
    }
    auto lookup = [&](const Partition& p) -> const DenseMap& {
        for (const auto& [r, m] : shapes[p.upper_count()][p.lower_count()])
            if (r == p)
                return m;
        throw InvariantViolation("partition missing from law table");
    };

    CheckResult tensor_law{"tensor", 0, {}};
    CheckResult involution_law{"involution", 0, {}};
    CheckResult composition_law{"composition", 0, {}};

    for (std::size_t kp = 0; kp <= max_points; ++kp)
        for (std::size_t lp = 0; lp <= max_points; ++lp)
            for (std::size_t kq = 0; kp + kq <= max_points; ++kq)
                for (std::size_t lq = 0; lp + lq <= max_points; ++lq)
                    for (const auto& [p, mp] : shapes[kp][lp])
                        for (const auto& [q, mq] : shapes[kq][lq]) {
                            ++tensor_law.checked;
                            if (lookup(tensor(q, p)) != kronecker(mq, mp))
                                tensor_law.fail(law_pair(q, p));
                        }

    for (std::size_t k = 0; k <= max_points; ++k)
        for (std::size_t l = 0; l <= max_points; ++l)
            for (const auto& [p, mp] : shapes[k][l]) {
                ++involution_law.checked;
                if (lookup(involution(p)) != transpose(mp))
                    involution_law.fail(p.to_string());
            }

    for (std::size_t k = 0; k <= max_points; ++k)
        for (std::size_t l = 0; l <= max_points; ++l)
            for (std::size_t m = 0; m <= max_points; ++m)
                for (const auto& [p, mp] : shapes[k][l])
                    for (const auto& [q, mq] : shapes[l][m]) {
                        ++composition_law.checked;
                        auto [qp, loops] = compose(q, p);
                        DenseMap lhs = lookup(qp);
                        std::int64_t scale = 1;
                        for (std::size_t x = 0; x < loops; ++x)
                            scale *= static_cast<std::int64_t>(N);
                        for (auto& v : lhs.data)
                            v *= scale;
                        if (lhs != multiply(mq, mp))
                            composition_law.fail(law_pair(q, p));
                    }

    return {tensor_law, involution_law, composition_law};
}

BasisExpansion express_in_bounded_basis(const Partition& q, std::size_t N) {
    if (q.upper_count() != 0)
        throw DimensionError("express_in_bounded_basis expects a partition on (0,n)");
    if (N == 0)
        throw ArgumentError("N must be positive");
    BasisExpansion out;
    if (q.block_count() <= N) {
        out.trivial = true;
        out.coefficients.emplace_back(q, BigRational(1));
        return out;
    }
    // coarsenings of q with at most N blocks, grouped by block count
    std::map<std::size_t, std::vector<Partition>, std::greater<>> by_blocks;
    for (auto& p : enumerate(q.point_count(), PartitionClass::all))
        if (p.block_count() <= N && refines(q, p))
            by_blocks[p.block_count()].push_back(p);

    std::vector<std::pair<Partition, BigRational>> terms;  // L_{M+1}
    for (std::size_t M = N; M >= 1; --M) {
        std::vector<std::pair<Partition, BigRational>> level;
        for (const auto& p : by_blocks[M]) {
            // k̂ = canonical labels of p, so ker(k̂) = p and entries lie in [0, M)
            std::vector<std::size_t> k_hat(p.rgs().begin(), p.rgs().end());
            BigRational pairing = 0;
            for (const auto& [r, alpha] : terms)
                if (delta_p(r, {}, k_hat))
                    pairing += alpha;
            level.emplace_back(p, 1 - pairing);
        }
        terms.insert(terms.end(), level.begin(), level.end());
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& t : terms)
        if (t.second != 0)
            out.coefficients.push_back(std::move(t));
    return out;
}

}  // namespace ncgram
