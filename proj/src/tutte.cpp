#include "ncgram/tutte.hpp"

#include <map>
#include <utility>

#include "ncgram/polynomial.hpp"
#include "ncgram/union_find.hpp"

namespace ncgram {

namespace {

std::size_t half(std::size_t r) { return r / 2; }
bool odd(std::size_t r) { return r % 2 == 1; }

std::size_t points_of(const Partition& p) {
    if (p.upper_count() != 0)
        throw DimensionError("expected a partition on (0,n)");
    return p.point_count();
}

// block label of 1-based point x
std::size_t label(const Partition& p, std::size_t x) { return p.block_of(x - 1); }

bool singleton(const Partition& p, std::size_t x) { return p.block_size(x - 1) == 1; }

void require_column_range(const Partition& q, std::size_t r) {
    std::size_t n = points_of(q);
    if (r + 1 >= n)
        throw ArgumentError("manipulations need r < n-1");
    if (!in_W(q, r + 1))
        throw ArgumentError("manipulated partition must lie in W(n,r+1)");
}

Partition relabel(const Partition& q, const std::vector<std::size_t>& labels) {
    return Partition::from_labels(0, q.point_count(), labels);
}

// point s+1 leaves K(s+1); for odd r it joins X(s+2)
void detach_last(std::vector<std::size_t>& next, const std::vector<std::size_t>& old, std::size_t r,
                 std::size_t fresh) {
    std::size_t s = half(r);
    next[s] = odd(r) ? old[s + 1] : fresh;
}

using Classes = std::vector<std::vector<std::size_t>>;

// vertex ids of the connection scheme for a structure tag
Classes scheme(std::size_t n, std::size_t r, const Structure& st) {
    std::size_t s = half(r);
    auto P = [](std::size_t j) { return j - 1; };
    auto Q = [n](std::size_t j) { return n + j - 1; };
    Classes c;
    std::size_t last = odd(r) ? s + 1 : s;  // last j joined to (j+1)'
    switch (st.kind) {
        case Structure::Kind::single:
            for (std::size_t j = 1; j < st.i; ++j)
                c.push_back({P(j), Q(j)});
            c.push_back({Q(st.i)});
            for (std::size_t j = st.i; j <= last; ++j)
                c.push_back({P(j), Q(j + 1)});
            if (!odd(r))
                c.push_back({P(s + 1)});
            break;
        case Structure::Kind::pair:
            for (std::size_t j = 1; j < st.i; ++j)
                c.push_back({P(j), Q(j)});
            c.push_back({P(st.i), Q(st.i), Q(st.i + 1)});
            for (std::size_t j = st.i + 1; j <= last; ++j)
                c.push_back({P(j), Q(j + 1)});
            if (!odd(r))
                c.push_back({P(s + 1)});
            break;
        case Structure::Kind::zero:
            for (std::size_t j = 1; j <= s + 1; ++j)
                c.push_back({P(j), Q(j)});
            if (odd(r))
                c.push_back({Q(s + 2)});
            break;
        case Structure::Kind::none:
            break;
    }
    return c;
}

// points 1..s+1 and 1'..(s+1)' (odd r: up to (s+2)')
std::vector<std::size_t> mentioned(std::size_t n, std::size_t r) {
    std::size_t s = half(r);
    std::vector<std::size_t> m;
    for (std::size_t j = 1; j <= s + 1; ++j)
        m.push_back(j - 1);
    for (std::size_t j = 1; j <= s + 1 + (odd(r) ? 1 : 0); ++j)
        m.push_back(n + j - 1);
    return m;
}

std::vector<std::size_t> canonical(const std::vector<std::size_t>& ids) {
    std::map<std::size_t, std::size_t> seen;
    std::vector<std::size_t> out;
    for (auto v : ids)
        out.push_back(seen.try_emplace(v, seen.size()).first->second);
    return out;
}

void require_structure_range(const Partition& p, const Partition& q, std::size_t r) {
    std::size_t n = points_of(p);
    if (points_of(q) != n)
        throw DimensionError("p and q have different point counts");
    if (r + 1 >= n)
        throw ArgumentError("structures need r < n-1");
    if (!in_W(p, r) || !in_W(q, r + 1))
        throw ArgumentError("structures need p in W(n,r) and q in W(n,r+1)");
}

BigRational inverse_power(long N, std::size_t e) { return BigRational(1, ipow(BigInt(N), e)); }

}  // namespace

bool in_W(const Partition& p, std::size_t r) {
    std::size_t n = points_of(p);
    if (!is_noncrossing(p))
        return false;
    if (r == 0)
        return true;
    if (r >= n)
        return false;
    std::size_t s = half(r);
    std::size_t non_singletons = odd(r) ? s + 1 : s;
    std::size_t distinct = s + 1;
    for (std::size_t x = 1; x <= non_singletons; ++x)
        if (singleton(p, x))
            return false;
    for (std::size_t a = 1; a <= distinct; ++a)
        for (std::size_t b = a + 1; b <= distinct; ++b)
            if (label(p, a) == label(p, b))
                return false;
    return true;
}

bool in_Y(const Partition& p, std::size_t r) { return in_W(p, r) && !in_W(p, r + 1); }

bool in_Y_direct(const Partition& p, std::size_t r) {
    if (!in_W(p, r))
        return false;
    std::size_t s = half(r);
    if (odd(r))
        return s + 2 <= p.point_count() && label(p, s + 1) == label(p, s + 2);
    return singleton(p, s + 1);
}

std::vector<Partition> stratum_W(std::size_t n, std::size_t r) {
    std::vector<Partition> out;
    for (auto& p : enumerate(n, PartitionClass::noncrossing))
        if (in_W(p, r))
            out.push_back(std::move(p));
    return out;
}

std::vector<Partition> stratum_Y(std::size_t n, std::size_t r) {
    std::vector<Partition> out;
    for (auto& p : enumerate(n, PartitionClass::noncrossing))
        if (in_Y(p, r))
            out.push_back(std::move(p));
    return out;
}

PairGraph::PairGraph(const Partition& p, const Partition& q) : PairGraph(p, q, 1) {}

PairGraph PairGraph::cut(const Partition& p, const Partition& q, std::size_t r) {
    return PairGraph(p, q, half(r) + 2);
}

PairGraph::PairGraph(const Partition& p, const Partition& q, std::size_t vertical_from) {
    n_ = points_of(p);
    if (points_of(q) != n_)
        throw DimensionError("pair graph of partitions with different point counts");
    UnionFind uf(2 * n_);
    auto join = [&](const Partition& x, std::size_t offset) {
        std::vector<std::size_t> first(x.block_count(), SIZE_MAX);
        for (std::size_t v = 0; v < n_; ++v) {
            auto b = x.block_of(v);
            if (first[b] == SIZE_MAX)
                first[b] = offset + v;
            else
                uf.unite(first[b], offset + v);
        }
    };
    join(p, 0);
    join(q, n_);
    for (std::size_t i = vertical_from; i <= n_; ++i)
        uf.unite(i - 1, n_ + i - 1);
    components_ = uf.set_count();
    comp_.resize(2 * n_);
    for (std::size_t v = 0; v < 2 * n_; ++v)
        comp_[v] = uf.find(v);
}

bool has_r_flaw(const Partition& p, const Partition& q, std::size_t r) {
    std::size_t n = points_of(p);
    if (r >= n)
        throw ArgumentError("r-flaws need r < n");
    if (r == 0)
        return false;
    std::size_t s = half(r);
    PairGraph h = PairGraph::cut(p, q, r);
    for (std::size_t a = 1; a <= s + 1; ++a)
        for (std::size_t b = a + 1; b <= s + 1; ++b)
            if (h.connected_pp(a, b) || h.connected_qq(a, b))
                return true;
    for (std::size_t i = 1; i <= s; ++i)
        if (!h.connected_pq(i, i))
            return true;
    if (odd(r) && !h.connected_pq(s + 1, s + 1))
        return true;
    return false;
}

BigInt e_r(const Partition& p, const Partition& q, std::size_t r, long N) {
    if (has_r_flaw(p, q, r))
        return 0;
    return ipow(BigInt(N), PairGraph(p, q).component_count());
}

std::vector<Partition> stratified_labels(std::size_t n, std::size_t r) {
    if (r >= n)
        throw ArgumentError("A(n,r) needs r < n");
    std::vector<Partition> y, rest;
    for (auto& p : stratum_W(n, r))
        (in_W(p, r + 1) ? rest : y).push_back(std::move(p));
    y.insert(y.end(), rest.begin(), rest.end());
    return y;
}

namespace {

ExactMatrix matrix_over(const std::vector<Partition>& labels, std::size_t r, long N) {
    ExactMatrix out;
    IntMatrix m(labels.size(), labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            m(i, j) = e_r(labels[i], labels[j], r, N);
    out.entries = std::move(m);
    out.row_labels = labels;
    out.col_labels = labels;
    return out;
}

}  // namespace

ExactMatrix build_A(std::size_t n, std::size_t r, long N) {
    return matrix_over(stratified_labels(n, r), r, N);
}

ExactMatrix build_B(std::size_t n, std::size_t r, long N) {
    if (r >= n)
        throw ArgumentError("B(n,r) needs r < n");
    return matrix_over(stratum_Y(n, r), r, N);
}

Partition reduce_Y(const Partition& p, std::size_t r) {
    if (!in_Y(p, r))
        throw ArgumentError("reduce_Y needs p in Y(n,r)");
    std::size_t s = half(r);
    std::size_t drop = odd(r) ? s + 2 : s + 1;
    std::vector<std::size_t> labels;
    for (std::size_t x = 1; x <= p.point_count(); ++x)
        if (x != drop)
            labels.push_back(label(p, x));
    return Partition::from_labels(0, labels.size(), labels);
}

Partition f_manip(std::size_t i, const Partition& q, std::size_t r) {
    require_column_range(q, r);
    std::size_t s = half(r);
    if (i < 1 || i > s + 1)
        throw ArgumentError("f(i,q) needs 1 <= i <= s+1");
    std::vector<std::size_t> old(q.rgs().begin(), q.rgs().end());
    std::vector<std::size_t> next = old;
    for (std::size_t j = i; j <= s; ++j)
        next[j - 1] = old[j];  // j joins K(j+1)
    detach_last(next, old, r, q.block_count());
    return relabel(q, next);
}

Partition g_manip(std::size_t i, const Partition& q, std::size_t r) {
    require_column_range(q, r);
    std::size_t s = half(r);
    std::size_t top = odd(r) ? s + 1 : s;
    if (i < 1 || i > top)
        throw ArgumentError("g(i,q) index out of range for this parity");
    std::vector<std::size_t> old(q.rgs().begin(), q.rgs().end());
    std::vector<std::size_t> next = old;
    std::size_t absorbed, keeper;
    if (i == s + 1) {
        // odd r: X(s+1) and X(s+2) merge
        absorbed = old[s + 1];
        keeper = old[s];
    } else {
        for (std::size_t j = i + 1; j <= s; ++j)
            next[j - 1] = old[j];
        detach_last(next, old, r, q.block_count());
        absorbed = old[i];  // K(i+1)
        keeper = old[i - 1];
    }
    for (auto& v : next)
        if (v == absorbed)
            v = keeper;
    return relabel(q, next);
}

std::string Structure::to_string() const {
    switch (kind) {
        case Kind::single:
            return "[" + std::to_string(i) + "]";
        case Kind::pair:
            return "[" + std::to_string(i) + "," + std::to_string(i + 1) + "]";
        case Kind::zero:
            return "[0]";
        case Kind::none:
            break;
    }
    return "none";
}

std::vector<Structure> candidate_structures(std::size_t r) {
    std::size_t s = half(r);
    std::vector<Structure> out;
    for (std::size_t i = 1; i <= s + 1; ++i)
        out.push_back(Structure::single(i));
    for (std::size_t i = 1; i <= (odd(r) ? s + 1 : s); ++i)
        out.push_back(Structure::pair(i));
    out.push_back(Structure::zero());
    return out;
}

bool structure_holds(const Partition& p, const Partition& q, std::size_t r, const Structure& st) {
    require_structure_range(p, q, r);
    if (st.kind == Structure::Kind::none)
        return false;
    PairGraph h = PairGraph::cut(p, q, r);
    Classes classes = scheme(h.n(), r, st);
    for (const auto& c : classes)
        for (auto v : c)
            if (h.component_of(v) != h.component_of(c.front()))
                return false;
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            if (h.component_of(classes[a].front()) == h.component_of(classes[b].front()))
                return false;
    return true;
}

Structure classify_structure(const Partition& p, const Partition& q, std::size_t r) {
    require_structure_range(p, q, r);
    std::size_t n = p.point_count();
    PairGraph h = PairGraph::cut(p, q, r);
    auto order = mentioned(n, r);
    std::vector<std::size_t> observed;
    for (auto v : order)
        observed.push_back(h.component_of(v));
    observed = canonical(observed);

    std::vector<std::size_t> where(2 * n);
    for (const auto& st : candidate_structures(r)) {
        Classes classes = scheme(n, r, st);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c])
                where[v] = c;
        std::vector<std::size_t> expected;
        for (auto v : order)
            expected.push_back(where[v]);
        if (canonical(expected) == observed)
            return st;
    }
    return Structure::none();
}

long component_shift(const Partition& p, const Partition& q, std::size_t r, Manip kind, std::size_t i) {
    Partition m = kind == Manip::f ? f_manip(i, q, r) : g_manip(i, q, r);
    if (has_r_flaw(p, m, r))
        throw UndefinedCase("component shift of a vanishing entry");
    long s = static_cast<long>(half(r));
    long li = static_cast<long>(i);
    Structure st = classify_structure(p, q, r);
    if (kind == Manip::f) {
        if (st == Structure::single(i) || (i >= 2 && st == Structure::pair(i - 1)))
            return s - li + 2;
        if (st == Structure::pair(i))
            return s - li + 1;
        if (st == Structure::zero() && !odd(r) && li == s + 1)
            return 0;
    } else {
        if (st == Structure::single(i) || st == Structure::pair(i))
            return s - li + 1;
        if (st == Structure::single(i + 1))
            return s - li;
        if (st == Structure::zero())
            return -1;
    }
    throw InvariantViolation("nonzero manipulated entry with structure " + st.to_string() +
                             " outside the case table");
}

BigRational F_r_value(const Partition& p, const Partition& q, std::size_t r, long N) {
    require_structure_range(p, q, r);
    std::size_t s = half(r);
    BigRational z(1, N);
    z.canonicalize();
    BigRational sum = 0;
    for (std::size_t j = 1; j <= s + 1; ++j) {
        BigInt e = e_r(p, f_manip(j, q, r), r, N);
        if (e != 0)
            sum += inverse_power(N, s - j + 2) * beraha(2 * j - 1)(z) * BigRational(e);
    }
    std::size_t t = odd(r) ? s + 1 : s;
    for (std::size_t j = 1; j <= t; ++j) {
        BigInt e = e_r(p, g_manip(j, q, r), r, N);
        if (e != 0)
            sum -= inverse_power(N, s - j + 1) * beraha(2 * j)(z) * BigRational(e);
    }
    return sum;
}

RecursionResult recursion_det(std::size_t n, long N) {
    if (n < 1)
        throw ArgumentError("recursion needs n >= 1");
    if (N < 4)
        throw ArgumentError("the recursion is stated for N >= 4");
    BigRational z(1, N);
    z.canonicalize();

    std::map<std::size_t, std::vector<Partition>> nc;
    auto count_W = [&](std::size_t m, std::size_t r) {
        auto it = nc.find(m);
        if (it == nc.end())
            it = nc.emplace(m, enumerate(m, PartitionClass::noncrossing)).first;
        std::size_t c = 0;
        for (const auto& p : it->second)
            c += in_W(p, r) ? 1 : 0;
        return c;
    };

    RecursionResult result;
    std::map<std::pair<std::size_t, std::size_t>, BigRational> memo;
    auto detA = [&](auto&& self, std::size_t m, std::size_t r) -> BigRational {
        if (auto it = memo.find({m, r}); it != memo.end())
            return it->second;
        RecursionStep step;
        step.level_n = m;
        step.r = r;
        if (r + 1 == m) {
            step.base_value = ipow(BigInt(N), (m + 1) / 2);
            step.value = BigRational(*step.base_value);
        } else {
            BigRational num = beraha(r + 3)(z), den = beraha(r + 2)(z);
            if (den == 0)
                throw InvariantViolation("beraha value vanishes at 1/N");
            step.factor_beta = num / den;
            step.exponent = count_W(m, r + 1);
            BigRational b;
            if (odd(r)) {
                step.B_case = "odd";
                b = self(self, m - 1, r - 1);
            } else {
                step.B_case = r == 0 ? "zero" : "even";
                step.B_scale_exponent = count_W(m, r) - step.exponent;  // #Y(m,r)
                BigRational smaller = self(self, m - 1, r == 0 ? 0 : r - 1);
                b = BigRational(ipow(BigInt(N), step.B_scale_exponent)) * smaller;
            }
            BigRational rest = self(self, m, r + 1);
            step.value = rpow(*step.factor_beta, static_cast<long>(step.exponent)) * b * rest;
        }
        memo.emplace(std::make_pair(m, r), step.value);
        result.trace.push_back(step);
        return step.value;
    };
    result.det = detA(detA, n, 0);
    return result;
}

}  // namespace ncgram
