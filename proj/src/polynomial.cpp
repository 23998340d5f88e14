#include "ncgram/polynomial.hpp"

#include <algorithm>

namespace ncgram {

IntPolynomial::IntPolynomial(long c) : c_{BigInt(c)} { normalize(); }

IntPolynomial::IntPolynomial(const BigInt& c) : c_{c} { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs)
        c_.emplace_back(v);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& c) {
    std::vector<BigInt> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

BigRational IntPolynomial::operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + BigRational(*it);
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    normalize();
    return *this;
}

IntPolynomial operator-(IntPolynomial a) {
    for (auto& v : a.c_)
        v = -v;
    return a;
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
    if (k == 0)
        return IntPolynomial(is_zero() ? BigInt(0) : (*this)(BigInt(1)));
    std::vector<BigInt> r(c_.empty() ? 0 : (c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i * k] = c_[i];
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        BigInt a = abs(c_[i]);
        if (s.empty())
            s += c_[i] < 0 ? "-" : "";
        else
            s += c_[i] < 0 ? " - " : " + ";
        if (a != 1 || i == 0)
            s += a.get_str();
        if (i > 0)
            s += i == 1 ? "X" : "X^" + std::to_string(i);
    }
    return s;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero())
        throw InvariantViolation("division by the zero polynomial");
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw InvariantViolation("polynomial division is not exact");
    std::vector<BigInt> rem = a.coefficients();
    const auto& d = b.coefficients();
    std::size_t db = d.size() - 1;
    std::vector<BigInt> quot(rem.size() - db, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const BigInt& top = rem[i + db];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t()))
            throw InvariantViolation("polynomial division is not exact");
        BigInt c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j)
            rem[i + j] -= c * d[j];
        quot[i] = std::move(c);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& v) { return v != 0; }))
        throw InvariantViolation("polynomial division is not exact");
    return IntPolynomial(std::move(quot));
}

IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
    if (xs.size() != ys.size())
        throw DimensionError("interpolate: point and value counts differ");
    std::size_t n = xs.size();
    // Newton divided differences
    std::vector<BigRational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            BigRational denom(xs[i] - xs[i - level]);
            if (denom == 0)
                throw ArgumentError("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / denom;
        }
    // Horner over the Newton basis
    std::vector<BigRational> poly;  // ascending
    for (std::size_t i = n; i-- > 0;) {
        // poly = poly * (X - xs[i]) + dd[i]
        std::vector<BigRational> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * BigRational(xs[i]);
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    std::vector<BigInt> coeffs;
    for (auto& c : poly) {
        if (c.get_den() != 1)
            throw InvariantViolation("interpolated polynomial is not integral");
        coeffs.push_back(c.get_num());
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial beraha(std::size_t n) {
    IntPolynomial prev = 0, cur = 1;
    if (n == 0)
        return prev;
    for (std::size_t i = 1; i < n; ++i) {
        IntPolynomial next = cur - IntPolynomial::X() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

IntPolynomial three_term(std::size_t n, const IntPolynomial& first, const IntPolynomial& factor) {
    IntPolynomial prev = 1, cur = first;
    if (n == 0)
        return prev;
    for (std::size_t i = 1; i < n; ++i) {
        IntPolynomial next = factor * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

IntPolynomial chebyshev_dilated(std::size_t n) {
    return three_term(n, IntPolynomial::X(), IntPolynomial::X());
}

IntPolynomial chebyshev_classical(std::size_t n) {
    IntPolynomial two_x({0, 2});
    return three_term(n, two_x, two_x);
}

IntPolynomial beraha_reversed_in_x(std::size_t j) {
    std::size_t s = j / 2;
    IntPolynomial b = beraha(j);
    if (b.degree() > static_cast<long>(s))
        throw InvariantViolation("beraha degree exceeds floor(j/2)");
    std::vector<BigInt> r(2 * s + 1, 0);
    for (std::size_t k = 0; k < b.coefficients().size(); ++k)
        r[2 * (s - k)] = b.coefficients()[k];
    return IntPolynomial(std::move(r));
}

RelationReport check_beraha_chebyshev_relation(std::size_t j_max) {
    if (j_max < 1)
        throw ArgumentError("j_max must be at least 1");
    RelationReport report;
    report.j_max = j_max;
    for (std::size_t j = 1; j <= j_max; ++j) {
        IntPolynomial rhs = chebyshev_dilated(j - 1);
        if (j % 2 == 0)
            rhs *= IntPolynomial::X();
        if (beraha_reversed_in_x(j) != rhs) {
            report.first_failure = j;
            break;
        }
    }
    return report;
}

NonzeroReport beraha_nonzero_at(long N, std::size_t n_max) {
    if (N == 0)
        throw ArgumentError("N must be nonzero");
    NonzeroReport report;
    report.N = N;
    BigRational z(1, N);
    z.canonicalize();
    BigRational prev = 0, cur = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        report.values.push_back(cur);
        if (cur == 0 && !report.first_zero)
            report.first_zero = n;
        BigRational next = cur - z * prev;
        prev = cur;
        cur = next;
    }
    return report;
}

}  // namespace ncgram
