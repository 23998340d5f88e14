#include "ncgram/formulas.hpp"

#include "ncgram/gram.hpp"
#include "ncgram/partition.hpp"
#include "ncgram/polynomial.hpp"

namespace ncgram {

ExponentTable difrancesco_exponents(std::size_t n) {
    ExponentTable t;
    t.n = n;
    long m = static_cast<long>(n);
    for (long i = 1; i <= m; ++i)
        t.entries[static_cast<std::size_t>(i)] =
            binomial(2 * m, m - i) - 2 * binomial(2 * m, m - i - 1) + binomial(2 * m, m - i - 2);
    return t;
}

BigRational difrancesco_det(std::size_t n, long N) {
    if (n < 1)
        throw ArgumentError("difrancesco_det needs n >= 1");
    BigRational prod = 1;
    for (const auto& [i, a] : difrancesco_exponents(n).entries) {
        BigRational u(chebyshev_dilated(i)(BigInt(N)));
        if (!a.fits_slong_p())
            throw ArgumentError("exponent too large");
        prod *= rpow(u, a.get_si());
    }
    return prod;
}

BigRational kosmolinsky_b(long n, long k) {
    if (k < 1 || k > n)
        throw ArgumentError("b(n,k) needs 1 <= k <= n");
    BigRational b(BigInt(k) * binomial(2 * n - k - 1, n - 1), BigInt(n));
    b.canonicalize();
    return b;
}

BigInt nc2_gram_det(std::size_t points, long N) {
    auto labels = enumerate(points, PartitionClass::noncrossing_pairs);
    return determinant(build_gram(labels, N).integer());
}

std::vector<FormulaComparison> kosmolinsky_check(std::size_t n_max, long N) {
    std::vector<FormulaComparison> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt direct = nc2_gram_det(2 * n, N);
        long ln = static_cast<long>(n);
        for (const char* variant : {"verbatim", "doubled"}) {
            FormulaComparison cmp;
            cmp.n = n;
            cmp.N = N;
            cmp.variant = variant;
            cmp.direct = direct;
            bool doubled = cmp.variant == "doubled";
            try {
                BigRational prod = 1;
                for (long i = 1; i <= (ln + 1) / 2; ++i) {
                    std::size_t m = static_cast<std::size_t>(doubled ? 2 * (ln - i) : ln - i);
                    BigInt e = binomial(ln - i + 1, i);
                    if (i % 2 == 1)
                        e = -e;
                    prod *= rpow(BigRational(nc2_gram_det(m, N)), e.get_si());
                }
                for (long i = 1; i <= (ln - 1) / 2; ++i) {
                    BigRational b = kosmolinsky_b(ln - i, ln - 2 * i);
                    if (b.get_den() != 1)
                        throw UndefinedCase("fractional exponent");
                    BigInt top = chebyshev_dilated(static_cast<std::size_t>(ln - i))(BigInt(N));
                    BigInt bottom = chebyshev_dilated(static_cast<std::size_t>(i))(BigInt(N));
                    if (bottom == 0)
                        throw UndefinedCase("zero Chebyshev value");
                    BigRational ratio(top, bottom);
                    ratio.canonicalize();
                    prod *= rpow(ratio, b.get_num().get_si());
                }
                cmp.formula = prod;
                cmp.match = prod == BigRational(direct);
            } catch (const UndefinedCase&) {
                cmp.match = false;
            }
            out.push_back(std::move(cmp));
        }
    }
    return out;
}

}  // namespace ncgram
