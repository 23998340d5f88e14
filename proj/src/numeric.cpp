#include "ncgram/numeric.hpp"

namespace ncgram {

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRational rpow(const BigRational& base, long exp) {
    if (exp < 0) {
        if (base == 0)
            throw UndefinedCase("negative power of zero");
        BigRational inv = 1 / base;
        return rpow(inv, -exp);
    }
    BigRational r(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                  ipow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
}

BigInt binomial(long m, long j) {
    if (m < 0 || j < 0 || j > m)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

}  // namespace ncgram
