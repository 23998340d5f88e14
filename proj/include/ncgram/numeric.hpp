#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncgram {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RotationUndefined : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};
// raised when a quantity is requested in a case where it is not defined
struct UndefinedCase : std::domain_error {
    using std::domain_error::domain_error;
};

BigInt ipow(const BigInt& base, unsigned long exp);
BigRational rpow(const BigRational& base, long exp);

// C(m, j) with C(m, j) = 0 unless 0 <= j <= m
BigInt binomial(long m, long j);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

}  // namespace ncgram
