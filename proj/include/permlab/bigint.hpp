#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace permlab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) { return value.get_str(); }

/// Binomial coefficient with the empty-range convention: 0 when k < 0 or k > m.
BigInt binomial(long m, long k);

std::vector<BigInt> to_bigints(const std::vector<long>& values);

}  // namespace permlab
