#include "permlab/bigint.hpp"

namespace permlab {

BigInt binomial(long m, long k)
{
    if (m < 0 || k < 0 || k > m) {
        return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return result;
}

std::vector<BigInt> to_bigints(const std::vector<long>& values)
{
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (long v : values) {
        out.emplace_back(v);
    }
    return out;
}

}  // namespace permlab
