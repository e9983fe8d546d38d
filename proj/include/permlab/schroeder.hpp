#pragma once

#include <string>
#include <vector>

#include "permlab/bigint.hpp"

namespace permlab {

/// Large Schröder number S_n for n >= 1 (1, 2, 6, 22, 90, ...).
BigInt schroeder_number(int n);

/// Rows 1..n_max of the refined Schröder triangle S_{n,k}, 1 <= k <= n.
class SchroederTriangle {
public:
    explicit SchroederTriangle(int n_max);

    int n_max() const noexcept { return static_cast<int>(rows_.size()); }
    /// S_{n,k}; 0 outside 1 <= k <= n <= n_max.
    const BigInt& at(int n, int k) const;
    const std::vector<BigInt>& row(int n) const;
    BigInt row_sum(int n) const;

    /// One row per line, tab separated.
    std::string to_tsv() const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

SchroederTriangle triangle(int n_max);

/// S_{n,n-2} equals the sum of row n-1 (n >= 3).
bool row_sum_identity_check(const SchroederTriangle& tri, int n);

/// S_{n,i} = 2 S_{n-1,i} + sum_{l<i} S_{n-1,l} for 1 <= i <= n-2.
/// Throws DomainError for i outside that range or n beyond the table.
bool column_recurrence_check(const SchroederTriangle& tri, int n, int i);

inline constexpr int kInversionSequenceCap = 11;

/// Entry k-1 counts 021-avoiding inversion sequences e_1..e_n with
/// e_n = k mod n, i.e. e_n = k for k < n and e_n = 0 for k = n.
std::vector<BigInt> inversion_seq_distribution(int n, int cap = kInversionSequenceCap);

}  // namespace permlab
