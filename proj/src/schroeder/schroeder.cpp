#include "permlab/schroeder.hpp"

#include <array>
#include <cassert>
#include <cstdint>

#include "permlab/errors.hpp"

namespace permlab {

BigInt schroeder_number(int n)
{
    if (n < 1) {
        throw DomainError("schroeder_number needs n >= 1");
    }
    BigInt prev = 1;  // S_1
    BigInt cur = 2;   // S_2
    if (n == 1) {
        return prev;
    }
    for (int m = 3; m <= n; ++m) {
        BigInt numer = BigInt(3 * (2 * m - 3)) * cur - BigInt(m - 3) * prev;
        if (!mpz_divisible_ui_p(numer.get_mpz_t(), static_cast<unsigned long>(m))) {
            throw ExactnessError("Schroeder recurrence produced an inexact division at n=" + std::to_string(m));
        }
        BigInt next = numer / m;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SchroederTriangle::SchroederTriangle(int n_max)
{
    if (n_max < 1) {
        throw DomainError("triangle needs n_max >= 1");
    }
    rows_.reserve(static_cast<std::size_t>(n_max));
    rows_.push_back({1});
    if (n_max >= 2) {
        rows_.push_back({1, 1});
    }
    for (int n = 3; n <= n_max; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n));
        const auto& prev = rows_.back();
        auto prev_at = [&](int k) -> BigInt { return (k >= 1 && k <= n - 1) ? prev[k - 1] : BigInt(0); };
        BigInt left = 0;  // S_{n,0}
        for (int k = 1; k <= n - 2; ++k) {
            row[k - 1] = left + 2 * prev_at(k) - prev_at(k - 1);
            left = row[k - 1];
        }
        row[n - 2] = row[n - 3];
        row[n - 1] = row[n - 3];
        rows_.push_back(std::move(row));
    }
}

const BigInt& SchroederTriangle::at(int n, int k) const
{
    static const BigInt zero = 0;
    if (n < 1 || n > n_max() || k < 1 || k > n) {
        return zero;
    }
    return rows_[n - 1][k - 1];
}

const std::vector<BigInt>& SchroederTriangle::row(int n) const
{
    if (n < 1 || n > n_max()) {
        throw DomainError("triangle row " + std::to_string(n) + " outside 1.." + std::to_string(n_max()));
    }
    return rows_[n - 1];
}

BigInt SchroederTriangle::row_sum(int n) const
{
    BigInt sum = 0;
    for (const auto& v : row(n)) {
        sum += v;
    }
    return sum;
}

std::string SchroederTriangle::to_tsv() const
{
    std::string out;
    for (const auto& r : rows_) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k != 0) {
                out.push_back('\t');
            }
            out += r[k].get_str();
        }
        out.push_back('\n');
    }
    return out;
}

SchroederTriangle triangle(int n_max) { return SchroederTriangle(n_max); }

bool row_sum_identity_check(const SchroederTriangle& tri, int n)
{
    if (n < 3 || n > tri.n_max()) {
        throw DomainError("row_sum_identity_check needs 3 <= n <= n_max");
    }
    return tri.at(n, n - 2) == tri.row_sum(n - 1);
}

bool column_recurrence_check(const SchroederTriangle& tri, int n, int i)
{
    if (n > tri.n_max() || i < 1 || i > n - 2) {
        throw DomainError("column_recurrence_check needs 1 <= i <= n-2 and n <= n_max, got n=" + std::to_string(n) +
                          " i=" + std::to_string(i));
    }
    BigInt rhs = 2 * tri.at(n - 1, i);
    for (int l = 1; l < i; ++l) {
        rhs += tri.at(n - 1, l);
    }
    return tri.at(n, i) == rhs;
}

namespace {

// Prefix-pruned walk over inversion sequences. A new entry c at position t
// completes an occurrence of 021 iff some earlier pair e_a < e_b has
// e_a < c < e_b. Tracking, for each possible c, whether such a pair exists
// makes the check O(1); the table is updated incrementally per level.
class InversionWalker {
public:
    explicit InversionWalker(int n) : n_(n), counts_(static_cast<std::size_t>(n), 0) {}

    std::vector<std::uint64_t> run()
    {
        std::vector<bool> blocked(static_cast<std::size_t>(n_), false);
        std::vector<int> prefix;
        walk(prefix, blocked);
        return counts_;
    }

private:
    void walk(std::vector<int>& prefix, const std::vector<bool>& blocked)
    {
        const int t = static_cast<int>(prefix.size());  // next entry is e_{t+1} in [0, t]
        if (t == n_) {
            const int last = prefix.back();
            const int k = last == 0 ? n_ : last;
            ++counts_[k - 1];
            return;
        }
        for (int c = 0; c <= t; ++c) {
            if (blocked[c]) {
                continue;
            }
            // New pairs (e_a, c) with e_a < c block every value strictly between.
            std::vector<bool> next = blocked;
            int lowest_below = c;
            for (int v : prefix) {
                lowest_below = std::min(lowest_below, v);
            }
            for (int v = lowest_below + 1; v < c; ++v) {
                next[v] = true;
            }
            prefix.push_back(c);
            walk(prefix, next);
            prefix.pop_back();
        }
    }

    int n_;
    std::vector<std::uint64_t> counts_;
};

}  // namespace

std::vector<BigInt> inversion_seq_distribution(int n, int cap)
{
    if (n < 1) {
        throw DomainError("inversion_seq_distribution needs n >= 1");
    }
    if (n > cap) {
        throw ResourceError("inversion sequence enumeration at n=" + std::to_string(n) + " exceeds the cap n<=" +
                            std::to_string(cap));
    }
    const auto counts = InversionWalker(n).run();
    std::vector<BigInt> out;
    for (auto c : counts) {
        out.emplace_back(static_cast<unsigned long>(c));
    }
    return out;
}

}  // namespace permlab
