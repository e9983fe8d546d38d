#include <algorithm>

#include "permlab/errors.hpp"
#include "permlab/perm.hpp"

namespace permlab {

DistributionTable::DistributionTable(int n) : n_(n), cells_(static_cast<std::size_t>(n > 0 ? n * n : 0))
{
    if (n < 0) {
        throw DomainError("table size must be non-negative");
    }
}

const BigInt& DistributionTable::at(int i, int j) const
{
    static const BigInt zero = 0;
    if (i < 1 || j < 1 || i > n_ || j > n_) {
        return zero;
    }
    return cells_[(i - 1) * n_ + (j - 1)];
}

BigInt& DistributionTable::cell(int i, int j)
{
    if (i < 1 || j < 1 || i > n_ || j > n_) {
        throw DomainError("table cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                          std::to_string(n_) + "x" + std::to_string(n_));
    }
    return cells_[(i - 1) * n_ + (j - 1)];
}

void DistributionTable::set(int i, int j, BigInt value) { cell(i, j) = std::move(value); }

BigInt DistributionTable::first_letter(int i) const
{
    if (i < 1 || i > n_) {
        return 0;
    }
    if (n_ == 1) {
        return 1;
    }
    BigInt sum = 0;
    for (int j = 1; j <= n_; ++j) {
        sum += at(i, j);
    }
    return sum;
}

std::vector<BigInt> DistributionTable::first_letter() const
{
    std::vector<BigInt> out;
    for (int i = 1; i <= n_; ++i) {
        out.push_back(first_letter(i));
    }
    return out;
}

BigInt DistributionTable::total() const
{
    if (n_ <= 1) {
        return 1;
    }
    BigInt sum = 0;
    for (const auto& c : cells_) {
        sum += c;
    }
    return sum;
}

Permutation insert_minimum(const Permutation& perm, int gap)
{
    if (gap < 0 || gap > perm.size()) {
        throw DomainError("gap index out of range");
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(perm.size()) + 1);
    for (int i = 0; i < perm.size(); ++i) {
        if (i == gap) {
            out.push_back(1);
        }
        out.push_back(perm[i] + 1);
    }
    if (gap == perm.size()) {
        out.push_back(1);
    }
    return Permutation(std::move(out));
}

namespace {

/// The pattern with its leading 1 removed, standardized.
Pattern tail_of(const Pattern& pat)
{
    std::vector<int> tail;
    for (int i = 1; i < pat.size(); ++i) {
        tail.push_back(pat.perm()[i] - 1);
    }
    return Pattern(Permutation(std::move(tail)));
}

}  // namespace

std::vector<int> active_sites(const Permutation& perm, const PatternPair& pair)
{
    const auto canon = pair.canonical();
    if (canon != PatternPair::parse("1324,1423") && canon != PatternPair::parse("1342,1423")) {
        throw DomainError("active sites are defined only for (1324,1423) and (1342,1423), got " + pair.str());
    }
    if (!avoids(perm, pair)) {
        return {};
    }
    // Both patterns start with their minimum, so a new minimum inserted at a
    // gap can only act as that leading 1: the gap is active iff the letters
    // to its right avoid both pattern tails. Shorter suffixes inherit
    // avoidance, so the active gaps form a final run.
    const Pattern t1 = tail_of(pair.first());
    const Pattern t2 = tail_of(pair.second());
    const auto letters = perm.letters();
    const int m = perm.size();
    int first_active = m;
    while (first_active > 0) {
        const auto suffix = letters.subspan(static_cast<std::size_t>(first_active - 1));
        if (contains(suffix, t1) || contains(suffix, t2)) {
            break;
        }
        --first_active;
    }
    std::vector<int> sites;
    for (int g = first_active; g <= m; ++g) {
        sites.push_back(g);
    }
    return sites;
}

}  // namespace permlab
