#include <array>
#include <string>

#include "permlab/errors.hpp"
#include "permlab/perm.hpp"

namespace permlab {

namespace {

constexpr int kMaxPatternLength = 4;
constexpr int kMaxN = 31;

/// Pairwise order relations of a pattern: below[s][t] iff pat[s] < pat[t].
struct Shape {
    int k = 0;
    std::array<std::array<bool, kMaxPatternLength>, kMaxPatternLength> below{};

    explicit Shape(const Pattern& pat) : k(pat.size())
    {
        for (int s = 0; s < k; ++s) {
            for (int t = 0; t < k; ++t) {
                below[s][t] = pat.perm()[s] < pat.perm()[t];
            }
        }
    }
};

bool extend_match(std::span<const int> perm, const Shape& shape, std::array<int, kMaxPatternLength>& idx, int level,
                  int start)
{
    const int n = static_cast<int>(perm.size());
    if (level == shape.k) {
        return true;
    }
    for (int i = start; i <= n - (shape.k - level); ++i) {
        bool ok = true;
        for (int s = 0; s < level && ok; ++s) {
            ok = (perm[idx[s]] < perm[i]) == shape.below[s][level];
        }
        if (ok) {
            idx[level] = i;
            if (extend_match(perm, shape, idx, level + 1, i + 1)) {
                return true;
            }
        }
    }
    return false;
}

/// True iff some occurrence of the pattern uses letters[last] as its final letter.
bool ends_occurrence(const int* letters, int last, const Shape& shape, std::array<int, kMaxPatternLength>& idx,
                     int level, int start)
{
    const int tail = shape.k - 1;
    if (level == tail) {
        return true;
    }
    const int val = letters[last];
    for (int i = start; i <= last - (tail - level); ++i) {
        if ((letters[i] < val) != shape.below[level][tail]) {
            continue;
        }
        bool ok = true;
        for (int s = 0; s < level && ok; ++s) {
            ok = (letters[idx[s]] < letters[i]) == shape.below[s][level];
        }
        if (ok) {
            idx[level] = i;
            if (ends_occurrence(letters, last, shape, idx, level + 1, i + 1)) {
                return true;
            }
        }
    }
    return false;
}

template <typename Visit>
class AvoiderWalker {
public:
    AvoiderWalker(int n, const PatternPair& pair, Visit& visit)
        : n_(n), first_(pair.first()), second_(pair.second()), visit_(visit)
    {
    }

    void run()
    {
        if (n_ == 0) {
            visit_(std::span<const int>{});
            return;
        }
        place(0);
    }

private:
    void place(int pos)
    {
        for (int v = 1; v <= n_; ++v) {
            if (used_[v]) {
                continue;
            }
            letters_[pos] = v;
            if (pos + 1 >= first_.k && (ends_occurrence(letters_.data(), pos, first_, idx_, 0, 0) ||
                                        ends_occurrence(letters_.data(), pos, second_, idx_, 0, 0))) {
                continue;
            }
            if (pos + 1 == n_) {
                visit_(std::span<const int>(letters_.data(), static_cast<std::size_t>(n_)));
            } else {
                used_[v] = true;
                place(pos + 1);
                used_[v] = false;
            }
        }
    }

    int n_;
    Shape first_;
    Shape second_;
    Visit& visit_;
    std::array<int, kMaxN + 1> letters_{};
    std::array<bool, kMaxN + 2> used_{};
    std::array<int, kMaxPatternLength> idx_{};
};

void check_limits(int n, EnumerationLimits limits)
{
    if (n < 0) {
        throw DomainError("permutation length must be non-negative");
    }
    if (n > limits.max_n || n > kMaxN) {
        throw ResourceError("brute-force enumeration at n=" + std::to_string(n) + " exceeds the cap n<=" +
                            std::to_string(std::min(limits.max_n, kMaxN)));
    }
}

template <typename Visit>
void walk(int n, const PatternPair& pair, Visit&& visit, EnumerationLimits limits)
{
    check_limits(n, limits);
    AvoiderWalker<std::remove_reference_t<Visit>> walker(n, pair, visit);
    walker.run();
}

}  // namespace

bool contains(std::span<const int> perm, const Pattern& pat)
{
    if (pat.size() > static_cast<int>(perm.size())) {
        return false;
    }
    const Shape shape(pat);
    std::array<int, kMaxPatternLength> idx{};
    return extend_match(perm, shape, idx, 0, 0);
}

bool avoids(std::span<const int> perm, const PatternPair& pair)
{
    return !contains(perm, pair.first()) && !contains(perm, pair.second());
}

void for_each_avoider(int n, const PatternPair& pair, const AvoiderVisitor& visit, EnumerationLimits limits)
{
    walk(n, pair, [&](std::span<const int> p) { visit(p); }, limits);
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternPair& pair, EnumerationLimits limits)
{
    std::vector<Permutation> out;
    walk(n, pair, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); }, limits);
    return out;
}

std::uint64_t count_avoiders(int n, const PatternPair& pair, EnumerationLimits limits)
{
    std::uint64_t count = 0;
    walk(n, pair, [&](std::span<const int>) { ++count; }, limits);
    return count;
}

std::vector<BigInt> first_letter_distribution(int n, const PatternPair& pair, EnumerationLimits limits)
{
    if (n < 1) {
        throw DomainError("first_letter_distribution needs n >= 1");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    walk(n, pair, [&](std::span<const int> p) { ++counts[p[0] - 1]; }, limits);
    std::vector<BigInt> out;
    out.reserve(counts.size());
    for (auto c : counts) {
        out.emplace_back(static_cast<unsigned long>(c));
    }
    return out;
}

DistributionTable first_second_distribution(int n, const PatternPair& pair, EnumerationLimits limits)
{
    if (n < 2) {
        throw DomainError("first_second_distribution needs n >= 2");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n * n), 0);
    walk(n, pair, [&](std::span<const int> p) { ++counts[(p[0] - 1) * n + (p[1] - 1)]; }, limits);
    DistributionTable table(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            table.set(i, j, BigInt(static_cast<unsigned long>(counts[(i - 1) * n + (j - 1)])));
        }
    }
    return table;
}

}  // namespace permlab
