#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/bigint.hpp"

namespace permlab {

/// A permutation of {1,...,n} in one-line notation. Immutable once built.
class Permutation {
public:
    Permutation() = default;
    /// Throws DomainError unless `letters` is a bijection of {1,...,n}.
    explicit Permutation(std::vector<int> letters);

    static Permutation identity(int n);
    /// Space or comma separated letters, e.g. "2 4 1 3". A single token of
    /// digits ("2413") is read letter by letter.
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    /// 0-based access.
    int operator[](std::size_t index) const { return letters_[index]; }
    std::span<const int> letters() const noexcept { return letters_; }

    Permutation reversed() const;
    Permutation complemented() const;

    /// "2 4 1 3"
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> letters_;
};

/// A classical pattern of length 3 or 4.
class Pattern {
public:
    explicit Pattern(Permutation perm);
    static Pattern parse(std::string_view text);

    const Permutation& perm() const noexcept { return perm_; }
    int size() const noexcept { return perm_.size(); }
    /// Compact form, e.g. "1243".
    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    Permutation perm_;
};

/// Two distinct patterns of equal length.
class PatternPair {
public:
    PatternPair(Pattern first, Pattern second);
    /// "1243,1423"
    static PatternPair parse(std::string_view text);

    const Pattern& first() const noexcept { return first_; }
    const Pattern& second() const noexcept { return second_; }
    /// Same pair with the lexicographically smaller pattern first.
    PatternPair canonical() const;
    std::string str() const;

    friend bool operator==(const PatternPair&, const PatternPair&) = default;
    friend auto operator<=>(const PatternPair&, const PatternPair&) = default;

private:
    Pattern first_;
    Pattern second_;
};

bool contains(std::span<const int> perm, const Pattern& pat);
inline bool contains(const Permutation& perm, const Pattern& pat) { return contains(perm.letters(), pat); }

bool avoids(std::span<const int> perm, const PatternPair& pair);
inline bool avoids(const Permutation& perm, const PatternPair& pair) { return avoids(perm.letters(), pair); }

inline constexpr int kDefaultBruteForceCap = 11;

struct EnumerationLimits {
    int max_n = kDefaultBruteForceCap;
};

using AvoiderVisitor = std::function<void(std::span<const int>)>;

/// Visits the members of S_n(pair) in lexicographic order of one-line
/// notation. Throws ResourceError when n exceeds `limits.max_n`.
void for_each_avoider(int n, const PatternPair& pair, const AvoiderVisitor& visit,
                      EnumerationLimits limits = {});

std::vector<Permutation> enumerate_avoiders(int n, const PatternPair& pair, EnumerationLimits limits = {});

std::uint64_t count_avoiders(int n, const PatternPair& pair, EnumerationLimits limits = {});

/// Entry i-1 counts the avoiders starting with i.
std::vector<BigInt> first_letter_distribution(int n, const PatternPair& pair, EnumerationLimits limits = {});

/// Joint first/second letter counts a_n(i,j), 1-based. Out-of-range cells
/// read as 0. Sizes 0 and 1 are allowed and carry the single permutation
/// of that length in `total()` and `first_letter()`.
class DistributionTable {
public:
    DistributionTable() = default;
    explicit DistributionTable(int n);

    int n() const noexcept { return n_; }
    const BigInt& at(int i, int j) const;
    void set(int i, int j, BigInt value);
    BigInt& cell(int i, int j);

    /// a_n(i) for i = 1..n.
    std::vector<BigInt> first_letter() const;
    BigInt first_letter(int i) const;
    BigInt total() const;

    friend bool operator==(const DistributionTable&, const DistributionTable&) = default;

private:
    int n_ = 0;
    std::vector<BigInt> cells_;
};

DistributionTable first_second_distribution(int n, const PatternPair& pair, EnumerationLimits limits = {});

struct LrMinimum {
    int position;  // 1-based
    int value;
    friend bool operator==(const LrMinimum&, const LrMinimum&) = default;
};

/// Left-right minima in order of position; values strictly decrease from
/// the first letter down to 1.
std::vector<LrMinimum> left_right_minima(std::span<const int> perm);
inline std::vector<LrMinimum> left_right_minima(const Permutation& perm) { return left_right_minima(perm.letters()); }

/// Gaps 0..n of `perm` (0 = before the first letter) into which a new
/// minimum can be inserted without creating an occurrence of either pattern.
/// Only (1324,1423) and (1342,1423) are supported; other pairs throw DomainError.
std::vector<int> active_sites(const Permutation& perm, const PatternPair& pair);

/// Inserts a new minimum at gap `gap`, shifting every other letter up by one.
Permutation insert_minimum(const Permutation& perm, int gap);

}  // namespace permlab
