#pragma once

#include <optional>
#include <vector>

#include "permlab/bigint.hpp"
#include "permlab/perm.hpp"
#include "permlab/sparse_poly.hpp"

namespace permlab {

/// The three pairs whose first-letter counts follow the row recurrence
/// a_{n,i} = 2 a_{n-1,i} + sum_{l<i} a_{n-1,l}.
bool is_row_recurrence_pair(const PatternPair& pair);

/// (a_{n,1}, ..., a_{n,n}) from the row recurrence; identical for every
/// supported pair.
std::vector<BigInt> th1_first_letter(int n);

/// The two pairs enumerated by the active-site generating tree.
bool is_gtree_pair(const PatternPair& pair);

/// u_n(i,j): avoiders starting with i that have exactly j active sites.
/// Indexed 1 <= i <= n, 2 <= j <= n+1 (j = 2 only occurs at n = 1).
class GTable {
public:
    GTable() = default;
    explicit GTable(int n);

    int n() const noexcept { return n_; }
    const BigInt& at(int i, int j) const;
    BigInt& cell(int i, int j);

    BigInt total() const;
    std::vector<BigInt> first_letter() const;

    friend bool operator==(const GTable&, const GTable&) = default;

private:
    int n_ = 0;
    std::vector<BigInt> cells_;  // row-major, j offset by 2
};

/// Tables for sizes 1..n_max (index 0 holds an empty table).
std::vector<GTable> gtree_tables(int n_max);
GTable gtree_table(int n);

/// v_n(y,q) = sum_{i,j} u_n(i,j) y^i q^{j-2}; variables (y,q) are the
/// two auxiliary slots of PolyAux in that order.
struct VPoly {
    int n = 0;
    PolyAux poly;
};

std::vector<VPoly> gtree_vpolys(int n_max);
VPoly gtree_vpoly(int n);

/// Joint first/second letter recurrences of the three 1243 cases. Two
/// variants exist where the derivation offers an alternative route.
enum class JointRecurrence {
    avoid_1243_1423,
    avoid_1243_1342,         // summary block
    avoid_1243_1342_kronecker,   // unsummarized form with the Kronecker term
    avoid_1243_1324,         // prefix-sum form of the (i,j) recurrence
    avoid_1243_1324_binomial // binomial form of the (i,j) recurrence
};

PatternPair pair_of(JointRecurrence kind);

/// Tables a_m(i,j) for m = 0..n_max, built bottom-up.
std::vector<DistributionTable> joint_tables(JointRecurrence kind, int n_max);

DistributionTable table_1243_1423(int n);
DistributionTable table_1243_1342(int n);
DistributionTable table_1243_1324(int n);

/// First-letter distribution from whichever recurrence covers `pair`;
/// nullopt when no recurrence is implemented for it.
std::optional<std::vector<BigInt>> recurrence_first_letter(const PatternPair& pair, int n);

}  // namespace permlab
