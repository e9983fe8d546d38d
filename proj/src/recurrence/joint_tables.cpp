#include <functional>

#include "permlab/errors.hpp"
#include "permlab/recurrence.hpp"

namespace permlab {

namespace {

/// Bottom-up history a_0, a_1, ..., a_{n-1} seen while filling a_n.
class History {
public:
    explicit History(const std::vector<DistributionTable>& tables) : tables_(tables) {}

    /// a_m(i,j); 0 for any index outside the table, including m < 0.
    const BigInt& cell(int m, int i, int j) const
    {
        static const BigInt zero = 0;
        if (m < 0 || m >= static_cast<int>(tables_.size())) {
            return zero;
        }
        return tables_[m].at(i, j);
    }

    BigInt first(int m, int i) const
    {
        if (m < 0 || m >= static_cast<int>(tables_.size())) {
            return 0;
        }
        return tables_[m].first_letter(i);
    }

    BigInt total(int m) const
    {
        if (m < 0 || m >= static_cast<int>(tables_.size())) {
            return 0;
        }
        return tables_[m].total();
    }

    /// sum_{a=1}^{i-1} sum_{c=0}^{i-a-1} binom(i-a-1,c) sum_{b=a+1}^{b_max(c)} a_{n-c-2}(a,b)
    BigInt removal_sum(int n, int i, const std::function<int(int)>& b_max) const
    {
        BigInt sum = 0;
        for (int a = 1; a <= i - 1; ++a) {
            for (int c = 0; c <= i - a - 1; ++c) {
                BigInt inner = 0;
                for (int b = a + 1; b <= b_max(c); ++b) {
                    inner += cell(n - c - 2, a, b);
                }
                if (inner != 0) {
                    sum += binomial(i - a - 1, c) * inner;
                }
            }
        }
        return sum;
    }

    /// sum_{a=1}^{i-1} sum_{c=0}^{i-a-1} binom(i-a-1,c) a_{n-c-2}(a, col(c))
    BigInt removal_column(int n, int i, const std::function<int(int)>& col) const
    {
        BigInt sum = 0;
        for (int a = 1; a <= i - 1; ++a) {
            for (int c = 0; c <= i - a - 1; ++c) {
                const BigInt& v = cell(n - c - 2, a, col(c));
                if (v != 0) {
                    sum += binomial(i - a - 1, c) * v;
                }
            }
        }
        return sum;
    }

private:
    const std::vector<DistributionTable>& tables_;
};

DistributionTable small_table(int n)
{
    DistributionTable t(n);
    for (int i = 1; i <= n && n >= 2; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) {
                t.set(i, j, 1);
            }
        }
    }
    return t;
}

BigInt cell_1243_1423(const History& h, int n, int i, int j)
{
    if (j == i + 1) {
        if (i == n - 1) {
            return h.total(n - 2);
        }
        return h.cell(n - 1, i, i + 1) + h.removal_sum(n, i, [i](int c) { return i - c; });
    }
    if (j == i + 2) {
        if (i == n - 2) {
            return h.total(n - 2);
        }
        return h.cell(n - 1, i, i + 1) + h.cell(n - 1, i, i + 2) +
               h.removal_sum(n, i, [i](int c) { return i - c + 1; });
    }
    BigInt value = h.cell(n - 1, i, j - 1) + h.removal_column(n, i, [j](int c) { return j - c - 2; });
    if (j != n) {
        value += h.cell(n - 1, i, j) + h.removal_column(n, i, [j](int c) { return j - c - 1; });
    }
    return value;
}

BigInt cell_1243_1342_block(const History& h, const DistributionTable& cur, int n, int i, int j)
{
    if (j == n) {
        return h.first(n - 1, i);
    }
    if (j == i + 1) {
        BigInt sum = 0;
        for (int l = 1; l <= i; ++l) {
            sum += h.cell(n - 1, l, i + 1);
        }
        return sum;
    }
    if (j == i + 2) {
        return cur.at(i, i + 1);
    }
    BigInt value = 0;
    for (int k = i + 1; k <= j - 1; ++k) {
        value += h.cell(n - 1, i, k);
    }
    return value + h.removal_sum(n, i, [j](int c) { return j - c - 2; });
}

BigInt cell_1243_1342_kronecker(const History& h, int n, int i, int j)
{
    if (j == n) {
        return h.first(n - 1, i);
    }
    BigInt value = 0;
    for (int k = i + 1; k <= j - 1; ++k) {
        value += h.cell(n - 1, i, k);
    }
    value += h.removal_sum(n, i, [j](int c) { return j - c - 2; });
    if (j == i + 1) {
        value += h.cell(n - 1, i, i + 1) + h.removal_column(n, i, [i](int c) { return i - c; });
    }
    return value;
}

BigInt cell_1243_1324(const History& h, int n, int i, int j, bool binomial_form)
{
    if (j == n) {
        return h.first(n - 1, i);
    }
    if (j == i + 1) {
        // Same index region as the (a, c, b) ordering: b <= i - c.
        return h.cell(n - 1, i, i + 1) + h.removal_sum(n, i, [i](int c) { return i - c; });
    }
    if (binomial_form) {
        return h.cell(n - 1, i, j) + h.removal_column(n, i, [j](int c) { return j - c - 1; });
    }
    BigInt value = h.cell(n - 1, i, j);
    for (int l = 1; l <= i - 1; ++l) {
        value += h.cell(n - 1, l, j - 1);
    }
    return value;
}

}  // namespace

PatternPair pair_of(JointRecurrence kind)
{
    switch (kind) {
    case JointRecurrence::avoid_1243_1423:
        return PatternPair::parse("1243,1423");
    case JointRecurrence::avoid_1243_1342:
    case JointRecurrence::avoid_1243_1342_kronecker:
        return PatternPair::parse("1243,1342");
    case JointRecurrence::avoid_1243_1324:
    case JointRecurrence::avoid_1243_1324_binomial:
        return PatternPair::parse("1243,1324");
    }
    throw DomainError("unknown recurrence");
}

std::vector<DistributionTable> joint_tables(JointRecurrence kind, int n_max)
{
    if (n_max < 0) {
        throw DomainError("joint tables need n >= 0");
    }
    std::vector<DistributionTable> tables;
    for (int n = 0; n <= std::min(n_max, 3); ++n) {
        tables.push_back(small_table(n));
    }
    for (int n = 4; n <= n_max; ++n) {
        const History h(tables);
        DistributionTable cur(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j < i; ++j) {
                cur.set(i, j, h.first(n - 1, j));
            }
            for (int j = i + 1; j <= n; ++j) {
                BigInt value;
                switch (kind) {
                case JointRecurrence::avoid_1243_1423:
                    value = cell_1243_1423(h, n, i, j);
                    break;
                case JointRecurrence::avoid_1243_1342:
                    value = cell_1243_1342_block(h, cur, n, i, j);
                    break;
                case JointRecurrence::avoid_1243_1342_kronecker:
                    value = cell_1243_1342_kronecker(h, n, i, j);
                    break;
                case JointRecurrence::avoid_1243_1324:
                    value = cell_1243_1324(h, n, i, j, false);
                    break;
                case JointRecurrence::avoid_1243_1324_binomial:
                    value = cell_1243_1324(h, n, i, j, true);
                    break;
                }
                cur.set(i, j, std::move(value));
            }
        }
        tables.push_back(std::move(cur));
    }
    return tables;
}

DistributionTable table_1243_1423(int n) { return joint_tables(JointRecurrence::avoid_1243_1423, n).back(); }
DistributionTable table_1243_1342(int n) { return joint_tables(JointRecurrence::avoid_1243_1342, n).back(); }
DistributionTable table_1243_1324(int n) { return joint_tables(JointRecurrence::avoid_1243_1324, n).back(); }

std::optional<std::vector<BigInt>> recurrence_first_letter(const PatternPair& pair, int n)
{
    if (n < 1) {
        throw DomainError("n must be >= 1");
    }
    if (is_row_recurrence_pair(pair)) {
        return th1_first_letter(n);
    }
    if (is_gtree_pair(pair)) {
        return gtree_table(n).first_letter();
    }
    const auto c = pair.canonical();
    for (auto kind : {JointRecurrence::avoid_1243_1423, JointRecurrence::avoid_1243_1342,
                      JointRecurrence::avoid_1243_1324}) {
        if (pair_of(kind).canonical() == c) {
            return joint_tables(kind, n).back().first_letter();
        }
    }
    return std::nullopt;
}

}  // namespace permlab
