#include "permlab/errors.hpp"
#include "permlab/recurrence.hpp"

namespace permlab {

bool is_row_recurrence_pair(const PatternPair& pair)
{
    const auto c = pair.canonical();
    return c == PatternPair::parse("1234,1243") || c == PatternPair::parse("1324,1342") ||
           c == PatternPair::parse("1423,1432");
}

std::vector<BigInt> th1_first_letter(int n)
{
    if (n < 1) {
        throw DomainError("th1_first_letter needs n >= 1");
    }
    std::vector<BigInt> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m));
        BigInt prefix = 0;  // sum_{l<i} a_{m-1,l}
        for (int i = 1; i <= m - 2; ++i) {
            next[i - 1] = 2 * row[i - 1] + prefix;
            prefix += row[i - 1];
        }
        BigInt total = 0;
        for (const auto& v : row) {
            total += v;
        }
        next[m - 1] = total;
        if (m >= 2) {
            next[m - 2] = total;
        }
        row = std::move(next);
    }
    return row;
}

bool is_gtree_pair(const PatternPair& pair)
{
    const auto c = pair.canonical();
    return c == PatternPair::parse("1324,1423") || c == PatternPair::parse("1342,1423");
}

GTable::GTable(int n) : n_(n), cells_(static_cast<std::size_t>(n > 0 ? n * n : 0)) {}

const BigInt& GTable::at(int i, int j) const
{
    static const BigInt zero = 0;
    if (i < 1 || i > n_ || j < 2 || j > n_ + 1) {
        return zero;
    }
    return cells_[(i - 1) * n_ + (j - 2)];
}

BigInt& GTable::cell(int i, int j)
{
    if (i < 1 || i > n_ || j < 2 || j > n_ + 1) {
        throw DomainError("GTable cell out of range");
    }
    return cells_[(i - 1) * n_ + (j - 2)];
}

BigInt GTable::total() const
{
    BigInt sum = 0;
    for (const auto& c : cells_) {
        sum += c;
    }
    return sum;
}

std::vector<BigInt> GTable::first_letter() const
{
    std::vector<BigInt> out;
    for (int i = 1; i <= n_; ++i) {
        BigInt sum = 0;
        for (int j = 2; j <= n_ + 1; ++j) {
            sum += at(i, j);
        }
        out.push_back(sum);
    }
    return out;
}

std::vector<GTable> gtree_tables(int n_max)
{
    if (n_max < 1) {
        throw DomainError("gtree tables need n >= 1");
    }
    std::vector<GTable> tables(1);
    GTable first(1);
    first.cell(1, 2) = 1;
    tables.push_back(std::move(first));
    for (int n = 2; n <= n_max; ++n) {
        const GTable& prev = tables.back();
        GTable cur(n);
        BigInt pow2 = 1;
        pow2 <<= static_cast<unsigned long>(n - 2);
        cur.cell(1, n + 1) = pow2;
        for (int i = 2; i <= n; ++i) {
            for (int j = 3; j <= n; ++j) {
                BigInt value = prev.at(i - 1, j - 1);
                for (int l = j - 1; l <= n; ++l) {
                    value += prev.at(i - 1, l);
                }
                cur.cell(i, j) = value;
            }
            cur.cell(i, n + 1) = prev.at(i - 1, n);
        }
        tables.push_back(std::move(cur));
    }
    return tables;
}

GTable gtree_table(int n) { return gtree_tables(n).back(); }

std::vector<VPoly> gtree_vpolys(int n_max)
{
    if (n_max < 1) {
        throw DomainError("gtree_vpoly needs n >= 1");
    }
    const PolyAux y = PolyAux::variable(0);
    const PolyAux q = PolyAux::variable(1);
    const PolyAux one(1);
    const PolyAux denominator = (PolyAux(2) - y) * (one - q);

    std::vector<VPoly> out(1);
    out.push_back({1, y});
    for (int n = 2; n <= n_max; ++n) {
        const PolyAux& prev = out.back().poly;
        BigInt pow2 = 1;
        pow2 <<= static_cast<unsigned long>(n - 1);
        const PolyAux boundary = (one - y) * (PolyAux(Rational(pow2)) * y - y.pow(n)) * q.pow(n - 1);
        const PolyAux at_q1 = prev.evaluate(1, 1);
        const PolyAux growth = y * q * (at_q1 + (one - PolyAux(2) * q) * prev);
        const PolyAux numerator = boundary * (one - q) + growth * (PolyAux(2) - y);
        auto quotient = numerator.divide_exact(denominator);
        if (!quotient) {
            throw ExactnessError("v_n(y,q) recurrence left a remainder at n=" + std::to_string(n));
        }
        out.push_back({n, std::move(*quotient)});
    }
    return out;
}

VPoly gtree_vpoly(int n) { return gtree_vpolys(n).back(); }

}  // namespace permlab
