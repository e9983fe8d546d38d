#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/closed_form.hpp"
#include "permlab/recurrence.hpp"
#include "permlab/xseries.hpp"

namespace permlab {

/// Generating functions read off the joint first/second letter tables, in
/// slots (v, w) = (first letter, second letter).
///   aplus, aminus: a_n(i,j) v^i w^j over i < j and i > j, n >= 2.
///   c: a_n(i,i+1) v^i; i <= n-1 for (1243,1423), i <= n-2 otherwise.
///   d: a_n(i,i+2) v^i for (1243,1423); zero for the other pairs.
///   b: a_n(i,j) v^i w^j over j >= i+3 for (1243,1423), over
///      i+3 <= j <= n-1 for (1243,1342) and i+2 <= j <= n-1 for (1243,1324).
struct JointSeries {
    XSeries aplus;
    XSeries aminus;
    XSeries c;
    XSeries d;
    XSeries b;
};

/// Series through x^order from the joint recurrence tables.
JointSeries joint_dp_series(JointRecurrence kind, int order);

/// f(x,y;q) = sum_n v_n(y,q) x^n from the generating tree tables.
XSeries gtree_dp_series(int order);

enum class SystemCase { gtree, avoid_1243_1423, avoid_1243_1342, avoid_1243_1324 };

std::string_view case_name(SystemCase which);
std::optional<SystemCase> parse_case(std::string_view name);
std::vector<SystemCase> all_cases();

struct EquationResult {
    std::string label;
    bool pass = false;
    /// "identity holds through x^D" or the first offending monomial.
    std::string detail;
};

struct SystemReport {
    SystemCase which = SystemCase::gtree;
    int order = 0;
    std::vector<EquationResult> equations;

    bool pass() const;
};

inline constexpr int kDefaultSystemOrder = 8;
inline constexpr int kMaxSystemOrder = 10;

/// Substitutes the closed forms (and the table series where no closed form
/// exists) into every functional equation of the case, each cleared of its
/// non-unit denominators, and checks the residuals through x^order. Also
/// cross-checks closed forms against the tables. ResourceError when order
/// exceeds max_order.
SystemReport verify_system(SystemCase which, int order = kDefaultSystemOrder, int max_order = kMaxSystemOrder);

}  // namespace permlab
