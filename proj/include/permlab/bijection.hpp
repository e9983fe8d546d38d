#pragma once

#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

/// The pair (1342,1432) whose avoiders form the domain of f.
const PatternPair& bijection_domain();
/// The pair (1234,1243) whose avoiders form the image of f.
const PatternPair& bijection_codomain();

/// pi_0 = pi, pi_1, ..., pi_r = f(pi), one stage per left-right minimum.
struct BijectionTrace {
    std::vector<Permutation> stages;
    /// Left-right minima, shared by every stage.
    std::vector<LrMinimum> minima;

    int stage_count() const noexcept { return static_cast<int>(stages.size()) - 1; }
    const Permutation& image() const { return stages.back(); }
};

/// Runs f with every stage recorded. Stage 1 reverses everything after the
/// letter 1. Stage t (minima a_1 = 1 < a_2 < ... < a_r by value) takes the
/// letters above a_t lying right of a_t, keeps those right of a_{t-1} in
/// order and moves the rest, reversed, behind them in the same positions.
/// DomainError unless perm avoids (1342,1432).
BijectionTrace map_f_trace(const Permutation& perm);

Permutation map_f(const Permutation& perm);

/// Undoes the stages from the last to the first. DomainError unless perm
/// avoids (1234,1243).
Permutation inverse_f(const Permutation& perm);

/// True when some occurrence of pat uses the letter at 1-based `position`
/// as its first entry.
bool occurrence_starts_at(const Permutation& perm, const Pattern& pat, int position);

}  // namespace permlab
