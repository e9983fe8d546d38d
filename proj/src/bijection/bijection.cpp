#include "permlab/bijection.hpp"

#include <algorithm>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

int position_of(const std::vector<int>& p, int value)
{
    return static_cast<int>(std::find(p.begin(), p.end(), value) - p.begin());
}

// Positions (0-based) right of `start` holding letters above `floor`.
std::vector<int> upper_positions(const std::vector<int>& p, int start, int floor)
{
    std::vector<int> out;
    for (int k = start + 1; k < static_cast<int>(p.size()); ++k) {
        if (p[static_cast<std::size_t>(k)] > floor) {
            out.push_back(k);
        }
    }
    return out;
}

// Minimum values a_1 = 1 < a_2 < ... < a_r.
std::vector<int> minima_values(const std::vector<LrMinimum>& minima)
{
    std::vector<int> a;
    for (auto it = minima.rbegin(); it != minima.rend(); ++it) {
        a.push_back(it->value);
    }
    return a;
}

// Stage t works on the letters above a_t right of a_t; `boundary` is the
// position of a_{t-1}, or n for the first stage.
void forward_stage(std::vector<int>& p, int at, int boundary)
{
    const std::vector<int> slots = upper_positions(p, position_of(p, at), at);
    std::vector<int> kept;
    std::vector<int> moved;
    for (int k : slots) {
        (k > boundary ? kept : moved).push_back(p[static_cast<std::size_t>(k)]);
    }
    kept.insert(kept.end(), moved.rbegin(), moved.rend());
    for (std::size_t s = 0; s < slots.size(); ++s) {
        p[static_cast<std::size_t>(slots[s])] = kept[s];
    }
}

void inverse_stage(std::vector<int>& p, int at, int boundary)
{
    const std::vector<int> slots = upper_positions(p, position_of(p, at), at);
    const auto after = static_cast<std::size_t>(
        std::count_if(slots.begin(), slots.end(), [&](int k) { return k > boundary; }));
    std::vector<int> refill;
    for (int k : slots) {
        refill.push_back(p[static_cast<std::size_t>(k)]);
    }
    // Slots between a_t and a_{t-1} come first and take the tail reversed;
    // the slots after a_{t-1} take the head in order.
    std::vector<int> original(refill.rbegin(), refill.rend() - static_cast<std::ptrdiff_t>(after));
    original.insert(original.end(), refill.begin(), refill.begin() + static_cast<std::ptrdiff_t>(after));
    for (std::size_t s = 0; s < slots.size(); ++s) {
        p[static_cast<std::size_t>(slots[s])] = original[s];
    }
}

bool extend(const std::vector<int>& p, const Permutation& pat, std::vector<int>& chosen, std::size_t from)
{
    const std::size_t depth = chosen.size();
    if (depth == static_cast<std::size_t>(pat.size())) {
        return true;
    }
    for (std::size_t k = from; k < p.size(); ++k) {
        bool fits = true;
        for (std::size_t e = 0; e < depth && fits; ++e) {
            fits = (pat[e] < pat[depth]) == (p[static_cast<std::size_t>(chosen[e])] < p[k]);
        }
        if (!fits) {
            continue;
        }
        chosen.push_back(static_cast<int>(k));
        if (extend(p, pat, chosen, k + 1)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

const PatternPair& bijection_domain()
{
    static const PatternPair pair = PatternPair::parse("1342,1432");
    return pair;
}

const PatternPair& bijection_codomain()
{
    static const PatternPair pair = PatternPair::parse("1234,1243");
    return pair;
}

BijectionTrace map_f_trace(const Permutation& perm)
{
    if (!avoids(perm, bijection_domain())) {
        throw DomainError(perm.str() + " does not avoid " + bijection_domain().str());
    }
    BijectionTrace trace;
    trace.minima = left_right_minima(perm);
    trace.stages.push_back(perm);
    if (perm.empty()) {
        return trace;
    }
    const std::vector<int> a = minima_values(trace.minima);
    std::vector<int> p(perm.letters().begin(), perm.letters().end());
    for (std::size_t t = 0; t < a.size(); ++t) {
        const int boundary = t == 0 ? perm.size() : position_of(p, a[t - 1]);
        forward_stage(p, a[t], boundary);
        trace.stages.emplace_back(p);
    }
    return trace;
}

Permutation map_f(const Permutation& perm) { return map_f_trace(perm).image(); }

Permutation inverse_f(const Permutation& perm)
{
    if (!avoids(perm, bijection_codomain())) {
        throw DomainError(perm.str() + " does not avoid " + bijection_codomain().str());
    }
    if (perm.empty()) {
        return perm;
    }
    const std::vector<int> a = minima_values(left_right_minima(perm));
    std::vector<int> p(perm.letters().begin(), perm.letters().end());
    for (std::size_t t = a.size(); t-- > 0;) {
        const int boundary = t == 0 ? perm.size() : position_of(p, a[t - 1]);
        inverse_stage(p, a[t], boundary);
    }
    return Permutation(std::move(p));
}

bool occurrence_starts_at(const Permutation& perm, const Pattern& pat, int position)
{
    if (position < 1 || position > perm.size()) {
        throw DomainError("position " + std::to_string(position) + " outside 1.." + std::to_string(perm.size()));
    }
    const std::vector<int> p(perm.letters().begin(), perm.letters().end());
    std::vector<int> chosen{position - 1};
    return extend(p, pat.perm(), chosen, static_cast<std::size_t>(position));
}

}  // namespace permlab
