#pragma once

#include "posetkit/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace posetkit {

enum class SelectStrategy {
    min_strict_ub, // least-index strict upper bound
    max_strict_ub, // greatest-index strict upper bound
    seeded_random, // pure function of (seed, subset), uniform over strict upper bounds
    none,          // undefined outside overrides
};

/// A choice function: a partial map from subsets to elements. Overrides take
/// precedence over the strategy and may name ANY element — including one
/// that is not a strict upper bound — so that bound-assignment claims can be
/// falsified against adversarial selectors.
class Selector {
public:
    using Overrides = std::map<SubsetBits, int>;

    explicit Selector(SelectStrategy strategy, std::uint64_t seed = 0, Overrides overrides = {})
        : strategy_(strategy),
          seed_(strategy == SelectStrategy::seeded_random ? seed : 0),
          overrides_(std::move(overrides)) {}

    SelectStrategy strategy() const noexcept { return strategy_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const Overrides& overrides() const noexcept { return overrides_; }

    /// The chosen element for C, or nullopt where the selector is undefined.
    std::optional<int> select(const Poset& p, const SubsetBits& c) const;

    bool operator==(const Selector& other) const {
        return strategy_ == other.strategy_ && seed_ == other.seed_ &&
               overrides_ == other.overrides_;
    }

private:
    SelectStrategy strategy_;
    std::uint64_t seed_;
    Overrides overrides_;
};

namespace detail {

/// select() when strict_upper_bounds(c) is already at hand; the iterative
/// constructions maintain that set incrementally and skip the recompute.
std::optional<int> select_with_bounds(const Selector& f, const Poset& p, const SubsetBits& c,
                                      const SubsetBits& strict_ubs);

/// The shared ascent C0 = ∅, C_{k+1} = C_k ∪ {f(C_k)}, running while f(C_k)
/// is defined and a strict upper bound of C_k. Stops (and reports why) at the
/// first k where that fails; finiteness of the poset bounds the run.
struct Ascent {
    std::vector<SubsetBits> trace;    // C_0 .. C_final
    bool selector_defined = false;    // was f(C_final) defined?
    std::optional<int> chosen;        // f(C_final) when defined (not a strict bound)
    std::optional<int> last_added;    // the element that completed C_final
    SubsetBits final_strict_ubs;      // strict_upper_bounds(C_final)
};

Ascent ascend(const Poset& p, const Selector& f);

} // namespace detail

} // namespace posetkit
