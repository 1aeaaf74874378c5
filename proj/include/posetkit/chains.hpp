#pragma once

#include "posetkit/selector.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace posetkit {

/// Exhaustive operations (anything enumerating chains or subsets) refuse to
/// run past this many elements. Callers may lower the limit, never raise it.
inline constexpr int kExhaustiveLimit = 20;

/// Cap for the linear-step iterative constructions.
inline constexpr int kIterativeLimit = 1 << 16;

enum class ExpanderKind { selector_derived, table, function };

/// A map from subsets to subsets. The selector-derived form evaluates to
/// C ∪ {f(C)} when f(C) is defined and to C itself otherwise; the table form
/// evaluates explicit entries and is the identity elsewhere. The function
/// form is programmatic plumbing (not serializable) for callers that need an
/// arbitrary map.
class Expander {
public:
    using Table = std::map<SubsetBits, SubsetBits>;
    using Fn = std::function<SubsetBits(const Poset&, const SubsetBits&)>;

    static Expander from_selector(Selector f);
    static Expander from_table(Table table);
    static Expander from_function(Fn fn);

    ExpanderKind kind() const noexcept { return kind_; }
    const Selector* selector() const noexcept;

    SubsetBits apply(const Poset& p, const SubsetBits& c) const;

private:
    Expander() = default;

    ExpanderKind kind_ = ExpanderKind::table;
    std::optional<Selector> selector_;
    Table table_;
    Fn fn_;
};

enum class GgcMethod { bruteforce, iterative };

/// A greatest good chain together with how it was obtained. The trace holds
/// the iterates when the iterative method produced it; each trace step is a
/// proper segment of the next.
struct GoodChainReport {
    SubsetBits chain;
    std::vector<SubsetBits> trace;
    GgcMethod method = GgcMethod::bruteforce;
};

/// A finite family of chains of one poset.
struct ChainFamily {
    std::vector<SubsetBits> members;
};

/// Good chain for g: C is a chain and every proper segment S of C satisfies
/// S ⊏ g(S) ⊑ C. The proper segments of a finite chain are exactly its
/// proper prefixes (including ∅), so those are what gets checked.
bool is_good(const Poset& p, const Expander& g, const SubsetBits& c);

/// The weak goodness variant: only g(S) ⊑ C is required of each proper
/// segment S (the S ⊏ g(S) half is dropped). Agrees with is_good whenever
/// the selector behind g only ever returns strict upper bounds.
bool is_good_weak(const Poset& p, const Expander& g, const SubsetBits& c);

/// Calls fn for every chain of p exactly once: depth-first extension by
/// elements of increasing index, so the order is deterministic.
void for_each_chain(const Poset& p, const std::function<void(const SubsetBits&)>& fn,
                    int limit = kExhaustiveLimit);

std::vector<SubsetBits> enumerate_chains(const Poset& p, int limit = kExhaustiveLimit);

/// All good chains for g, in enumeration order.
ChainFamily good_chains(const Poset& p, const Expander& g, int limit = kExhaustiveLimit);

/// The union of all good chains. Verifies on the way out that the union is
/// itself good and that every good chain is a segment of it; a failure of
/// either is an implementation bug and raises internal_lemma_violation.
GoodChainReport greatest_good_chain_bruteforce(const Poset& p, const Expander& g,
                                               int limit = kExhaustiveLimit);

/// The greatest good chain for the selector-derived expander of f, built by
/// direct ascent (no enumeration): grow from ∅ while f yields a strict upper
/// bound. Equals the brute-force result whenever both are computable.
GoodChainReport greatest_good_chain_iter(const Poset& p, const Selector& f);

/// Scans all pairs of good chains for one that is a segment of neither
/// direction. Always expected absent; a returned pair is an implementation
/// bug caught by the lemma suites.
std::optional<std::pair<SubsetBits, SubsetBits>> comparability_check(
    const Poset& p, const Expander& g, int limit = kExhaustiveLimit);

} // namespace posetkit
