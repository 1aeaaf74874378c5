#pragma once

#include "posetkit/subset_bits.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetkit {

enum class ClosureMode {
    hasse, // pairs are covering edges; reflexive-transitive closure is taken
    full,  // pairs are the complete <= relation minus reflexivity; axioms are verified
};

/// A finite partial order over indexed, labeled elements. The reflexive
/// relation <= is the source of truth; < is derived as (<= and !=).
/// Immutable after construction, so instances are safe to share.
class Poset {
public:
    static Poset from_pairs(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs,
                            ClosureMode mode);

    int size() const noexcept { return n_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(std::string_view label) const;

    bool leq(int i, int j) const { return up_[static_cast<std::size_t>(i)].test(j); }
    bool lt(int i, int j) const { return i != j && leq(i, j); }

    /// {j : i <= j}, including i itself.
    const SubsetBits& up_set(int i) const { return up_[static_cast<std::size_t>(i)]; }
    /// {j : j <= i}, including i itself.
    const SubsetBits& down_set(int i) const { return down_[static_cast<std::size_t>(i)]; }

    SubsetBits empty_subset() const { return SubsetBits(n_); }
    SubsetBits full_subset() const { return SubsetBits::all(n_); }

    bool operator==(const Poset& other) const {
        return labels_ == other.labels_ && up_ == other.up_;
    }
    bool operator!=(const Poset& other) const { return !(*this == other); }

private:
    Poset(std::vector<std::string> labels, std::vector<SubsetBits> up);

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<SubsetBits> up_;
    std::vector<SubsetBits> down_;
};

/// True iff every two elements of S are <=-comparable. The empty set and
/// singletons are chains.
bool is_chain(const Poset& p, const SubsetBits& s);

/// Initial-segment test: S ⊆ C and every element of C below some element
/// of S is itself in S.
bool is_segment(const Poset& p, const SubsetBits& s, const SubsetBits& c);

/// is_segment(s, c) and s != c.
bool is_prop_segment(const Poset& p, const SubsetBits& s, const SubsetBits& c);

/// All s with c < s for every c in C. For C = ∅ this is every element.
SubsetBits strict_upper_bounds(const Poset& p, const SubsetBits& c);

/// All u with c <= u for every c in C.
SubsetBits upper_bounds(const Poset& p, const SubsetBits& c);

/// All x with no y above them; empty only for the empty poset.
SubsetBits maximal_elements(const Poset& p);

/// Least upper bound of C when it exists (the minimum of upper_bounds(C)).
/// sup of ∅ is the poset's least element, when there is one.
std::optional<int> sup_of(const Poset& p, const SubsetBits& c);

/// Elements of a chain in ascending <=-order.
std::vector<int> chain_in_order(const Poset& p, const SubsetBits& c);

/// Covering pairs (i, j): i < j with nothing strictly between. This is the
/// unique transitive reduction of the order; pairs come out sorted by index.
std::vector<std::pair<int, int>> covering_pairs(const Poset& p);

} // namespace posetkit
