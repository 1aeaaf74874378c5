#pragma once

#include "posetkit/chains.hpp"

namespace posetkit {

enum class BoundingVerdict {
    selector_undefined,     // f(chain) has no value
    value_not_strict_bound, // f(chain) named an element that fails c < s
};

/// The chain on which a claimed strict-upper-bound assignment fails, with
/// the iterates that led there. No assignment survives: for every selector
/// the ascent from ∅ self-refutes within n + 1 steps.
struct BoundingWitness {
    SubsetBits chain;
    std::vector<SubsetBits> trace; // C_0 .. chain
    BoundingVerdict verdict = BoundingVerdict::selector_undefined;
    std::optional<int> offending;  // the named element, for value_not_strict_bound
};

/// Runs the ascent C_{k+1} = C_k ∪ {f(C_k)} until f fails to produce a
/// strict upper bound, and reports that failure. Total for every selector
/// on every finite poset.
BoundingWitness falsify_bound_assignment(const Poset& p, const Selector& f);

/// A chain with no strict upper bound, built by the same ascent. The
/// selector must deliver a genuine strict upper bound whenever one exists;
/// a selector that lies (or runs out) on a boundable chain raises
/// invalid_selector, because the construction would not be the witness.
SubsetBits unbounded_chain(const Poset& p, const Selector& f);

struct ZornResult {
    int maximal;      // a maximal element of the poset
    SubsetBits chain; // the witness chain it upper-bounds
};

/// Maximal element via an unbounded chain: the last element added upper-
/// bounds the chain, and a chain without strict upper bounds makes that
/// element maximal. Cross-checked against the definitions before returning.
ZornResult zorn_maximal(const Poset& p, const Selector& f);

/// A selector whose overrides send each proper prefix of the chain to the
/// next chain element (strategy none elsewhere); the chain is good for the
/// derived expander. This is the finite half of: a chain is well-ordered
/// iff it is good for some selector-derived expander.
Selector selector_for_chain(const Poset& p, const SubsetBits& c);

} // namespace posetkit
