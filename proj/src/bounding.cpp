#include "posetkit/bounding.hpp"

#include <string>

namespace posetkit {

BoundingWitness falsify_bound_assignment(const Poset& p, const Selector& f) {
    detail::Ascent a = detail::ascend(p, f);
    BoundingWitness w;
    w.trace = std::move(a.trace);
    w.chain = w.trace.back();
    if (a.selector_defined) {
        w.verdict = BoundingVerdict::value_not_strict_bound;
        w.offending = a.chosen;
    } else {
        w.verdict = BoundingVerdict::selector_undefined;
    }
    // Each step grows the chain by one element, so the ascent visits at
    // most n + 1 subsets of an n-element poset.
    if (w.trace.size() > static_cast<size_t>(p.size()) + 1)
        throw Error(Errc::internal_lemma_violation,
                    "bound falsifier ran past n + 1 iterates");
    return w;
}

SubsetBits unbounded_chain(const Poset& p, const Selector& f) {
    SubsetBits c = p.empty_subset();
    SubsetBits strict_ubs = p.full_subset();
    for (;;) {
        if (strict_ubs.empty()) return c;
        std::optional<int> pick = f.select(p, c);
        if (!pick)
            throw Error(Errc::invalid_selector,
                        "selector undefined on a chain that still has strict upper bounds");
        if (!strict_ubs.test(*pick))
            throw Error(Errc::invalid_selector,
                        "selector value '" + p.label(*pick) +
                            "' is not a strict upper bound of the chain");
        c.set(*pick);
        strict_ubs &= p.up_set(*pick).without(*pick);
    }
}

ZornResult zorn_maximal(const Poset& p, const Selector& f) {
    if (p.size() == 0) throw Error(Errc::empty_poset, "empty poset has no maximal element");
    SubsetBits c = p.empty_subset();
    SubsetBits strict_ubs = p.full_subset();
    int last = -1;
    while (!strict_ubs.empty()) {
        std::optional<int> pick = f.select(p, c);
        if (!pick)
            throw Error(Errc::invalid_selector,
                        "selector undefined on a chain that still has strict upper bounds");
        if (!strict_ubs.test(*pick))
            throw Error(Errc::invalid_selector,
                        "selector value '" + p.label(*pick) +
                            "' is not a strict upper bound of the chain");
        last = *pick;
        c.set(last);
        strict_ubs &= p.up_set(last).without(last);
    }
    // Starting from the empty chain every element is a strict upper bound,
    // so at least one step happened.
    if (last < 0)
        throw Error(Errc::internal_lemma_violation, "ascent ended without adding an element");
    for (int x : c.elements())
        if (!p.leq(x, last))
            throw Error(Errc::internal_lemma_violation,
                        "last element does not bound the witness chain");
    if (!maximal_elements(p).test(last))
        throw Error(Errc::internal_lemma_violation,
                    "element bounding an unboundable chain is not maximal");
    return ZornResult{last, std::move(c)};
}

Selector selector_for_chain(const Poset& p, const SubsetBits& c) {
    if (!is_chain(p, c)) throw Error(Errc::not_a_chain, "subset is not a chain");
    std::vector<int> order = chain_in_order(p, c);
    Selector::Overrides table;
    SubsetBits prefix = p.empty_subset();
    for (int x : order) {
        table.emplace(prefix, x);
        prefix.set(x);
    }
    Selector f(SelectStrategy::none, 0, std::move(table));
    if (!is_good(p, Expander::from_selector(f), c))
        throw Error(Errc::internal_lemma_violation,
                    "prefix-override selector does not make the chain good");
    return f;
}

} // namespace posetkit
