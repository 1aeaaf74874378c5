#include "posetkit/chains.hpp"

#include <algorithm>

namespace posetkit {

namespace {

void check_exhaustive_limit(const Poset& p, int limit, const char* what) {
    int effective = std::min(limit, kExhaustiveLimit);
    if (p.size() > effective) {
        throw Error(Errc::size_limit_exceeded,
                    std::string(what) + " is exhaustive and limited to " +
                        std::to_string(effective) + " elements, poset has " +
                        std::to_string(p.size()));
    }
}

} // namespace

Expander Expander::from_selector(Selector f) {
    Expander g;
    g.kind_ = ExpanderKind::selector_derived;
    g.selector_ = std::move(f);
    return g;
}

Expander Expander::from_table(Table table) {
    Expander g;
    g.kind_ = ExpanderKind::table;
    g.table_ = std::move(table);
    return g;
}

Expander Expander::from_function(Fn fn) {
    Expander g;
    g.kind_ = ExpanderKind::function;
    g.fn_ = std::move(fn);
    return g;
}

const Selector* Expander::selector() const noexcept {
    return selector_ ? &*selector_ : nullptr;
}

SubsetBits Expander::apply(const Poset& p, const SubsetBits& c) const {
    switch (kind_) {
        case ExpanderKind::selector_derived: {
            std::optional<int> v = selector_->select(p, c);
            return v ? c.with(*v) : c;
        }
        case ExpanderKind::table: {
            auto it = table_.find(c);
            return it != table_.end() ? it->second : c;
        }
        case ExpanderKind::function:
            return fn_(p, c);
    }
    return c;
}

namespace {

// Proper prefixes of a chain (∅ first), which are exactly its proper
// segments; the prefix-structure tests pin that equivalence.
template <typename Fn>
bool all_proper_prefixes(const Poset& p, const SubsetBits& c, Fn&& check) {
    std::vector<int> order = chain_in_order(p, c);
    SubsetBits prefix(p.size());
    for (int element : order) {
        if (!check(prefix)) return false;
        prefix.set(element);
    }
    return true;
}

} // namespace

bool is_good(const Poset& p, const Expander& g, const SubsetBits& c) {
    if (!is_chain(p, c)) return false;
    return all_proper_prefixes(p, c, [&](const SubsetBits& s) {
        SubsetBits gs = g.apply(p, s);
        return is_prop_segment(p, s, gs) && is_segment(p, gs, c);
    });
}

bool is_good_weak(const Poset& p, const Expander& g, const SubsetBits& c) {
    if (!is_chain(p, c)) return false;
    return all_proper_prefixes(p, c,
                               [&](const SubsetBits& s) { return is_segment(p, g.apply(p, s), c); });
}

void for_each_chain(const Poset& p, const std::function<void(const SubsetBits&)>& fn, int limit) {
    check_exhaustive_limit(p, limit, "chain enumeration");

    // Depth-first: a set stays a chain when the new element is comparable
    // with everything already in it, so track the comparable-with-all set.
    struct Walker {
        const Poset& p;
        const std::function<void(const SubsetBits&)>& fn;

        void visit(SubsetBits& chain, const SubsetBits& comparable, int from) {
            fn(chain);
            for (int j = from; j < p.size(); ++j) {
                if (!comparable.test(j)) continue;
                chain.set(j);
                SubsetBits next = comparable & (p.up_set(j) | p.down_set(j));
                visit(chain, next, j + 1);
                chain.reset(j);
            }
        }
    };

    SubsetBits chain(p.size());
    Walker{p, fn}.visit(chain, p.full_subset(), 0);
}

std::vector<SubsetBits> enumerate_chains(const Poset& p, int limit) {
    std::vector<SubsetBits> out;
    for_each_chain(p, [&](const SubsetBits& c) { out.push_back(c); }, limit);
    return out;
}

ChainFamily good_chains(const Poset& p, const Expander& g, int limit) {
    ChainFamily family;
    for_each_chain(p, [&](const SubsetBits& c) {
        if (is_good(p, g, c)) family.members.push_back(c);
    }, limit);
    return family;
}

GoodChainReport greatest_good_chain_bruteforce(const Poset& p, const Expander& g, int limit) {
    ChainFamily family = good_chains(p, g, limit);
    SubsetBits chain_union(p.size());
    for (const SubsetBits& c : family.members) chain_union |= c;

    if (!is_good(p, g, chain_union)) {
        throw Error(Errc::internal_lemma_violation, "union of all good chains is not good");
    }
    for (const SubsetBits& c : family.members) {
        if (!is_segment(p, c, chain_union)) {
            throw Error(Errc::internal_lemma_violation,
                        "a good chain is not a segment of the union of all good chains");
        }
    }
    return GoodChainReport{chain_union, {}, GgcMethod::bruteforce};
}

GoodChainReport greatest_good_chain_iter(const Poset& p, const Selector& f) {
    if (p.size() > kIterativeLimit) {
        throw Error(Errc::size_limit_exceeded,
                    "iterative greatest good chain limited to " + std::to_string(kIterativeLimit) +
                        " elements");
    }
    detail::Ascent ascent = detail::ascend(p, f);
    return GoodChainReport{ascent.trace.back(), std::move(ascent.trace), GgcMethod::iterative};
}

std::optional<std::pair<SubsetBits, SubsetBits>> comparability_check(const Poset& p,
                                                                     const Expander& g,
                                                                     int limit) {
    ChainFamily family = good_chains(p, g, limit);
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            const SubsetBits& a = family.members[i];
            const SubsetBits& b = family.members[j];
            if (!is_segment(p, a, b) && !is_segment(p, b, a)) {
                return std::make_pair(a, b);
            }
        }
    }
    return std::nullopt;
}

} // namespace posetkit
