#include "posetkit/selector.hpp"

#include "posetkit/rng.hpp"

namespace posetkit {

namespace detail {

std::optional<int> select_with_bounds(const Selector& f, const Poset& p, const SubsetBits& c,
                                      const SubsetBits& strict_ubs) {
    if (c.universe_size() != p.size()) {
        throw Error(Errc::usage_error, "subset not bound to this poset");
    }
    auto it = f.overrides().find(c);
    if (it != f.overrides().end()) return it->second;

    switch (f.strategy()) {
        case SelectStrategy::min_strict_ub: {
            int i = strict_ubs.min_element();
            if (i < 0) return std::nullopt;
            return i;
        }
        case SelectStrategy::max_strict_ub: {
            int i = strict_ubs.max_element();
            if (i < 0) return std::nullopt;
            return i;
        }
        case SelectStrategy::seeded_random: {
            int k = strict_ubs.count();
            if (k == 0) return std::nullopt;
            // Stateless hash of (seed, subset words), low word first.
            std::uint64_t acc = splitmix64_once(f.seed());
            for (std::uint64_t w : c.words()) acc = splitmix64_once(acc ^ w);
            int pick = static_cast<int>(acc % static_cast<std::uint64_t>(k));
            int chosen = -1;
            strict_ubs.for_each([&](int i) {
                if (pick-- == 0) chosen = i;
            });
            return chosen;
        }
        case SelectStrategy::none:
            return std::nullopt;
    }
    return std::nullopt;
}

Ascent ascend(const Poset& p, const Selector& f) {
    Ascent result;
    SubsetBits chain(p.size());
    SubsetBits strict_ubs = p.full_subset();
    result.trace.push_back(chain);

    // Each accepted step strictly grows a subset of a finite set, so the
    // loop runs at most p.size() + 1 times.
    while (true) {
        std::optional<int> chosen = select_with_bounds(f, p, chain, strict_ubs);
        if (!chosen) {
            result.selector_defined = false;
            result.final_strict_ubs = strict_ubs;
            return result;
        }
        if (!strict_ubs.test(*chosen)) {
            result.selector_defined = true;
            result.chosen = chosen;
            result.final_strict_ubs = strict_ubs;
            return result;
        }
        chain.set(*chosen);
        strict_ubs &= p.up_set(*chosen).without(*chosen);
        result.last_added = chosen;
        result.trace.push_back(chain);
    }
}

} // namespace detail

std::optional<int> Selector::select(const Poset& p, const SubsetBits& c) const {
    return detail::select_with_bounds(*this, p, c, strict_upper_bounds(p, c));
}

} // namespace posetkit
