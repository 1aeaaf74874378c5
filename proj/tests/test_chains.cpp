#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace posetkit;

namespace {

Selector min_sel() { return Selector(SelectStrategy::min_strict_ub); }

// f(∅) = first element, undefined elsewhere
Selector empty_to(const Poset& p, int value) {
    return Selector(SelectStrategy::none, 0, {{p.empty_subset(), value}});
}

// strategies the comparability/agreement corpora cycle through
std::vector<Selector> corpus_selectors(const Poset& p, std::uint64_t k) {
    std::vector<Selector> out = {
        Selector(SelectStrategy::min_strict_ub),
        Selector(SelectStrategy::max_strict_ub),
        Selector(SelectStrategy::seeded_random, k),
    };
    out.push_back(corpus::table_selector(p, k * 3 + 1, SelectStrategy::min_strict_ub));
    out.push_back(corpus::table_selector(p, k * 3 + 2, SelectStrategy::none));
    out.push_back(corpus::table_selector(p, k * 3 + 3, SelectStrategy::seeded_random));
    return out;
}

} // namespace

TEST_CASE("expander evaluation") {
    Poset c3 = fix::chain3();
    Expander g = Expander::from_selector(min_sel());
    CHECK(g.kind() == ExpanderKind::selector_derived);
    CHECK(g.selector() != nullptr);
    CHECK(g.apply(c3, c3.empty_subset()) == fix::sb(c3, {0}));
    CHECK(g.apply(c3, c3.full_subset()) == c3.full_subset()); // undefined -> identity

    Expander t = Expander::from_table({{fix::sb(c3, {0}), fix::sb(c3, {0, 1})}});
    CHECK(t.kind() == ExpanderKind::table);
    CHECK(t.selector() == nullptr);
    CHECK(t.apply(c3, fix::sb(c3, {0})) == fix::sb(c3, {0, 1}));
    CHECK(t.apply(c3, fix::sb(c3, {1})) == fix::sb(c3, {1})); // identity elsewhere

    Expander fn = Expander::from_function(
        [](const Poset& p, const SubsetBits& c) { return strict_upper_bounds(p, c) | c; });
    CHECK(fn.apply(c3, fix::sb(c3, {0})) == c3.full_subset());
}

TEST_CASE("goodness examples") {
    Poset a2 = fix::antichain2();
    Expander g = Expander::from_selector(empty_to(a2, 0));
    CHECK(is_good(a2, g, a2.empty_subset()));
    CHECK(is_good(a2, g, fix::sb(a2, {0})));
    CHECK_FALSE(is_good(a2, g, fix::sb(a2, {1}))); // g(∅)={a} not inside {b}
    CHECK_FALSE(is_good(a2, g, fix::sb(a2, {0, 1}))); // not even a chain
}

TEST_CASE("weak goodness drops the strict-growth half") {
    Poset a2 = fix::antichain2();
    Expander g = Expander::from_selector(empty_to(a2, 0));
    CHECK(is_good_weak(a2, g, a2.empty_subset()));
    CHECK_FALSE(is_good_weak(a2, g, fix::sb(a2, {1})));

    // identity expander: {a} fails strict growth but passes the weak form
    Expander ident = Expander::from_table({});
    CHECK_FALSE(is_good(a2, ident, fix::sb(a2, {0})));
    CHECK(is_good_weak(a2, ident, fix::sb(a2, {0})));
}

TEST_CASE("weak and strict goodness agree for honest strategies") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 150; ++k) {
        Poset p = corpus::poset_at(k, 8);
        for (SelectStrategy st : {SelectStrategy::min_strict_ub, SelectStrategy::max_strict_ub,
                                  SelectStrategy::seeded_random}) {
            Expander g = Expander::from_selector(Selector(st, k));
            for (const SubsetBits& c : enumerate_chains(p))
                if (is_good(p, g, c) != is_good_weak(p, g, c)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("chain enumeration") {
    CHECK(enumerate_chains(fix::empty()) == std::vector<SubsetBits>{SubsetBits(0)});

    Poset a2 = fix::antichain2();
    CHECK(enumerate_chains(a2) ==
          std::vector<SubsetBits>{a2.empty_subset(), fix::sb(a2, {0}), fix::sb(a2, {1})});

    Poset c3 = fix::chain3();
    std::vector<SubsetBits> expected = {
        c3.empty_subset(),    fix::sb(c3, {0}),    fix::sb(c3, {0, 1}),
        fix::sb(c3, {0, 1, 2}), fix::sb(c3, {0, 2}), fix::sb(c3, {1}),
        fix::sb(c3, {1, 2}),  fix::sb(c3, {2}),
    };
    CHECK(enumerate_chains(c3) == expected); // all 8 subsets, depth-first order
}

TEST_CASE("chain enumeration matches a subset-scan oracle") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 200; ++k) {
        Poset p = corpus::poset_at(k, 8);
        std::vector<SubsetBits> got = enumerate_chains(p);
        if (got != enumerate_chains(p)) ++bad; // deterministic
        std::vector<SubsetBits> sorted_got = got;
        std::sort(sorted_got.begin(), sorted_got.end());
        if (std::adjacent_find(sorted_got.begin(), sorted_got.end()) != sorted_got.end())
            ++bad; // no duplicates
        size_t expected = 0;
        for (const SubsetBits& s : oracle::all_subsets(p))
            if (oracle::is_chain(p, s)) ++expected;
        if (got.size() != expected) ++bad;
        for (const SubsetBits& c : got)
            if (!oracle::is_chain(p, c)) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("exhaustive operations refuse oversized posets") {
    Poset big = fix::chain_n(21);
    CHECK_THROWS_AS((void)enumerate_chains(big), Error);
    try {
        (void)good_chains(big, Expander::from_selector(min_sel()));
        FAIL("expected a size limit");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::size_limit_exceeded);
    }
    // callers can lower the cap but not raise it
    CHECK_THROWS_AS((void)enumerate_chains(fix::chain_n(6), 5), Error);
    CHECK_THROWS_AS((void)enumerate_chains(big, 200), Error);
}

TEST_CASE("good chain families") {
    Poset a2 = fix::antichain2();
    Expander ga = Expander::from_selector(empty_to(a2, 0));
    CHECK(good_chains(a2, ga).members ==
          std::vector<SubsetBits>{a2.empty_subset(), fix::sb(a2, {0})});

    Poset c3 = fix::chain3();
    Expander gmin = Expander::from_selector(min_sel());
    CHECK(good_chains(c3, gmin).members ==
          std::vector<SubsetBits>{c3.empty_subset(), fix::sb(c3, {0}), fix::sb(c3, {0, 1}),
                                  fix::sb(c3, {0, 1, 2})});

    Poset none = fix::empty();
    CHECK(good_chains(none, Expander::from_table({})).members ==
          std::vector<SubsetBits>{SubsetBits(0)});
}

TEST_CASE("greatest good chain, brute force") {
    Poset a2 = fix::antichain2();
    CHECK(greatest_good_chain_bruteforce(a2, Expander::from_selector(empty_to(a2, 0))).chain ==
          fix::sb(a2, {0}));

    Poset c3 = fix::chain3();
    GoodChainReport r = greatest_good_chain_bruteforce(c3, Expander::from_selector(min_sel()));
    CHECK(r.chain == c3.full_subset());
    CHECK(r.method == GgcMethod::bruteforce);

    CHECK(greatest_good_chain_bruteforce(fix::empty(), Expander::from_table({})).chain ==
          SubsetBits(0));
}

TEST_CASE("greatest good chain, iterative") {
    Poset a2 = fix::antichain2();
    GoodChainReport r = greatest_good_chain_iter(a2, empty_to(a2, 0));
    CHECK(r.chain == fix::sb(a2, {0}));
    CHECK(r.trace == std::vector<SubsetBits>{a2.empty_subset(), fix::sb(a2, {0})});
    CHECK(r.method == GgcMethod::iterative);

    Poset c3 = fix::chain3();
    GoodChainReport rm = greatest_good_chain_iter(c3, min_sel());
    CHECK(rm.chain == c3.full_subset());
    CHECK(rm.trace.size() == 4);

    GoodChainReport rn = greatest_good_chain_iter(c3, Selector(SelectStrategy::none));
    CHECK(rn.chain == c3.empty_subset());
    CHECK(rn.trace == std::vector<SubsetBits>{c3.empty_subset()});
}

TEST_CASE("iterative trace steps are proper segments of their successors") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 300; ++k) {
        Poset p = corpus::poset_at(k, 8);
        for (const Selector& f : corpus_selectors(p, k)) {
            GoodChainReport r = greatest_good_chain_iter(p, f);
            if (r.trace.front() != p.empty_subset()) ++bad;
            if (r.trace.back() != r.chain) ++bad;
            for (size_t i = 0; i + 1 < r.trace.size(); ++i)
                if (!oracle::is_prop_segment(p, r.trace[i], r.trace[i + 1])) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("goodness agrees with the all-subsets oracle") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 120; ++k) {
        Poset p = corpus::poset_at(k, 8);
        for (const Selector& f : corpus_selectors(p, k)) {
            Expander g = Expander::from_selector(f);
            for (const SubsetBits& s : oracle::all_subsets(p))
                if (is_good(p, g, s) != oracle::is_good(p, g, s)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("good chains are pairwise segment-comparable") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 250; ++k) {
        Poset p = corpus::poset_at(k, 8);
        for (const Selector& f : corpus_selectors(p, k))
            if (comparability_check(p, Expander::from_selector(f))) ++bad;

        // arbitrary table expanders satisfy the same lemma
        SplitMix64 rng(k ^ 0xABCDEF);
        Expander::Table table;
        for (int e = 0; e < p.size(); ++e) {
            unsigned all = (1u << p.size()) - 1;
            table[oracle::from_mask(p.size(), static_cast<unsigned>(rng.next()) & all)] =
                oracle::from_mask(p.size(), static_cast<unsigned>(rng.next()) & all);
        }
        if (comparability_check(p, Expander::from_table(std::move(table)))) ++bad;
    }
    CHECK(bad == 0);

    CHECK_FALSE(comparability_check(fix::empty(), Expander::from_table({})).has_value());
    Poset a2 = fix::antichain2();
    CHECK_FALSE(comparability_check(a2, Expander::from_selector(empty_to(a2, 0))).has_value());
}

TEST_CASE("the union construction stays good and dominant across the corpus") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 250; ++k) {
        Poset p = corpus::poset_at(k, 8);
        for (const Selector& f : corpus_selectors(p, k)) {
            Expander g = Expander::from_selector(f);
            GoodChainReport brute = greatest_good_chain_bruteforce(p, g); // throws on violation
            for (const SubsetBits& c : good_chains(p, g).members)
                if (!oracle::is_segment(p, c, brute.chain)) ++bad;
            if (!oracle::is_good(p, g, brute.chain)) ++bad;

            // the linear ascent lands on the same chain
            if (greatest_good_chain_iter(p, f).chain != brute.chain) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("iterative equals brute force out to n = 10") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 120; ++k) {
        Poset p = corpus::poset_at(k, 10);
        for (const Selector& f : corpus_selectors(p, k))
            if (greatest_good_chain_iter(p, f).chain !=
                greatest_good_chain_bruteforce(p, Expander::from_selector(f)).chain)
                ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("segments of good chains are good (selector-derived expanders)") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 150; ++k) {
        Poset p = corpus::poset_at(k, 8);
        for (const Selector& f : corpus_selectors(p, k)) {
            Expander g = Expander::from_selector(f);
            for (const SubsetBits& c : good_chains(p, g).members)
                for (const SubsetBits& s : oracle::subsets_of(p, c))
                    if (oracle::is_segment(p, s, c) && !is_good(p, g, s)) ++bad;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("segments of a finite chain are exactly its prefixes") {
    int bad = 0;
    for (std::uint64_t k = 0; k < 200; ++k) {
        Poset p = corpus::poset_at(k, 8);
        for (const SubsetBits& c : enumerate_chains(p)) {
            // prefixes by ascending order, ∅ through C itself
            std::vector<SubsetBits> prefixes;
            SubsetBits acc(p.size());
            prefixes.push_back(acc);
            for (int x : chain_in_order(p, c)) {
                acc.set(x);
                prefixes.push_back(acc);
            }
            std::vector<SubsetBits> segs;
            for (const SubsetBits& s : oracle::subsets_of(p, c))
                if (oracle::is_segment(p, s, c)) segs.push_back(s);
            std::sort(prefixes.begin(), prefixes.end());
            std::sort(segs.begin(), segs.end());
            if (prefixes != segs) ++bad;
        }
    }
    CHECK(bad == 0);
}
