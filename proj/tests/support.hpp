#pragma once

// Shared test support. Everything in oracle:: re-derives a result straight
// from the definitions (no shared code path with the library); everything in
// corpus:: builds seeded instances for the property suites.

#include "posetkit/bounding.hpp"
#include "posetkit/dataflow.hpp"
#include "posetkit/fixpoint.hpp"
#include "posetkit/gen.hpp"
#include "posetkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace testio {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string fixture(const std::string& name) {
    return read_file(std::string(FIXTURE_DIR) + "/" + name);
}

} // namespace testio

namespace oracle {

using posetkit::Poset;
using posetkit::SubsetBits;

inline SubsetBits from_mask(int n, unsigned mask) {
    SubsetBits s(n);
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.set(i);
    return s;
}

inline std::vector<SubsetBits> all_subsets(const Poset& p) {
    std::vector<SubsetBits> out;
    int n = p.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) out.push_back(from_mask(n, mask));
    return out;
}

// Submasks of one subset, the empty set included.
inline std::vector<SubsetBits> subsets_of(const Poset& p, const SubsetBits& c) {
    std::vector<int> elems = c.elements();
    std::vector<SubsetBits> out;
    for (unsigned mask = 0; mask < (1u << elems.size()); ++mask) {
        SubsetBits s(p.size());
        for (size_t k = 0; k < elems.size(); ++k)
            if (mask & (1u << k)) s.set(elems[k]);
        out.push_back(std::move(s));
    }
    return out;
}

inline bool is_chain(const Poset& p, const SubsetBits& s) {
    std::vector<int> e = s.elements();
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
            if (!p.leq(e[i], e[j]) && !p.leq(e[j], e[i])) return false;
    return true;
}

inline bool is_segment(const Poset& p, const SubsetBits& s, const SubsetBits& c) {
    if (!s.is_subset_of(c)) return false;
    for (int x : c.elements())
        for (int y : s.elements())
            if (p.leq(x, y) && !s.test(x)) return false;
    return true;
}

inline bool is_prop_segment(const Poset& p, const SubsetBits& s, const SubsetBits& c) {
    // qualified: the posetkit functions of the same name are ADL candidates
    return oracle::is_segment(p, s, c) && s != c;
}

inline SubsetBits strict_upper_bounds(const Poset& p, const SubsetBits& c) {
    SubsetBits out(p.size());
    for (int u = 0; u < p.size(); ++u) {
        bool ok = true;
        for (int x : c.elements())
            if (!p.lt(x, u)) ok = false;
        if (ok) out.set(u);
    }
    return out;
}

inline SubsetBits upper_bounds(const Poset& p, const SubsetBits& c) {
    SubsetBits out(p.size());
    for (int u = 0; u < p.size(); ++u) {
        bool ok = true;
        for (int x : c.elements())
            if (!p.leq(x, u)) ok = false;
        if (ok) out.set(u);
    }
    return out;
}

inline SubsetBits maximal_elements(const Poset& p) {
    SubsetBits out(p.size());
    for (int x = 0; x < p.size(); ++x) {
        bool top = true;
        for (int y = 0; y < p.size(); ++y)
            if (p.lt(x, y)) top = false;
        if (top) out.set(x);
    }
    return out;
}

inline std::optional<int> sup_of(const Poset& p, const SubsetBits& c) {
    SubsetBits ubs = oracle::upper_bounds(p, c);
    for (int u : ubs.elements()) {
        bool least = true;
        for (int v : ubs.elements())
            if (!p.leq(u, v)) least = false;
        if (least) return u;
    }
    return std::nullopt;
}

// Goodness straight from the definition: scan every subset of C for proper
// segments instead of trusting the prefix shortcut.
inline bool is_good(const Poset& p, const posetkit::Expander& g, const SubsetBits& c) {
    if (!oracle::is_chain(p, c)) return false;
    for (const SubsetBits& s : subsets_of(p, c)) {
        if (!oracle::is_prop_segment(p, s, c)) continue;
        SubsetBits gs = g.apply(p, s);
        if (!oracle::is_prop_segment(p, s, gs) || !oracle::is_segment(p, gs, c)) return false;
    }
    return true;
}

inline std::vector<std::pair<int, int>> transitive_reduction(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (!p.lt(i, j)) continue;
            bool direct = true;
            for (int k = 0; k < p.size(); ++k)
                if (p.lt(i, k) && p.lt(k, j)) direct = false;
            if (direct) out.emplace_back(i, j);
        }
    return out;
}

// Round-robin reaching-definitions: sweep the nodes in the given order until
// nothing changes. Monotone transfer from all-empty, so this is the least
// solution whatever the order.
inline posetkit::DataflowResult round_robin_rd(const posetkit::DataflowInstance& inst,
                                               const std::vector<int>& order) {
    int universe = static_cast<int>(inst.defs.size());
    size_t count = inst.nodes.size();
    posetkit::DataflowResult res;
    res.in.assign(count, SubsetBits(universe));
    res.out.assign(count, SubsetBits(universe));
    for (bool changed = true; changed;) {
        changed = false;
        for (int v : order) {
            size_t i = static_cast<size_t>(v);
            SubsetBits in(universe);
            for (int pr : inst.nodes[i].preds) in |= res.out[static_cast<size_t>(pr)];
            SubsetBits out = in;
            out -= inst.nodes[i].kill;
            out |= inst.nodes[i].gen;
            if (in != res.in[i] || out != res.out[i]) changed = true;
            res.in[i] = std::move(in);
            res.out[i] = std::move(out);
        }
    }
    return res;
}

} // namespace oracle

namespace corpus {

using posetkit::Poset;
using posetkit::Selector;
using posetkit::SelectStrategy;
using posetkit::SplitMix64;
using posetkit::SubsetBits;

inline const double kEdgeProbs[3] = {0.1, 0.3, 0.6};

// The k-th corpus poset: n cycles through 1..max_n, edge density through
// the three standard probabilities.
inline Poset poset_at(std::uint64_t k, int max_n) {
    posetkit::GenConfig cfg;
    cfg.n = static_cast<int>(k % static_cast<std::uint64_t>(max_n)) + 1;
    cfg.edge_prob = kEdgeProbs[k % 3];
    cfg.seed = 0x9E3779B97F4A7C15ULL ^ k;
    return posetkit::random_poset(cfg);
}

// A random override table over random subsets; values are uniform over all
// elements, so entries lie about being strict upper bounds roughly as often
// as not. base picks the strategy behind the table.
inline Selector table_selector(const Poset& p, std::uint64_t seed, SelectStrategy base) {
    SplitMix64 rng(seed);
    Selector::Overrides table;
    int n = p.size();
    if (n > 0) {
        int entries = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) + 2));
        for (int e = 0; e < entries; ++e) {
            SubsetBits s = oracle::from_mask(
                n, static_cast<unsigned>(rng.next() & ((1u << n) - 1)));
            int value = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            table[s] = value;
        }
    }
    std::uint64_t seed2 = rng.next();
    return Selector(base, seed2, std::move(table));
}

// A poset that is a valid CPO: a fresh bottom below everything else.
inline Poset bottomed_poset(std::uint64_t k, int max_n) {
    Poset base = poset_at(k, max_n - 1);
    std::vector<std::string> labels = {"bot"};
    for (const std::string& l : base.labels()) labels.push_back(l);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const std::string& l : base.labels()) pairs.emplace_back("bot", l);
    for (auto [i, j] : covering_pairs(base)) pairs.emplace_back(base.label(i), base.label(j));
    return Poset::from_pairs(labels, pairs, posetkit::ClosureMode::hasse);
}

// Inflationary by construction: h(x) is a uniform pick from {y : x <= y}.
inline std::vector<int> inflationary_h(const Poset& p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> h;
    for (int i = 0; i < p.size(); ++i) {
        std::vector<int> ups = p.up_set(i).elements();
        h.push_back(ups[rng.next_below(ups.size())]);
    }
    return h;
}

inline posetkit::DataflowInstance random_cfg(std::uint64_t k) {
    SplitMix64 rng(0xD1B54A32D192ED03ULL ^ k);
    posetkit::DataflowInstance inst;
    int defs = 1 + static_cast<int>(k % 12);
    int nodes = 1 + static_cast<int>((k / 12) % 8);
    for (int d = 0; d < defs; ++d) inst.defs.push_back("d" + std::to_string(d));
    for (int v = 0; v < nodes; ++v) {
        posetkit::DataflowNode node;
        node.name = "n" + std::to_string(v);
        for (int u = 0; u < nodes; ++u)
            if (rng.next_unit() < 0.3) node.preds.push_back(u);
        node.gen = SubsetBits(defs);
        node.kill = SubsetBits(defs);
        for (int d = 0; d < defs; ++d) {
            double roll = rng.next_unit();
            if (roll < 0.25)
                node.gen.set(d);
            else if (roll < 0.5)
                node.kill.set(d);
        }
        inst.nodes.push_back(std::move(node));
    }
    return inst;
}

} // namespace corpus

// The small named posets the worked examples use.
namespace fix {

using posetkit::ClosureMode;
using posetkit::Poset;
using posetkit::SubsetBits;

inline Poset empty() { return Poset::from_pairs({}, {}, ClosureMode::hasse); }

inline Poset singleton() { return Poset::from_pairs({"a"}, {}, ClosureMode::hasse); }

inline Poset antichain2() { return Poset::from_pairs({"a", "b"}, {}, ClosureMode::hasse); }

inline Poset chain3() {
    return Poset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, ClosureMode::hasse);
}

// bot < x, y < top with x, y incomparable
inline Poset diamond() {
    return Poset::from_pairs({"bot", "x", "y", "top"},
                             {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}},
                             ClosureMode::hasse);
}

inline Poset chain_n(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
    return Poset::from_pairs(labels, pairs, ClosureMode::hasse);
}

inline SubsetBits sb(const Poset& p, std::initializer_list<int> indices) {
    return SubsetBits::of(p.size(), indices);
}

} // namespace fix
