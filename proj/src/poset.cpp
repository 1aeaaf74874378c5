#include "posetkit/poset.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace posetkit {

namespace {

// BFS path from u to v over the directed edges the caller supplied; used
// only to produce a readable witness once a cycle is already known to exist.
std::vector<int> find_path(const std::vector<std::vector<int>>& adj, int u, int v) {
    std::vector<int> parent(adj.size(), -1);
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> queue{u};
    seen[static_cast<std::size_t>(u)] = 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == v) break;
        for (int next : adj[static_cast<std::size_t>(cur)]) {
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = 1;
                parent[static_cast<std::size_t>(next)] = cur;
                queue.push_back(next);
            }
        }
    }
    std::vector<int> path;
    for (int cur = v; cur != -1; cur = parent[static_cast<std::size_t>(cur)]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string join_labels(const std::vector<std::string>& labels, const std::vector<int>& path) {
    std::string out;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (k > 0) out += " <= ";
        out += labels[static_cast<std::size_t>(path[k])];
    }
    return out;
}

} // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<SubsetBits> up)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), up_(std::move(up)) {
    down_.assign(static_cast<std::size_t>(n_), SubsetBits(n_));
    for (int i = 0; i < n_; ++i) {
        up_[static_cast<std::size_t>(i)].for_each(
            [&](int j) { down_[static_cast<std::size_t>(j)].set(i); });
    }
}

std::optional<int> Poset::index_of(std::string_view label) const {
    for (int i = 0; i < n_; ++i) {
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    }
    return std::nullopt;
}

Poset Poset::from_pairs(const std::vector<std::string>& labels,
                        const std::vector<std::pair<std::string, std::string>>& pairs,
                        ClosureMode mode) {
    const int n = static_cast<int>(labels.size());

    std::unordered_map<std::string_view, int> index;
    index.reserve(labels.size());
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(labels[static_cast<std::size_t>(i)], i).second) {
            throw Error(Errc::duplicate_label,
                        "duplicate label '" + labels[static_cast<std::size_t>(i)] + "'");
        }
    }

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [lo, hi] : pairs) {
        auto it_lo = index.find(lo);
        if (it_lo == index.end()) throw Error(Errc::unknown_label, "unknown label '" + lo + "'");
        auto it_hi = index.find(hi);
        if (it_hi == index.end()) throw Error(Errc::unknown_label, "unknown label '" + hi + "'");
        adj[static_cast<std::size_t>(it_lo->second)].push_back(it_hi->second);
    }

    std::vector<SubsetBits> up(static_cast<std::size_t>(n), SubsetBits(n));
    for (int i = 0; i < n; ++i) {
        up[static_cast<std::size_t>(i)].set(i);
        for (int j : adj[static_cast<std::size_t>(i)]) up[static_cast<std::size_t>(i)].set(j);
    }

    if (mode == ClosureMode::hasse) {
        // Warshall transitive closure on the bit rows.
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                if (i != k && up[static_cast<std::size_t>(i)].test(k)) {
                    up[static_cast<std::size_t>(i)] |= up[static_cast<std::size_t>(k)];
                }
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (up[static_cast<std::size_t>(i)].test(j) && up[static_cast<std::size_t>(j)].test(i)) {
                std::vector<int> cycle = find_path(adj, i, j);
                std::vector<int> back = find_path(adj, j, i);
                cycle.insert(cycle.end(), back.begin() + (back.empty() ? 0 : 1), back.end());
                throw Error(Errc::cycle_detected,
                            "antisymmetry violated: " + join_labels(labels, cycle));
            }
        }
    }

    if (mode == ClosureMode::full) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j == i || !up[static_cast<std::size_t>(i)].test(j)) continue;
                // i <= j: everything above j must already be above i.
                if (!up[static_cast<std::size_t>(j)].is_subset_of(up[static_cast<std::size_t>(i)])) {
                    SubsetBits missing =
                        up[static_cast<std::size_t>(j)] - up[static_cast<std::size_t>(i)];
                    int k = missing.min_element();
                    throw Error(Errc::not_transitive,
                                "transitivity violated: " + labels[static_cast<std::size_t>(i)] +
                                    " <= " + labels[static_cast<std::size_t>(j)] + " and " +
                                    labels[static_cast<std::size_t>(j)] + " <= " +
                                    labels[static_cast<std::size_t>(k)] + " but not " +
                                    labels[static_cast<std::size_t>(i)] + " <= " +
                                    labels[static_cast<std::size_t>(k)]);
                }
            }
        }
    }

    return Poset(labels, std::move(up));
}

bool is_chain(const Poset& p, const SubsetBits& s) {
    if (s.universe_size() != p.size()) {
        throw Error(Errc::usage_error, "subset not bound to this poset");
    }
    bool ok = true;
    s.for_each([&](int i) {
        if (!ok) return;
        SubsetBits comparable = p.up_set(i) | p.down_set(i);
        if (!s.is_subset_of(comparable)) ok = false;
    });
    return ok;
}

bool is_segment(const Poset& p, const SubsetBits& s, const SubsetBits& c) {
    if (s.universe_size() != p.size() || c.universe_size() != p.size()) {
        throw Error(Errc::usage_error, "subset not bound to this poset");
    }
    if (!s.is_subset_of(c)) return false;
    bool ok = true;
    s.for_each([&](int y) {
        if (!ok) return;
        // members of C below y must lie in S
        if (!(p.down_set(y) & c).is_subset_of(s)) ok = false;
    });
    return ok;
}

bool is_prop_segment(const Poset& p, const SubsetBits& s, const SubsetBits& c) {
    return s != c && is_segment(p, s, c);
}

SubsetBits strict_upper_bounds(const Poset& p, const SubsetBits& c) {
    if (c.universe_size() != p.size()) {
        throw Error(Errc::usage_error, "subset not bound to this poset");
    }
    SubsetBits acc = p.full_subset();
    c.for_each([&](int i) { acc &= p.up_set(i).without(i); });
    return acc;
}

SubsetBits upper_bounds(const Poset& p, const SubsetBits& c) {
    if (c.universe_size() != p.size()) {
        throw Error(Errc::usage_error, "subset not bound to this poset");
    }
    SubsetBits acc = p.full_subset();
    c.for_each([&](int i) { acc &= p.up_set(i); });
    return acc;
}

SubsetBits maximal_elements(const Poset& p) {
    SubsetBits out(p.size());
    for (int i = 0; i < p.size(); ++i) {
        if (p.up_set(i).count() == 1) out.set(i);
    }
    return out;
}

std::optional<int> sup_of(const Poset& p, const SubsetBits& c) {
    SubsetBits ubs = upper_bounds(p, c);
    std::optional<int> least;
    ubs.for_each([&](int u) {
        if (!least && ubs.is_subset_of(p.up_set(u))) least = u;
    });
    return least;
}

std::vector<int> chain_in_order(const Poset& p, const SubsetBits& c) {
    std::vector<int> order = c.elements();
    std::sort(order.begin(), order.end(), [&](int a, int b) { return p.lt(a, b); });
    return order;
}

std::vector<std::pair<int, int>> covering_pairs(const Poset& p) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p.size(); ++j) {
            if (!p.lt(i, j)) continue;
            // {k : i <= k <= j} is exactly {i, j} iff nothing sits between.
            if ((p.up_set(i) & p.down_set(j)).count() == 2) covers.emplace_back(i, j);
        }
    }
    return covers;
}

} // namespace posetkit
