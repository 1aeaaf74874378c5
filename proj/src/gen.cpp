#include "posetkit/gen.hpp"

#include "posetkit/errors.hpp"

#include <string>

namespace posetkit {

Poset random_poset(const GenConfig& cfg) {
    if (cfg.n < 0) throw Error(Errc::precondition_failed, "element count must be nonnegative");
    if (!(cfg.edge_prob >= 0.0 && cfg.edge_prob <= 1.0))
        throw Error(Errc::precondition_failed, "edge_prob must lie in [0, 1]");

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) labels.push_back("e" + std::to_string(i));

    SplitMix64 rng(cfg.seed);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < cfg.n; ++i)
        for (int j = i + 1; j < cfg.n; ++j)
            if (rng.next_unit() < cfg.edge_prob)
                edges.emplace_back(labels[static_cast<size_t>(i)],
                                   labels[static_cast<size_t>(j)]);

    return Poset::from_pairs(labels, edges, ClosureMode::hasse);
}

} // namespace posetkit
