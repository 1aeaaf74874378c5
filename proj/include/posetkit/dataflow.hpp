#pragma once

#include "posetkit/fixpoint.hpp"

#include <string>
#include <vector>

namespace posetkit {

struct DataflowNode {
    std::string name;
    std::vector<int> preds; // indices into the node list
    SubsetBits gen;         // over the definition universe
    SubsetBits kill;        // disjoint from gen

    bool operator==(const DataflowNode&) const = default;
};

/// A reaching-definitions problem: a control-flow graph with per-node
/// gen/kill sets over a shared universe of definitions.
struct DataflowInstance {
    std::vector<std::string> defs;
    std::vector<DataflowNode> nodes;

    /// Throws precondition_failed unless predecessor indices are in range,
    /// gen/kill are sized to the universe, and gen ∩ kill = ∅ per node.
    void validate() const;

    bool operator==(const DataflowInstance&) const = default;
};

struct DataflowResult {
    std::vector<SubsetBits> in;
    std::vector<SubsetBits> out;
};

/// Least solution of in[n] = ⋃ out[p] over preds, out[n] = gen[n] ∪
/// (in[n] ∖ kill[n]). The whole out-vector is one element of a product
/// lattice ordered pointwise by ⊆; one round, joined with the previous
/// state, is the inflationary map handed to the fixpoint engine.
DataflowResult reaching_definitions(const DataflowInstance& inst,
                                    long cap = kDefaultFixpointCap);

} // namespace posetkit
