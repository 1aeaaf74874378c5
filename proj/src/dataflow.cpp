#include "posetkit/dataflow.hpp"

namespace posetkit {

void DataflowInstance::validate() const {
    int universe = static_cast<int>(defs.size());
    int count = static_cast<int>(nodes.size());
    for (const DataflowNode& node : nodes) {
        for (int pr : node.preds)
            if (pr < 0 || pr >= count)
                throw Error(Errc::precondition_failed,
                            "node '" + node.name + "' has predecessor index " +
                                std::to_string(pr) + " out of range");
        if (node.gen.universe_size() != universe || node.kill.universe_size() != universe)
            throw Error(Errc::precondition_failed,
                        "node '" + node.name + "' has gen/kill outside the definition universe");
        if (node.gen.intersects(node.kill))
            throw Error(Errc::precondition_failed,
                        "node '" + node.name + "' generates a definition it also kills");
    }
}

DataflowResult reaching_definitions(const DataflowInstance& inst, long cap) {
    inst.validate();
    using State = std::vector<SubsetBits>;
    int universe = static_cast<int>(inst.defs.size());
    size_t count = inst.nodes.size();

    AbstractCpo<State> cpo;
    cpo.bottom = State(count, SubsetBits(universe));
    cpo.equal = [](const State& a, const State& b) { return a == b; };
    cpo.leq = [](const State& a, const State& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_subset_of(b[i])) return false;
        return true;
    };

    auto flow_in = [&](const State& outs, size_t i) {
        SubsetBits in(universe);
        for (int pr : inst.nodes[i].preds) in |= outs[static_cast<size_t>(pr)];
        return in;
    };
    auto round = [&](const State& outs) {
        State next = outs; // join with the previous state keeps the map inflationary
        for (size_t i = 0; i < count; ++i) {
            SubsetBits through = flow_in(outs, i);
            through -= inst.nodes[i].kill;
            next[i] |= inst.nodes[i].gen;
            next[i] |= through;
        }
        return next;
    };

    FixpointReport<State> rep = bw_fixpoint(cpo, round, cap);
    DataflowResult res;
    res.out = rep.fixpoint;
    res.in.reserve(count);
    for (size_t i = 0; i < count; ++i) res.in.push_back(flow_in(res.out, i));
    return res;
}

} // namespace posetkit
