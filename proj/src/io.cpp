#include "posetkit/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace posetkit {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::malformed_input, e.what());
    }
}

const json& member(const json& obj, const char* key, const char* owner) {
    if (!obj.is_object())
        throw Error(Errc::malformed_input, std::string(owner) + " must be a JSON object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw Error(Errc::malformed_input,
                    std::string(owner) + " is missing the '" + key + "' field");
    return *it;
}

std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) throw Error(Errc::malformed_input, std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Errc::malformed_input, std::string(what) + " must be an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const json& item : j) out.push_back(as_string(item, what));
    return out;
}

int label_index(const Poset& p, const std::string& label, const char* where) {
    std::optional<int> i = p.index_of(label);
    if (!i)
        throw Error(Errc::unknown_label,
                    std::string(where) + " names unknown element '" + label + "'");
    return *i;
}

SubsetBits subset_of_labels(const Poset& p, const json& j, const char* what) {
    SubsetBits s = p.empty_subset();
    for (const std::string& label : string_list(j, what)) s.set(label_index(p, label, what));
    return s;
}

std::vector<std::string> sorted_labels(const Poset& p, const SubsetBits& s) {
    if (s.universe_size() != p.size())
        throw Error(Errc::usage_error, "subset is bound to a different poset");
    std::vector<std::string> out;
    for (int i : s.elements()) out.push_back(p.label(i));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Poset parse_poset(const std::string& text) {
    json j = parse_json(text);
    std::vector<std::string> labels = string_list(member(j, "elements", "poset"), "'elements'");

    std::string closure = as_string(member(j, "closure", "poset"), "'closure'");
    ClosureMode mode;
    if (closure == "hasse")
        mode = ClosureMode::hasse;
    else if (closure == "full")
        mode = ClosureMode::full;
    else
        throw Error(Errc::malformed_input, "'closure' must be \"hasse\" or \"full\"");

    const json& le = member(j, "le", "poset");
    if (!le.is_array()) throw Error(Errc::malformed_input, "'le' must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(le.size());
    for (const json& item : le) {
        if (!item.is_array() || item.size() != 2)
            throw Error(Errc::malformed_input, "'le' entries must be [lower, higher] pairs");
        pairs.emplace_back(as_string(item[0], "'le' entry"), as_string(item[1], "'le' entry"));
    }
    return Poset::from_pairs(labels, pairs, mode);
}

std::string write_poset(const Poset& p) {
    json j;
    j["elements"] = p.labels();
    j["closure"] = "hasse";
    json le = json::array();
    for (auto [i, k] : covering_pairs(p)) le.push_back(json::array({p.label(i), p.label(k)}));
    j["le"] = std::move(le);
    return j.dump(2);
}

std::string to_dot(const Poset& p) {
    auto quoted = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        out.push_back('"');
        return out;
    };
    std::ostringstream out;
    out << "digraph poset {\n";
    for (int i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=" << quoted(p.label(i)) << "];\n";
    for (auto [i, k] : covering_pairs(p)) out << "  n" << i << " -> n" << k << ";\n";
    out << "}\n";
    return out.str();
}

Selector parse_selector(const Poset& p, const std::string& text) {
    json j = parse_json(text);
    std::string name = as_string(member(j, "strategy", "selector"), "'strategy'");
    SelectStrategy strategy;
    if (name == "min-strict-ub")
        strategy = SelectStrategy::min_strict_ub;
    else if (name == "max-strict-ub")
        strategy = SelectStrategy::max_strict_ub;
    else if (name == "seeded-random")
        strategy = SelectStrategy::seeded_random;
    else if (name == "none")
        strategy = SelectStrategy::none;
    else
        throw Error(Errc::unknown_strategy,
                    "unknown strategy '" + name +
                        "' (expected min-strict-ub, max-strict-ub, seeded-random, or none)");

    std::uint64_t seed = 0;
    if (j.is_object() && j.contains("seed")) {
        const json& s = j["seed"];
        if (!s.is_number_unsigned())
            throw Error(Errc::malformed_input, "'seed' must be an unsigned integer");
        seed = s.get<std::uint64_t>();
    }

    Selector::Overrides overrides;
    if (j.is_object() && j.contains("overrides")) {
        const json& list = j["overrides"];
        if (!list.is_array())
            throw Error(Errc::malformed_input, "'overrides' must be an array");
        for (const json& entry : list) {
            SubsetBits subset =
                subset_of_labels(p, member(entry, "subset", "override"), "override subset");
            int value =
                label_index(p, as_string(member(entry, "value", "override"), "'value'"),
                            "override value");
            if (!overrides.emplace(std::move(subset), value).second)
                throw Error(Errc::malformed_input, "two overrides for the same subset");
        }
    }
    return Selector(strategy, seed, std::move(overrides));
}

std::string write_selector(const Poset& p, const Selector& f) {
    json j;
    switch (f.strategy()) {
    case SelectStrategy::min_strict_ub: j["strategy"] = "min-strict-ub"; break;
    case SelectStrategy::max_strict_ub: j["strategy"] = "max-strict-ub"; break;
    case SelectStrategy::seeded_random:
        j["strategy"] = "seeded-random";
        j["seed"] = f.seed();
        break;
    case SelectStrategy::none: j["strategy"] = "none"; break;
    }
    if (!f.overrides().empty()) {
        std::vector<std::pair<std::vector<std::string>, std::string>> rows;
        for (const auto& [subset, value] : f.overrides())
            rows.emplace_back(sorted_labels(p, subset), p.label(value));
        std::sort(rows.begin(), rows.end());
        json list = json::array();
        for (const auto& [subset, value] : rows)
            list.push_back(json{{"subset", subset}, {"value", value}});
        j["overrides"] = std::move(list);
    }
    return j.dump(2);
}

DataflowInstance parse_dataflow(const std::string& text) {
    json j = parse_json(text);
    DataflowInstance inst;
    inst.defs = string_list(member(j, "defs", "dataflow instance"), "'defs'");
    for (size_t i = 0; i < inst.defs.size(); ++i)
        for (size_t k = i + 1; k < inst.defs.size(); ++k)
            if (inst.defs[i] == inst.defs[k])
                throw Error(Errc::duplicate_label, "definition '" + inst.defs[i] + "' listed twice");

    const json& nodes = member(j, "nodes", "dataflow instance");
    if (!nodes.is_array()) throw Error(Errc::malformed_input, "'nodes' must be an array");

    std::vector<std::string> names;
    for (const json& node : nodes) {
        std::string name = as_string(member(node, "name", "node"), "'name'");
        if (std::find(names.begin(), names.end(), name) != names.end())
            throw Error(Errc::duplicate_label, "node '" + name + "' listed twice");
        names.push_back(std::move(name));
    }
    auto def_bits = [&](const json& field, const char* what) {
        SubsetBits s(static_cast<int>(inst.defs.size()));
        for (const std::string& label : string_list(field, what)) {
            auto it = std::find(inst.defs.begin(), inst.defs.end(), label);
            if (it == inst.defs.end())
                throw Error(Errc::unknown_label,
                            std::string(what) + " names unknown definition '" + label + "'");
            s.set(static_cast<int>(it - inst.defs.begin()));
        }
        return s;
    };
    for (size_t i = 0; i < names.size(); ++i) {
        const json& node = nodes[i];
        DataflowNode out;
        out.name = names[i];
        for (const std::string& pred : string_list(member(node, "preds", "node"), "'preds'")) {
            auto it = std::find(names.begin(), names.end(), pred);
            if (it == names.end())
                throw Error(Errc::unknown_label,
                            "node '" + out.name + "' has unknown predecessor '" + pred + "'");
            out.preds.push_back(static_cast<int>(it - names.begin()));
        }
        out.gen = def_bits(member(node, "gen", "node"), "'gen'");
        out.kill = def_bits(member(node, "kill", "node"), "'kill'");
        inst.nodes.push_back(std::move(out));
    }
    inst.validate();
    return inst;
}

std::string write_dataflow(const DataflowInstance& inst) {
    json j;
    j["defs"] = inst.defs;
    auto def_labels = [&](const SubsetBits& s) {
        std::vector<std::string> out;
        for (int i : s.elements()) out.push_back(inst.defs[static_cast<size_t>(i)]);
        std::sort(out.begin(), out.end());
        return out;
    };
    json nodes = json::array();
    for (const DataflowNode& node : inst.nodes) {
        std::vector<std::string> preds;
        for (int pr : node.preds) preds.push_back(inst.nodes[static_cast<size_t>(pr)].name);
        nodes.push_back(json{{"name", node.name},
                             {"preds", preds},
                             {"gen", def_labels(node.gen)},
                             {"kill", def_labels(node.kill)}});
    }
    j["nodes"] = std::move(nodes);
    return j.dump(2);
}

std::vector<int> parse_h_table(const Poset& p, const std::string& text) {
    json j = parse_json(text);
    const json& table = member(j, "h", "h table");
    if (!table.is_object()) throw Error(Errc::malformed_input, "'h' must be an object");
    std::vector<int> h(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) h[static_cast<size_t>(i)] = i;
    for (const auto& [key, value] : table.items()) {
        int from = label_index(p, key, "h table");
        int to = label_index(p, as_string(value, "h table value"), "h table");
        h[static_cast<size_t>(from)] = to;
    }
    return h;
}

std::string write_h_table(const Poset& p, const std::vector<int>& h) {
    if (h.size() != static_cast<size_t>(p.size()))
        throw Error(Errc::usage_error, "h table size does not match the poset");
    json table = json::object();
    for (int i = 0; i < p.size(); ++i) {
        int to = h[static_cast<size_t>(i)];
        if (to < 0 || to >= p.size())
            throw Error(Errc::usage_error, "h table entry out of range");
        table[p.label(i)] = p.label(to);
    }
    json j;
    j["h"] = std::move(table);
    return j.dump(2);
}

} // namespace posetkit
