#pragma once

#include "posetkit/dataflow.hpp"
#include "posetkit/selector.hpp"

#include <string>
#include <vector>

namespace posetkit {

// JSON formats (see README for the full grammar):
//   poset     {"elements":[...], "closure":"hasse"|"full", "le":[[a,b],...]}
//   selector  {"strategy":..., "seed":..., "overrides":[{"subset":[...],"value":...},...]}
//   dataflow  {"defs":[...], "nodes":[{"name","preds","gen","kill"},...]}
//   h table   {"h":{"a":"b",...}}  (identity where an element is unlisted)
// Subsets are label lists: order-insensitive on read, sorted on write.

Poset parse_poset(const std::string& text);

/// Serializes with closure "hasse" and le = the covering pairs, so the text
/// stays small and parse(write(p)) == p exactly.
std::string write_poset(const Poset& p);

/// The Hasse diagram as a DOT digraph: node lines n0..n{k} in index order,
/// then the covering edges low -> high.
std::string to_dot(const Poset& p);

Selector parse_selector(const Poset& p, const std::string& text);
std::string write_selector(const Poset& p, const Selector& f);

DataflowInstance parse_dataflow(const std::string& text);
std::string write_dataflow(const DataflowInstance& inst);

std::vector<int> parse_h_table(const Poset& p, const std::string& text);
std::string write_h_table(const Poset& p, const std::vector<int>& h);

} // namespace posetkit
