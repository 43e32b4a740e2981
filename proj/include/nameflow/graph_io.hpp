#pragma once

#include "nameflow/ufg.hpp"

#include <string>

namespace nameflow {

/// Serialize a graph to newline-delimited records:
///   {"schema":"ufg/1","method":...}
///   {"n":id,"k":kind,"l":label,"loc":{...}}        one per node
///   {"e":[src,dst],"l":label}                       one per edge
/// Nodes ordered by id, edges by (src, dst, label).
std::string graph_to_records(const Ufg& g, const std::string& path = "");

/// Inverse of graph_to_records. Declaration bindings are not reconstructed
/// (decl ids are kept as opaque strings in the records).
Ufg records_to_graph(const std::string& text);

/// Structural equality: same node kinds/labels/ids and the same edge set.
bool graphs_isomorphic(const Ufg& a, const Ufg& b);

} // namespace nameflow
