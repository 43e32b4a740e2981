#pragma once

#include "nameflow/ufg.hpp"

#include <map>
#include <string>
#include <vector>

namespace nameflow {

/// One call node awaiting callee resolution.
struct CallSite {
    int method_index = -1; // owning graph
    NodeId node = -1;
    std::string callee;
    int arity = 0;
    std::string receiver_type; // static type; "" when unknown/external
};

/// Subtype relation harvested from `extends` clauses.
struct Hierarchy {
    std::map<std::string, std::string> super_of; // type -> direct superclass
    std::map<std::string, std::vector<std::string>> subs_of;

    void add(const std::string& type, const std::string& superclass);
    /// Depth of `type` below `ancestor` (0 when equal), or -1 when unrelated.
    int depth_below(const std::string& type, const std::string& ancestor) const;
    /// `type` and every transitive subtype, depth-first.
    std::vector<std::string> self_and_subtypes(const std::string& type) const;
};

/// Candidate callees for `site`: methods with matching name+arity on the
/// receiver's static type or its subtypes, deepest subtype first (ties by
/// type name), truncated to max_virtuals. Unknown externals resolve empty.
std::vector<int> resolve_callees(const CallSite& site, const Hierarchy& hierarchy,
                                 const std::map<std::string, std::map<std::string, int>>& methods,
                                 int max_virtuals = 5);

/// Whole-program graph: per-method UFGs plus call bindings; interprocedural
/// edges are materialized lazily during traversal, never stored.
struct ProgramGraph {
    std::vector<Ufg> ufgs;                       // index = method id
    std::vector<std::string> method_paths;       // source file per method
    std::map<std::string, int> method_index;     // "path#Type.name/arity" -> index
    Hierarchy hierarchy;
    // (method, call node) -> callee method indices, most specific first
    std::map<std::pair<int, NodeId>, std::vector<int>> call_bindings;
    // (method, param position) -> param node
    std::vector<std::vector<NodeId>> param_nodes;
    // method -> call sites that bind to it (callers), deterministic order
    std::map<int, std::vector<std::pair<int, NodeId>>> callers;
    std::vector<Diagnostic> diagnostics;

    const Ufg& graph(int m) const { return ufgs[static_cast<std::size_t>(m)]; }
    int methods() const { return static_cast<int>(ufgs.size()); }

    const std::vector<int>* bindings_for(int method, NodeId call) const {
        auto it = call_bindings.find({method, call});
        return it == call_bindings.end() ? nullptr : &it->second;
    }
};

/// Build the ProgramGraph: collect call sites from the lowered graphs,
/// resolve them against the hierarchy, record caller links. Bindings whose
/// callee arity disagrees with the call (possible only with corrupt input)
/// are dropped with an ArityMismatch diagnostic.
ProgramGraph link(std::vector<Ufg> ufgs, std::vector<std::string> method_paths,
                  const Hierarchy& hierarchy, int max_virtuals = 5);

} // namespace nameflow
