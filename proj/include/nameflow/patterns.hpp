#pragma once

#include "nameflow/interproc.hpp"

#include <map>
#include <string>
#include <vector>

namespace nameflow {

enum class Direction { Forward, Backward };

/// One traversal step: the edge label used to reach the node and the node's
/// descriptor. The origin variable's own node is never a step.
struct PatternStep {
    EdgeLabel label;
    std::string desc;
    NodeKind kind = NodeKind::VarRef;
    int depth = 0; // interprocedural stack depth when recorded (tests only)
};

/// A bounded use-flow path anchored at one variable.
struct UsagePattern {
    const VarDecl* origin = nullptr;
    Direction dir = Direction::Forward;
    std::vector<PatternStep> steps;
    int multiplicity = 1; // distinct traversal paths producing this key

    /// 1-based node distance of each step from the origin.
    std::vector<int> dists() const {
        std::vector<int> d(steps.size());
        for (std::size_t i = 0; i < steps.size(); ++i) d[i] = static_cast<int>(i) + 1;
        return d;
    }
};

struct TraversalConfig {
    int max_length = 5;
    int max_virtuals = 5;
    bool interproc = true;
    int max_patterns_per_variable = 10000;
};

/// Canonical identity string; equal patterns have equal keys. Forward steps
/// render "label:desc", backward steps "desc:label" (flow order), joined
/// with '|' after the direction tag. See docs/patterns.md.
std::string pattern_key(const UsagePattern& p);

/// Rendered edge label as used in keys and features: "#argK" becomes
/// "argK"; "#return" keeps its hash; unlabeled renders empty.
std::string render_label(const EdgeLabel& label);

/// Collect the deduplicated forward and backward usage patterns of `v` by
/// depth-first traversal (call-stack discipline, 5-node/5-virtual caps).
/// Appends a BudgetExceeded diagnostic when the per-variable cap trips.
std::vector<UsagePattern> collect_patterns(const ProgramGraph& pg, const VarDecl* v,
                                           const TraversalConfig& cfg,
                                           std::vector<Diagnostic>* diags = nullptr);

/// Per-variable pattern sets for the whole program, variables in stable
/// (file, line, col) order.
struct PatternIndex {
    struct Entry {
        const VarDecl* var = nullptr;
        std::string var_id;
        std::vector<UsagePattern> patterns; // sorted by key
    };
    std::vector<Entry> entries;
    std::map<const VarDecl*, int> index_of;
    std::vector<Diagnostic> diagnostics;

    const Entry* find(const VarDecl* v) const {
        auto it = index_of.find(v);
        return it == index_of.end() ? nullptr : &entries[static_cast<std::size_t>(it->second)];
    }
};

PatternIndex collect_all_patterns(const ProgramGraph& pg,
                                  const std::vector<std::pair<const VarDecl*, std::string>>& vars,
                                  const TraversalConfig& cfg);

/// Newline-delimited {"var","dir","key","dist"} dump.
std::string patterns_to_records(const PatternIndex& index);

} // namespace nameflow
