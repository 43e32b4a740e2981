#pragma once

#include "nameflow/ast.hpp"

#include <map>
#include <vector>

namespace nameflow {

/// Where one variable is mentioned: declaration, read, or write.
struct Occurrence {
    SourceLoc loc;
    enum class Kind { Decl, Read, Write } kind;
    const MethodDecl* method = nullptr; // null for field declarations
};

/// Per-unit result of resolve_names: bindings live on the Expr nodes; this
/// carries the side tables needed by the patch writer and stats command.
struct ResolutionIndex {
    std::map<const VarDecl*, std::vector<Occurrence>> occurrences;
    std::vector<Diagnostic> diagnostics;

    /// Declarations in deterministic order (file position).
    std::vector<const VarDecl*> ordered_decls;
};

/// Bind every identifier use in `unit` to its declaration, innermost scope
/// first (locals shadow params shadow fields). Unresolved uses become
/// diagnostics, never errors. Safe to call once per unit.
ResolutionIndex resolve_names(SourceUnit& unit);

} // namespace nameflow
