#pragma once

#include "nameflow/ast.hpp"

#include <memory>
#include <string>

namespace nameflow {

/// Ingest a parse-tree interchange document (schema "ufg-ast/1", see
/// docs/interchange.md) produced by an external full-language parser.
/// Throws SchemaError for missing/ill-typed fields and UnsupportedConstruct
/// for node kinds outside the subset.
std::unique_ptr<SourceUnit> parse_interchange(const std::string& document);

} // namespace nameflow
