#pragma once

#include <string>
#include <vector>

namespace nameflow {

/// Split an identifier into lowercase tokens: underscores, lower-to-upper
/// boundaries, letter/digit boundaries, and acronym tails (HTTPServer ->
/// http, server) all separate tokens.
std::vector<std::string> tokenize_name(const std::string& name);

/// Lowercase tokens joined with '_'; the label identity used by the model.
std::string canonical_name(const std::string& name);

/// Join canonical tokens back into an identifier matching the style of
/// `like` (snake_case when it contains '_', camelCase otherwise).
std::string recase_like(const std::vector<std::string>& tokens, const std::string& like);

} // namespace nameflow
