#pragma once

#include "nameflow/patterns.hpp"
#include "nameflow/tokens.hpp"

#include <string>
#include <vector>

namespace nameflow {

struct FeatureConfig {
    bool name_features = true; // variable-name tokens in pairs + assigned-name attributes
    bool type_features = true; // declared-type attribute
};

/// Convert one usage pattern into model features: one feature per adjacent
/// step pair ("descA:label:descB", label omitted when unlabeled; backward
/// pairs rendered in flow order), a leading-step feature with an empty
/// origin slot, and the attribute features that hold for the pattern.
std::vector<std::string> encode_pattern(const UsagePattern& p, const FeatureConfig& cfg = {});

/// Feature multiset of a variable: all its patterns encoded, repeated by
/// pattern multiplicity, in deterministic (key-sorted) order.
std::vector<std::string> encode_variable(const PatternIndex::Entry& entry,
                                         const FeatureConfig& cfg = {});

/// Remove every feature that contains any token of the target's own name as
/// a delimited token (hints of the name must not leak into its prediction).
std::vector<std::string> strip_self_features(const std::vector<std::string>& features,
                                             const VarDecl& target);
std::vector<std::string> strip_self_features(const std::vector<std::string>& features,
                                             const std::string& target_name);

} // namespace nameflow
