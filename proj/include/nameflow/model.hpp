#pragma once

#include "nameflow/ast.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nameflow {

/// One (variable, features) observation. The label is the canonical
/// (lowercase, token-joined) form of the variable name; the display
/// spelling is tracked separately.
struct Observation {
    const VarDecl* var = nullptr;
    std::string label;    // canonical name
    std::string spelling; // original spelling
    std::vector<std::string> features;
};

class UnderflowError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class EmptyModelError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Prediction {
    std::string label; // canonical
    double score = 0;  // log-probability up to a constant
};

class UnlearnedModel;

/// Additive count tables for Naive Bayes over name labels. Learning is
/// counting; unlearning subtracts one observation's counts exactly.
class NameModel {
public:
    NameModel() = default;

    static NameModel learn(const std::vector<Observation>& corpus, double smoothing = 1.0);

    void add(const Observation& obs);

    /// Leave-one-out view with obs's counts subtracted; the base model is
    /// unchanged. Throws UnderflowError when obs was never learned.
    UnlearnedModel unlearn(const Observation& obs) const;

    /// Ranked top-k labels by log P(label) + sum log P(f | label) with
    /// add-one (Laplace) smoothing over the feature vocabulary. Ties break
    /// by canonical label ascending. Throws EmptyModelError when empty.
    std::vector<Prediction> predict(const std::vector<std::string>& features, int k) const;

    long total() const { return total_; }
    long label_count(const std::string& label) const;
    long feature_count(const std::string& feature, const std::string& label) const;
    long vocab_size() const { return static_cast<long>(feat_global_.size()); }
    double smoothing() const { return smoothing_; }

    /// Most frequent original spelling of a canonical label (ties by
    /// lexicographic order).
    std::string display(const std::string& label) const;

    bool counts_equal(const NameModel& other) const;

    /// Versioned count-table dump, entries sorted by (feature, label).
    std::string to_records() const;
    static NameModel from_records(const std::string& text);

    friend class UnlearnedModel;

private:
    double smoothing_ = 1.0;
    long total_ = 0;                                     // number of observations
    std::map<std::string, long> label_count_;            // observations per label
    std::map<std::string, long> label_feat_total_;       // feature occurrences per label
    std::map<std::string, std::map<std::string, long>> feat_label_; // feature -> label -> count
    std::map<std::string, long> feat_global_;            // feature -> total count (vocab)
    std::map<std::string, std::map<std::string, long>> spellings_;  // label -> spelling -> count
};

/// Overlay view of a NameModel with one observation subtracted; scoring is
/// identical to a model retrained without that observation.
class UnlearnedModel {
public:
    UnlearnedModel(const NameModel& base, const Observation& removed);

    std::vector<Prediction> predict(const std::vector<std::string>& features, int k) const;

    long total() const { return base_.total_ - 1; }
    long label_count(const std::string& label) const;
    long feature_count(const std::string& feature, const std::string& label) const;
    long vocab_size() const;

private:
    const NameModel& base_;
    std::string removed_label_;
    std::map<std::string, long> removed_feats_; // feature -> multiplicity
    long removed_feat_total_ = 0;
    long vocab_removed_ = 0; // features whose global count drops to zero
};

} // namespace nameflow
