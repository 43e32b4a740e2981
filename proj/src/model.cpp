#include "nameflow/model.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nameflow {

NameModel NameModel::learn(const std::vector<Observation>& corpus, double smoothing) {
    NameModel m;
    m.smoothing_ = smoothing;
    for (const Observation& obs : corpus) m.add(obs);
    return m;
}

void NameModel::add(const Observation& obs) {
    ++total_;
    ++label_count_[obs.label];
    ++spellings_[obs.label][obs.spelling.empty() ? obs.label : obs.spelling];
    label_feat_total_[obs.label] += static_cast<long>(obs.features.size());
    for (const std::string& f : obs.features) {
        ++feat_label_[f][obs.label];
        ++feat_global_[f];
    }
}

long NameModel::label_count(const std::string& label) const {
    auto it = label_count_.find(label);
    return it == label_count_.end() ? 0 : it->second;
}

long NameModel::feature_count(const std::string& feature, const std::string& label) const {
    auto it = feat_label_.find(feature);
    if (it == feat_label_.end()) return 0;
    auto jt = it->second.find(label);
    return jt == it->second.end() ? 0 : jt->second;
}

std::string NameModel::display(const std::string& label) const {
    auto it = spellings_.find(label);
    if (it == spellings_.end()) return label;
    long best = -1;
    std::string spelling = label;
    for (const auto& [sp, n] : it->second) {
        if (n > best) {
            best = n;
            spelling = sp;
        }
    }
    return spelling;
}

namespace {

/// Shared scorer: the model interface is a handful of count accessors so
/// the base model and the unlearned overlay rank identically.
template <typename Counts>
std::vector<Prediction> score_all(const Counts& counts,
                                  const std::map<std::string, long>& label_table,
                                  double alpha,
                                  const std::vector<std::string>& features, int k) {
    long total = counts.total();
    if (total <= 0) throw EmptyModelError("predict on empty model");
    double vocab = static_cast<double>(counts.vocab_size());

    std::vector<Prediction> out;
    for (const auto& [label, base_n] : label_table) {
        long n = counts.label_count(label);
        if (n <= 0) continue;
        double score = std::log(static_cast<double>(n) / static_cast<double>(total));
        double denom = std::log(static_cast<double>(counts.label_feat_total(label)) +
                                alpha * vocab);
        for (const std::string& f : features) {
            long c = counts.feature_count(f, label);
            score += std::log(static_cast<double>(c) + alpha) - denom;
        }
        out.push_back(Prediction{label, score});
        (void)base_n;
    }
    if (out.empty()) throw EmptyModelError("no labels with observations");
    std::stable_sort(out.begin(), out.end(), [](const Prediction& a, const Prediction& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.label < b.label;
    });
    if (k >= 0 && static_cast<int>(out.size()) > k) out.resize(static_cast<std::size_t>(k));
    return out;
}

} // namespace

std::vector<Prediction> NameModel::predict(const std::vector<std::string>& features,
                                           int k) const {
    struct Counts {
        const NameModel& m;
        long total() const { return m.total_; }
        long vocab_size() const { return m.vocab_size(); }
        long label_count(const std::string& l) const { return m.label_count(l); }
        long label_feat_total(const std::string& l) const {
            auto it = m.label_feat_total_.find(l);
            return it == m.label_feat_total_.end() ? 0 : it->second;
        }
        long feature_count(const std::string& f, const std::string& l) const {
            return m.feature_count(f, l);
        }
    };
    return score_all(Counts{*this}, label_count_, smoothing_, features, k);
}

UnlearnedModel NameModel::unlearn(const Observation& obs) const {
    return UnlearnedModel(*this, obs);
}

UnlearnedModel::UnlearnedModel(const NameModel& base, const Observation& removed)
    : base_(base), removed_label_(removed.label) {
    if (base.label_count(removed.label) < 1)
        throw UnderflowError("unlearn: label '" + removed.label + "' has no observations");
    for (const std::string& f : removed.features) ++removed_feats_[f];
    removed_feat_total_ = static_cast<long>(removed.features.size());
    for (const auto& [f, n] : removed_feats_) {
        auto it = base.feat_global_.find(f);
        long have = it == base.feat_global_.end() ? 0 : it->second;
        if (have < n)
            throw UnderflowError("unlearn: feature counts underflow for '" + f + "'");
        if (have == n) ++vocab_removed_;
        // Per-label count must also cover the removal.
        if (base.feature_count(f, removed.label) < n)
            throw UnderflowError("unlearn: feature '" + f + "' not counted for label '" +
                                 removed.label + "'");
    }
    auto lt = base.label_feat_total_.find(removed.label);
    long have_total = lt == base.label_feat_total_.end() ? 0 : lt->second;
    if (have_total < removed_feat_total_)
        throw UnderflowError("unlearn: label feature total underflow");
}

long UnlearnedModel::label_count(const std::string& label) const {
    long n = base_.label_count(label);
    if (label == removed_label_) --n;
    return n;
}

long UnlearnedModel::feature_count(const std::string& feature, const std::string& label) const {
    long n = base_.feature_count(feature, label);
    if (label == removed_label_) {
        auto it = removed_feats_.find(feature);
        if (it != removed_feats_.end()) n -= it->second;
    }
    return n;
}

long UnlearnedModel::vocab_size() const { return base_.vocab_size() - vocab_removed_; }

std::vector<Prediction> UnlearnedModel::predict(const std::vector<std::string>& features,
                                                int k) const {
    struct Counts {
        const UnlearnedModel& v;
        long total() const { return v.total(); }
        long vocab_size() const { return v.vocab_size(); }
        long label_count(const std::string& l) const { return v.label_count(l); }
        long label_feat_total(const std::string& l) const {
            auto it = v.base_.label_feat_total_.find(l);
            long n = it == v.base_.label_feat_total_.end() ? 0 : it->second;
            if (l == v.removed_label_) n -= v.removed_feat_total_;
            return n;
        }
        long feature_count(const std::string& f, const std::string& l) const {
            return v.feature_count(f, l);
        }
    };
    return score_all(Counts{*this}, base_.label_count_, base_.smoothing_, features, k);
}

bool NameModel::counts_equal(const NameModel& other) const {
    auto nonzero = [](const std::map<std::string, long>& m) {
        std::map<std::string, long> out;
        for (const auto& [k, v] : m)
            if (v != 0) out.emplace(k, v);
        return out;
    };
    if (total_ != other.total_) return false;
    if (nonzero(label_count_) != nonzero(other.label_count_)) return false;
    if (nonzero(label_feat_total_) != nonzero(other.label_feat_total_)) return false;
    if (nonzero(feat_global_) != nonzero(other.feat_global_)) return false;
    auto flatten = [](const std::map<std::string, std::map<std::string, long>>& m) {
        std::map<std::pair<std::string, std::string>, long> out;
        for (const auto& [f, labels] : m)
            for (const auto& [l, n] : labels)
                if (n != 0) out.emplace(std::make_pair(f, l), n);
        return out;
    };
    return flatten(feat_label_) == flatten(other.feat_label_);
}

std::string NameModel::to_records() const {
    std::ostringstream os;
    nlohmann::ordered_json header;
    header["schema"] = "ufg-nb/1";
    header["smoothing"] = smoothing_;
    header["total"] = total_;
    os << header.dump() << '\n';
    for (const auto& [label, n] : label_count_) {
        nlohmann::ordered_json rec;
        rec["label"] = label;
        rec["count"] = n;
        rec["display"] = display(label);
        os << rec.dump() << '\n';
    }
    // feat_label_ is an ordered map keyed by feature, inner by label.
    for (const auto& [feature, labels] : feat_label_) {
        for (const auto& [label, n] : labels) {
            if (n == 0) continue;
            nlohmann::ordered_json rec;
            rec["feature"] = feature;
            rec["label"] = label;
            rec["count"] = n;
            os << rec.dump() << '\n';
        }
    }
    return os.str();
}

NameModel NameModel::from_records(const std::string& text) {
    NameModel m;
    std::istringstream is(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line);
        if (!saw_header) {
            if (!rec.contains("schema") || rec["schema"] != "ufg-nb/1")
                throw SchemaError("schema", "expected \"ufg-nb/1\"");
            m.smoothing_ = rec.value("smoothing", 1.0);
            m.total_ = rec.value("total", 0L);
            saw_header = true;
            continue;
        }
        if (rec.contains("feature")) {
            std::string f = rec["feature"].get<std::string>();
            std::string l = rec["label"].get<std::string>();
            long n = rec["count"].get<long>();
            m.feat_label_[f][l] = n;
            m.feat_global_[f] += n;
            m.label_feat_total_[l] += n;
        } else if (rec.contains("label")) {
            std::string l = rec["label"].get<std::string>();
            m.label_count_[l] = rec["count"].get<long>();
            if (rec.contains("display")) m.spellings_[l][rec["display"].get<std::string>()] = 1;
        }
    }
    if (!saw_header) throw SchemaError("schema", "empty model file");
    return m;
}

} // namespace nameflow
