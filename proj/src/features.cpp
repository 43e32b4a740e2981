#include "nameflow/features.hpp"

#include <cctype>
#include <set>

namespace nameflow {

namespace {

bool is_name_step(const PatternStep& s) {
    return s.kind == NodeKind::VarRef || s.kind == NodeKind::FieldRef;
}

/// Descriptor variants of a step for pair features. Variable names expand
/// to one variant per token (whole name kept when it is a single token);
/// with name features off they collapse to "var".
std::vector<std::string> desc_variants(const PatternStep& s, const FeatureConfig& cfg) {
    if (!is_name_step(s)) return {s.desc};
    if (!cfg.name_features) return {"var"};
    std::vector<std::string> tokens = tokenize_name(s.desc);
    if (tokens.size() <= 1) return {s.desc};
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) out.push_back("tok=" + t);
    return out;
}

std::string join_pair(const std::string& a, const std::string& label, const std::string& b) {
    if (label.empty()) return a + ":" + b;
    return a + ":" + label + ":" + b;
}

} // namespace

std::vector<std::string> encode_pattern(const UsagePattern& p, const FeatureConfig& cfg) {
    std::vector<std::string> out;
    if (p.steps.empty()) return out;
    bool forward = p.dir == Direction::Forward;

    // Leading step: the origin slot stays empty (its name is excluded).
    {
        const PatternStep& s = p.steps.front();
        std::string lbl = render_label(s.label);
        for (const std::string& d : desc_variants(s, cfg))
            out.push_back(lbl.empty() ? ":" + d : ":" + lbl + ":" + d);
    }

    // Adjacent pairs; backward pairs render in flow order (later node first).
    for (std::size_t i = 1; i < p.steps.size(); ++i) {
        const PatternStep& a = p.steps[i - 1];
        const PatternStep& b = p.steps[i];
        std::string lbl = render_label(b.label);
        for (const std::string& da : desc_variants(a, cfg)) {
            for (const std::string& db : desc_variants(b, cfg)) {
                if (forward)
                    out.push_back(join_pair(da, lbl, db));
                else
                    out.push_back(join_pair(db, lbl, da));
            }
        }
    }

    // Attribute features of the pattern's origin.
    if (!forward && p.steps.front().kind == NodeKind::Const) out.push_back("attr=const");
    for (const PatternStep& s : p.steps) {
        if (s.kind == NodeKind::Begin || s.kind == NodeKind::End) {
            out.push_back("attr=loop");
            break;
        }
    }
    for (const PatternStep& s : p.steps) {
        if (s.label.tag == EdgeLabel::Tag::Cond) {
            out.push_back("attr=cond");
            break;
        }
    }
    if (forward) {
        for (const PatternStep& s : p.steps) {
            if (s.kind == NodeKind::ArraySlot && s.label.tag == EdgeLabel::Tag::Arg &&
                s.label.arg_index == 0) {
                out.push_back("attr=index");
                break;
            }
        }
        if (p.steps.front().label.tag == EdgeLabel::Tag::This) out.push_back("attr=receiver");
        for (const PatternStep& s : p.steps) {
            if (s.kind == NodeKind::BinOp || s.kind == NodeKind::UnOp)
                out.push_back("op=" + s.desc);
            if (s.kind == NodeKind::Call && s.label.tag == EdgeLabel::Tag::Arg)
                out.push_back("arg=arg" + std::to_string(s.label.arg_index) + ":" + s.desc);
        }
        if (cfg.name_features) {
            for (const PatternStep& s : p.steps) {
                if (!is_name_step(s)) continue;
                for (const std::string& t : tokenize_name(s.desc)) out.push_back("asg=" + t);
            }
        }
    }
    if (cfg.type_features && p.origin && !p.origin->declared_type.empty())
        out.push_back("type=" + p.origin->declared_type);
    return out;
}

std::vector<std::string> encode_variable(const PatternIndex::Entry& entry,
                                         const FeatureConfig& cfg) {
    std::vector<std::string> out;
    for (const UsagePattern& p : entry.patterns) {
        std::vector<std::string> fs = encode_pattern(p, cfg);
        for (int rep = 0; rep < p.multiplicity; ++rep)
            out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

namespace {

/// All name tokens appearing in a feature key: split on non-alphanumerics,
/// then case-split each chunk.
std::set<std::string> feature_tokens(const std::string& key) {
    std::set<std::string> tokens;
    std::string chunk;
    auto flush = [&]() {
        if (chunk.empty()) return;
        for (const std::string& t : tokenize_name(chunk)) tokens.insert(t);
        chunk.clear();
    };
    for (char c : key) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            chunk += c;
        else
            flush();
    }
    flush();
    return tokens;
}

} // namespace

std::vector<std::string> strip_self_features(const std::vector<std::string>& features,
                                             const std::string& target_name) {
    std::set<std::string> own;
    for (const std::string& t : tokenize_name(target_name)) own.insert(t);
    std::vector<std::string> out;
    out.reserve(features.size());
    for (const std::string& f : features) {
        bool leaks = false;
        for (const std::string& t : feature_tokens(f)) {
            if (own.count(t)) {
                leaks = true;
                break;
            }
        }
        if (!leaks) out.push_back(f);
    }
    return out;
}

std::vector<std::string> strip_self_features(const std::vector<std::string>& features,
                                             const VarDecl& target) {
    return strip_self_features(features, target.name);
}

} // namespace nameflow
