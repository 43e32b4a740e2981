#include "nameflow/patterns.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace nameflow {

std::string render_label(const EdgeLabel& label) {
    if (label.tag == EdgeLabel::Tag::Arg) return "arg" + std::to_string(label.arg_index);
    return label.str();
}

std::string pattern_key(const UsagePattern& p) {
    std::string key = p.dir == Direction::Forward ? "F" : "B";
    for (const PatternStep& s : p.steps) {
        std::string lbl = render_label(s.label);
        key += '|';
        if (p.dir == Direction::Forward) {
            if (!lbl.empty()) key += lbl + ":";
            key += s.desc;
        } else {
            key += s.desc;
            if (!lbl.empty()) key += ":" + lbl;
        }
    }
    return key;
}

namespace {

/// Shared traversal machinery. One instance per (variable, direction).
class Tracer {
public:
    Tracer(const ProgramGraph& pg, const VarDecl* origin, Direction dir,
           const TraversalConfig& cfg, std::map<std::string, UsagePattern>& sink, int& emitted,
           bool& budget_hit)
        : pg_(pg), origin_(origin), dir_(dir), cfg_(cfg), sink_(sink), emitted_(emitted),
          budget_hit_(budget_hit) {}

    void trace_from(int method, NodeId anchor) {
        steps_.clear();
        stack_.clear();
        walk_from(method, anchor);
    }

private:
    const ProgramGraph& pg_;
    const VarDecl* origin_;
    Direction dir_;
    const TraversalConfig& cfg_;
    std::map<std::string, UsagePattern>& sink_;
    int& emitted_;
    bool& budget_hit_;

    std::vector<PatternStep> steps_;
    std::vector<std::pair<int, NodeId>> stack_; // call sites (method, call node)

    static constexpr int kMaxSilentHops = 32; // waypoint/elision chain guard

    bool over_budget() const { return emitted_ >= cfg_.max_patterns_per_variable; }

    void emit() {
        if (steps_.empty() || over_budget()) {
            if (over_budget()) budget_hit_ = true;
            return;
        }
        ++emitted_;
        UsagePattern p;
        p.origin = origin_;
        p.dir = dir_;
        p.steps = steps_;
        std::string key = pattern_key(p);
        auto [it, inserted] = sink_.try_emplace(std::move(key), std::move(p));
        if (!inserted) ++it->second.multiplicity;
    }

    const UfgNode& node(int m, NodeId id) const { return pg_.graph(m).node(id); }

    /// Defining in-edge of a node is "#return" (call-result binding)?
    bool is_call_result_var(int m, NodeId id) const {
        const UfgNode& n = node(m, id);
        if (n.kind != NodeKind::VarRef && n.kind != NodeKind::FieldRef) return false;
        for (const UfgEdge* e : pg_.graph(m).in_edges(id))
            if (e->label.tag == EdgeLabel::Tag::Ret) return true;
        return false;
    }

    /// Receiving node of a call site: target of its #return out-edge, or -1.
    NodeId receiver_of(int m, NodeId call) const {
        for (const UfgEdge* e : pg_.graph(m).out_edges(call))
            if (e->label.tag == EdgeLabel::Tag::Ret) return e->dst;
        return -1;
    }

    int param_position(int m, NodeId id) const {
        const auto& params = pg_.param_nodes[static_cast<std::size_t>(m)];
        for (std::size_t k = 0; k < params.size(); ++k)
            if (params[k] == id) return static_cast<int>(k);
        return -1;
    }

    // --- arrival: record-or-elide, then keep walking --------------------

    /// Arrive at (m, id) via `label`. Waypoints (Return nodes forward) and
    /// call-result variables passed through intra-method are not recorded.
    /// `jump` marks interprocedural arrivals, which always record.
    void arrive(int m, NodeId id, EdgeLabel label, bool jump, int silent_hops) {
        if (over_budget()) {
            budget_hit_ = true;
            return;
        }
        if (silent_hops > kMaxSilentHops) return;

        const UfgNode& n = node(m, id);
        if (dir_ == Direction::Forward) {
            if (n.kind == NodeKind::Return) {
                forward_leave_method(m, silent_hops + 1);
                return;
            }
            if (!jump && label.tag == EdgeLabel::Tag::Ret &&
                (n.kind == NodeKind::VarRef || n.kind == NodeKind::FieldRef)) {
                // Call-result variable: transparent; continue along its uses.
                bool any = false;
                for (const UfgEdge* e : pg_.graph(m).out_edges(id)) {
                    any = true;
                    arrive(m, e->dst, e->label, false, silent_hops + 1);
                }
                if (!any) emit();
                return;
            }
        } else {
            if (!jump && is_call_result_var(m, id)) {
                bool any = false;
                for (const UfgEdge* e : pg_.graph(m).in_edges(id)) {
                    any = true;
                    arrive(m, e->src, e->label, false, silent_hops + 1);
                }
                if (!any) emit();
                return;
            }
        }

        steps_.push_back(PatternStep{label, n.label, n.kind, static_cast<int>(stack_.size())});
        if (static_cast<int>(steps_.size()) >= cfg_.max_length) {
            emit();
        } else {
            walk_from(m, id);
        }
        steps_.pop_back();
    }

    /// Forward traversal hit a Return node: pop back into the caller, or fan
    /// out to every caller when the stack is empty (capped).
    void forward_leave_method(int m, int silent_hops) {
        if (!cfg_.interproc) {
            emit();
            return;
        }
        if (!stack_.empty()) {
            auto [cm, cnode] = stack_.back();
            NodeId recv = receiver_of(cm, cnode);
            if (recv < 0) {
                emit();
                return;
            }
            stack_.pop_back();
            arrive(cm, recv, EdgeLabel::unlabeled(), true, silent_hops);
            stack_.emplace_back(cm, cnode);
            return;
        }
        auto it = pg_.callers.find(m);
        if (it == pg_.callers.end() || it->second.empty()) {
            emit();
            return;
        }
        int fanned = 0;
        bool any = false;
        for (const auto& [cm, cnode] : it->second) {
            if (fanned >= cfg_.max_virtuals) break;
            ++fanned;
            NodeId recv = receiver_of(cm, cnode);
            if (recv < 0) continue;
            any = true;
            arrive(cm, recv, EdgeLabel::unlabeled(), true, silent_hops);
        }
        if (!any) emit();
    }

    /// Backward traversal stands on a method's param entry node: pop to the
    /// caller's argument source, or fan out to all callers.
    void backward_leave_method(int m, int param_pos, int silent_hops) {
        if (!cfg_.interproc || param_pos < 0) {
            emit();
            return;
        }
        auto arg_source = [&](int cm, NodeId cnode, NodeId& src, EdgeLabel& lbl) {
            for (const UfgEdge* e : pg_.graph(cm).in_edges(cnode)) {
                if (e->label.tag == EdgeLabel::Tag::Arg && e->label.arg_index == param_pos) {
                    src = e->src;
                    lbl = e->label;
                    return true;
                }
            }
            return false;
        };
        if (!stack_.empty()) {
            auto [cm, cnode] = stack_.back();
            NodeId src = -1;
            EdgeLabel lbl;
            if (!arg_source(cm, cnode, src, lbl)) {
                emit();
                return;
            }
            stack_.pop_back();
            arrive(cm, src, lbl, true, silent_hops);
            stack_.emplace_back(cm, cnode);
            return;
        }
        auto it = pg_.callers.find(m);
        if (it == pg_.callers.end() || it->second.empty()) {
            emit();
            return;
        }
        int fanned = 0;
        bool any = false;
        for (const auto& [cm, cnode] : it->second) {
            if (fanned >= cfg_.max_virtuals) break;
            ++fanned;
            NodeId src = -1;
            EdgeLabel lbl;
            if (!arg_source(cm, cnode, src, lbl)) continue;
            any = true;
            arrive(cm, src, lbl, true, silent_hops);
        }
        if (!any) emit();
    }

    // --- standing on a recorded node: enumerate continuations ------------

    void walk_from(int m, NodeId id) {
        if (over_budget()) {
            budget_hit_ = true;
            return;
        }
        const UfgNode& n = node(m, id);

        if (n.kind == NodeKind::Call && !steps_.empty()) {
            // Standing on a call step; behaviour depends on bindings and on
            // the label we entered with.
            if (!cfg_.interproc) {
                emit();
                return;
            }
            const std::vector<int>* bound = pg_.bindings_for(m, id);
            if (dir_ == Direction::Forward) {
                EdgeLabel entered = steps_.back().label;
                if (bound && entered.tag == EdgeLabel::Tag::Arg) {
                    // Descend: continue at the corresponding callee param.
                    bool any = false;
                    for (int callee : *bound) {
                        const auto& params = pg_.param_nodes[static_cast<std::size_t>(callee)];
                        std::size_t k = static_cast<std::size_t>(entered.arg_index);
                        if (k >= params.size() || params[k] < 0) continue;
                        any = true;
                        stack_.emplace_back(m, id);
                        arrive(callee, params[k], EdgeLabel::unlabeled(), true, 0);
                        stack_.pop_back();
                    }
                    if (!any) emit();
                    return;
                }
                // Opaque or receiver/value entry: follow the call's result.
                follow_forward_edges(m, id);
                return;
            }
            // Backward: descend into each callee's returned values; opaque
            // calls end the pattern.
            if (bound) {
                bool any = false;
                for (int callee : *bound) {
                    const Ufg& cg = pg_.graph(callee);
                    for (const auto& cn : cg.nodes) {
                        if (cn.kind != NodeKind::Return) continue;
                        for (const UfgEdge* e : cg.in_edges(cn.id)) {
                            any = true;
                            stack_.emplace_back(m, id);
                            arrive(callee, e->src, e->label, true, 0);
                            stack_.pop_back();
                        }
                    }
                }
                if (!any) emit();
                return;
            }
            emit();
            return;
        }

        if (dir_ == Direction::Forward) {
            follow_forward_edges(m, id);
        } else {
            int pos = param_position(m, id);
            if (pos >= 0 && pg_.graph(m).in_edges(id).empty()) {
                backward_leave_method(m, pos, 0);
                return;
            }
            follow_backward_edges(m, id);
        }
    }

    void follow_forward_edges(int m, NodeId id) {
        auto out = pg_.graph(m).out_edges(id);
        if (out.empty()) {
            emit();
            return;
        }
        for (const UfgEdge* e : out) arrive(m, e->dst, e->label, false, 0);
    }

    void follow_backward_edges(int m, NodeId id) {
        auto in = pg_.graph(m).in_edges(id);
        if (in.empty()) {
            emit();
            return;
        }
        for (const UfgEdge* e : in) arrive(m, e->src, e->label, false, 0);
    }
};

std::vector<std::pair<int, NodeId>> anchors_of(const ProgramGraph& pg, const VarDecl* v) {
    std::vector<std::pair<int, NodeId>> anchors;
    for (int m = 0; m < pg.methods(); ++m)
        for (const auto& n : pg.graph(m).nodes)
            if (n.decl == v &&
                (n.kind == NodeKind::VarRef || n.kind == NodeKind::FieldRef))
                anchors.emplace_back(m, n.id);
    return anchors;
}

} // namespace

std::vector<UsagePattern> collect_patterns(const ProgramGraph& pg, const VarDecl* v,
                                           const TraversalConfig& cfg,
                                           std::vector<Diagnostic>* diags) {
    std::map<std::string, UsagePattern> by_key;
    int emitted = 0;
    bool budget_hit = false;
    for (Direction dir : {Direction::Forward, Direction::Backward}) {
        Tracer tracer(pg, v, dir, cfg, by_key, emitted, budget_hit);
        for (const auto& [m, id] : anchors_of(pg, v)) tracer.trace_from(m, id);
    }
    if (budget_hit && diags) {
        Diagnostic d;
        d.severity = Severity::Warning;
        d.loc = v->loc;
        d.message = "BudgetExceeded: patterns for '" + v->name + "' truncated at " +
                    std::to_string(cfg.max_patterns_per_variable);
        diags->push_back(std::move(d));
    }
    std::vector<UsagePattern> out;
    out.reserve(by_key.size());
    for (auto& [key, p] : by_key) out.push_back(std::move(p));
    return out;
}

PatternIndex collect_all_patterns(const ProgramGraph& pg,
                                  const std::vector<std::pair<const VarDecl*, std::string>>& vars,
                                  const TraversalConfig& cfg) {
    PatternIndex index;
    for (const auto& [v, id] : vars) {
        PatternIndex::Entry entry;
        entry.var = v;
        entry.var_id = id;
        entry.patterns = collect_patterns(pg, v, cfg, &index.diagnostics);
        if (entry.patterns.empty()) continue;
        index.index_of[v] = static_cast<int>(index.entries.size());
        index.entries.push_back(std::move(entry));
    }
    return index;
}

std::string patterns_to_records(const PatternIndex& index) {
    std::ostringstream os;
    for (const auto& entry : index.entries) {
        for (const auto& p : entry.patterns) {
            nlohmann::ordered_json rec;
            rec["var"] = entry.var_id;
            rec["dir"] = p.dir == Direction::Forward ? "F" : "B";
            rec["key"] = pattern_key(p);
            rec["dist"] = p.dists();
            if (p.multiplicity > 1) rec["n"] = p.multiplicity;
            os << rec.dump() << '\n';
        }
    }
    return os.str();
}

} // namespace nameflow
