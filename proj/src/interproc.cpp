#include "nameflow/interproc.hpp"

#include <algorithm>

namespace nameflow {

void Hierarchy::add(const std::string& type, const std::string& superclass) {
    if (superclass.empty()) {
        super_of.try_emplace(type, "");
        return;
    }
    super_of[type] = superclass;
    subs_of[superclass].push_back(type);
}

int Hierarchy::depth_below(const std::string& type, const std::string& ancestor) const {
    int depth = 0;
    std::string cur = type;
    int guard = 0;
    while (guard++ < 1024) {
        if (cur == ancestor) return depth;
        auto it = super_of.find(cur);
        if (it == super_of.end() || it->second.empty()) return -1;
        cur = it->second;
        ++depth;
    }
    return -1;
}

std::vector<std::string> Hierarchy::self_and_subtypes(const std::string& type) const {
    std::vector<std::string> out;
    std::vector<std::string> work{type};
    while (!work.empty()) {
        std::string t = work.back();
        work.pop_back();
        out.push_back(t);
        auto it = subs_of.find(t);
        if (it == subs_of.end()) continue;
        // reversed push keeps declaration order on the stack
        for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
            work.push_back(*rit);
        if (out.size() > 4096) break; // cycle guard; hierarchy is validated acyclic upstream
    }
    return out;
}

std::vector<int> resolve_callees(const CallSite& site, const Hierarchy& hierarchy,
                                 const std::map<std::string, std::map<std::string, int>>& methods,
                                 int max_virtuals) {
    if (site.receiver_type.empty()) return {};
    std::string key = site.callee + "/" + std::to_string(site.arity);

    struct Candidate {
        int depth;
        std::string type;
        int method;
    };
    std::vector<Candidate> found;
    for (const std::string& type : hierarchy.self_and_subtypes(site.receiver_type)) {
        auto tit = methods.find(type);
        if (tit == methods.end()) continue;
        auto mit = tit->second.find(key);
        if (mit == tit->second.end()) continue;
        found.push_back({hierarchy.depth_below(type, site.receiver_type), type, mit->second});
    }
    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        if (a.depth != b.depth) return a.depth > b.depth; // deepest subtype first
        return a.type < b.type;
    });
    std::vector<int> out;
    for (const Candidate& c : found) {
        if (static_cast<int>(out.size()) >= max_virtuals) break;
        out.push_back(c.method);
    }
    return out;
}

ProgramGraph link(std::vector<Ufg> ufgs, std::vector<std::string> method_paths,
                  const Hierarchy& hierarchy, int max_virtuals) {
    ProgramGraph pg;
    pg.ufgs = std::move(ufgs);
    pg.method_paths = std::move(method_paths);
    pg.hierarchy = hierarchy;

    // type -> "name/arity" -> method index
    std::map<std::string, std::map<std::string, int>> method_table;
    for (int m = 0; m < pg.methods(); ++m) {
        const Ufg& g = pg.graph(m);
        if (!g.method) continue;
        std::string type = g.method->owner ? g.method->owner->name : "";
        std::string key = g.method->name + "/" + std::to_string(g.method->arity());
        method_table[type].emplace(key, m);
        pg.method_index[pg.method_paths[static_cast<std::size_t>(m)] + "#" + g.method_id] = m;
    }

    pg.param_nodes.resize(static_cast<std::size_t>(pg.methods()));
    for (int m = 0; m < pg.methods(); ++m) {
        const Ufg& g = pg.graph(m);
        if (!g.method) continue;
        auto& params = pg.param_nodes[static_cast<std::size_t>(m)];
        params.assign(g.method->params.size(), -1);
        // Param entry nodes are created first, in declaration order.
        for (const auto& n : g.nodes) {
            if (n.kind != NodeKind::VarRef || !n.decl) continue;
            for (std::size_t k = 0; k < g.method->params.size(); ++k) {
                if (n.decl == g.method->params[k].get() && params[k] < 0)
                    params[k] = n.id;
            }
        }
    }

    for (int m = 0; m < pg.methods(); ++m) {
        const Ufg& g = pg.graph(m);
        for (const auto& n : g.nodes) {
            if (n.kind != NodeKind::Call) continue;
            CallSite site;
            site.method_index = m;
            site.node = n.id;
            site.callee = n.callee;
            site.arity = n.call_arity;
            site.receiver_type = n.receiver_type;
            std::vector<int> bound = resolve_callees(site, hierarchy, method_table, max_virtuals);
            std::vector<int> kept;
            for (int callee : bound) {
                const Ufg& cg = pg.graph(callee);
                if (cg.method && cg.method->arity() != site.arity) {
                    Diagnostic d;
                    d.severity = Severity::Warning;
                    d.path = pg.method_paths[static_cast<std::size_t>(m)];
                    d.loc = n.loc;
                    d.message = "ArityMismatch: call " + site.callee + "/" +
                                std::to_string(site.arity) + " bound to " + cg.method_id +
                                "; binding dropped";
                    pg.diagnostics.push_back(std::move(d));
                    continue;
                }
                kept.push_back(callee);
            }
            if (!kept.empty()) {
                for (int callee : kept) pg.callers[callee].emplace_back(m, n.id);
                pg.call_bindings[{m, n.id}] = std::move(kept);
            }
        }
    }
    return pg;
}

} // namespace nameflow
