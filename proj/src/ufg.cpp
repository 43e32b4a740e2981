#include "nameflow/ufg.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nameflow {

std::string node_kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::VarRef: return "VarRef";
    case NodeKind::FieldRef: return "FieldRef";
    case NodeKind::Const: return "Const";
    case NodeKind::BinOp: return "BinOp";
    case NodeKind::UnOp: return "UnOp";
    case NodeKind::Call: return "Call";
    case NodeKind::Return: return "Return";
    case NodeKind::Join: return "Join";
    case NodeKind::Begin: return "Begin";
    case NodeKind::End: return "End";
    case NodeKind::ArraySlot: return "ArraySlot";
    }
    return "?";
}

NodeKind node_kind_from_name(const std::string& s) {
    static const std::map<std::string, NodeKind> table = {
        {"VarRef", NodeKind::VarRef},   {"FieldRef", NodeKind::FieldRef},
        {"Const", NodeKind::Const},     {"BinOp", NodeKind::BinOp},
        {"UnOp", NodeKind::UnOp},       {"Call", NodeKind::Call},
        {"Return", NodeKind::Return},   {"Join", NodeKind::Join},
        {"Begin", NodeKind::Begin},     {"End", NodeKind::End},
        {"ArraySlot", NodeKind::ArraySlot},
    };
    auto it = table.find(s);
    if (it == table.end()) throw SchemaError("k", "unknown node kind '" + s + "'");
    return it->second;
}

std::string EdgeLabel::str() const {
    switch (tag) {
    case Tag::Unlabeled: return "";
    case Tag::L: return "L";
    case Tag::R: return "R";
    case Tag::Arg: return "#arg" + std::to_string(arg_index);
    case Tag::Ret: return "#return";
    case Tag::This: return "this";
    case Tag::Cond: return "cond";
    case Tag::CondTrue: return "cond:true";
    case Tag::CondFalse: return "cond:false";
    }
    return "";
}

EdgeLabel EdgeLabel::parse(const std::string& s) {
    if (s.empty()) return unlabeled();
    if (s == "L") return left();
    if (s == "R") return right();
    if (s == "#return") return ret();
    if (s == "this") return receiver();
    if (s == "cond") return cond();
    if (s == "cond:true") return cond_true();
    if (s == "cond:false") return cond_false();
    if (s.rfind("#arg", 0) == 0) return arg(std::stoi(s.substr(4)));
    throw SchemaError("l", "unknown edge label '" + s + "'");
}

std::vector<const UfgEdge*> Ufg::out_edges(NodeId id) const {
    std::vector<const UfgEdge*> out;
    for (const auto& e : edges)
        if (e.src == id) out.push_back(&e);
    return out;
}

std::vector<const UfgEdge*> Ufg::in_edges(NodeId id) const {
    std::vector<const UfgEdge*> out;
    for (const auto& e : edges)
        if (e.dst == id) out.push_back(&e);
    return out;
}

void TypeTable::add_unit(const SourceUnit& unit) {
    for (const auto& t : unit.types) types[t->name] = t.get();
}

const TypeDecl* TypeTable::find(const std::string& name) const {
    auto it = types.find(name);
    return it == types.end() ? nullptr : it->second;
}

const MethodDecl* TypeTable::find_method(const std::string& type, const std::string& name,
                                         int arity) const {
    const TypeDecl* t = find(type);
    int guard = 0;
    while (t && guard++ < 64) {
        for (const auto& m : t->methods)
            if (m->name == name && m->arity() == arity) return m.get();
        t = t->superclass.empty() ? nullptr : find(t->superclass);
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Lowering
// ---------------------------------------------------------------------------

namespace {

class Lowerer {
public:
    Lowerer(const MethodDecl& method, const TypeTable& types) : method_(method), types_(types) {
        g_.method = &method;
        g_.method_id = method.signature();
    }

    Ufg run() {
        for (const auto& p : method_.params) {
            NodeId n = make_node(NodeKind::VarRef, p->name, p.get(), p->loc);
            env_[p.get()] = n;
        }
        if (method_.body) lower_stmt(*method_.body);
        std::sort(g_.edges.begin(), g_.edges.end());
        g_.edges.erase(std::unique(g_.edges.begin(), g_.edges.end(),
                                   [](const UfgEdge& a, const UfgEdge& b) {
                                       return a.src == b.src && a.dst == b.dst &&
                                              a.label == b.label;
                                   }),
                       g_.edges.end());
        validate_graph(g_);
        return std::move(g_);
    }

private:
    const MethodDecl& method_;
    const TypeTable& types_;
    Ufg g_;
    std::map<const VarDecl*, NodeId> env_; // current value node per variable
    // Assignments materialize a variable version node except directly inside
    // an if branch, where the pending value wires into the Join instead.
    bool materialize_ = true;

    NodeId make_node(NodeKind kind, std::string label, const VarDecl* decl, SourceLoc loc) {
        UfgNode n;
        n.id = static_cast<NodeId>(g_.nodes.size());
        n.kind = kind;
        n.label = std::move(label);
        n.decl = decl;
        n.loc = loc;
        g_.nodes.push_back(std::move(n));
        return g_.nodes.back().id;
    }

    void add_edge(NodeId src, NodeId dst, EdgeLabel label) {
        g_.edges.push_back(UfgEdge{src, dst, label});
    }

    NodeKind var_node_kind(const VarDecl* d) {
        return d && d->kind == VarKind::Field ? NodeKind::FieldRef : NodeKind::VarRef;
    }

    /// Current value node of `d`, or a fresh initial-use node when the
    /// variable has no definition yet (params excluded; they always have an
    /// entry node).
    NodeId value_of(const VarDecl* d, const std::string& name, SourceLoc loc) {
        if (d) {
            auto it = env_.find(d);
            if (it != env_.end()) return it->second;
            return make_node(var_node_kind(d), d->name, d, loc);
        }
        return make_node(NodeKind::VarRef, name, nullptr, loc);
    }

    // --- static expression typing for call receivers -----------------------

    std::string type_of(const Expr& e) {
        switch (e.kind) {
        case ExprKind::IntLit: return "int";
        case ExprKind::StrLit: return "String";
        case ExprKind::CharLit: return "char";
        case ExprKind::BoolLit: return "boolean";
        case ExprKind::This: return method_.owner ? method_.owner->name : "";
        case ExprKind::Ident:
        case ExprKind::FieldAccess:
            return e.binding ? e.binding->declared_type : "";
        case ExprKind::Index: {
            std::string base = e.lhs ? type_of(*e.lhs) : "";
            if (base.size() > 2 && base.compare(base.size() - 2, 2, "[]") == 0)
                return base.substr(0, base.size() - 2);
            return "";
        }
        case ExprKind::Unary:
            return e.op == "!" ? "boolean" : "int";
        case ExprKind::Binary: {
            static const std::set<std::string> boolean_ops = {"==", "!=", "<",  "<=",
                                                              ">",  ">=", "&&", "||"};
            if (boolean_ops.count(e.op)) return "boolean";
            if (e.op == "+" && (type_of(*e.lhs) == "String" || type_of(*e.rhs) == "String"))
                return "String";
            return "int";
        }
        case ExprKind::Call: {
            std::string recv = receiver_type_of(e);
            if (recv.empty()) return "";
            const MethodDecl* m =
                types_.find_method(recv, e.name, static_cast<int>(e.args.size()));
            return m ? m->return_type : "";
        }
        }
        return "";
    }

    std::string receiver_type_of(const Expr& call) {
        if (!call.lhs || call.lhs->kind == ExprKind::This)
            return method_.owner ? method_.owner->name : "";
        return type_of(*call.lhs);
    }

    // --- expressions --------------------------------------------------------

    NodeId lower_expr(const Expr& e) {
        switch (e.kind) {
        case ExprKind::IntLit:
        case ExprKind::StrLit:
        case ExprKind::CharLit:
        case ExprKind::BoolLit:
            return make_node(NodeKind::Const, "const", nullptr, e.loc);
        case ExprKind::This:
            return make_node(NodeKind::VarRef, "this", nullptr, e.loc);
        case ExprKind::Ident:
            return value_of(e.binding, e.name, e.loc);
        case ExprKind::FieldAccess: {
            if (e.binding) {
                auto it = env_.find(e.binding);
                if (it != env_.end()) return it->second;
            }
            NodeId f = make_node(e.binding ? NodeKind::FieldRef : NodeKind::FieldRef, e.name,
                                 e.binding, e.loc);
            if (e.lhs && e.lhs->kind != ExprKind::This) {
                NodeId base = lower_expr(*e.lhs);
                add_edge(base, f, EdgeLabel::unlabeled());
            }
            return f;
        }
        case ExprKind::Index: {
            NodeId slot = -1;
            NodeId base = lower_expr(*e.lhs);
            NodeId index = lower_expr(*e.rhs);
            slot = make_node(NodeKind::ArraySlot, "[]", nullptr, e.loc);
            add_edge(base, slot, EdgeLabel::receiver());
            add_edge(index, slot, EdgeLabel::arg(0));
            return slot;
        }
        case ExprKind::Unary: {
            NodeId operand = lower_expr(*e.lhs);
            NodeId op = make_node(NodeKind::UnOp, e.op, nullptr, e.loc);
            add_edge(operand, op, EdgeLabel::unlabeled());
            return op;
        }
        case ExprKind::Binary: {
            NodeId lhs = lower_expr(*e.lhs);
            NodeId rhs = lower_expr(*e.rhs);
            NodeId op = make_node(NodeKind::BinOp, e.op, nullptr, e.loc);
            add_edge(lhs, op, EdgeLabel::left());
            add_edge(rhs, op, EdgeLabel::right());
            return op;
        }
        case ExprKind::Call: {
            NodeId recv = -1;
            if (e.lhs && e.lhs->kind != ExprKind::This) recv = lower_expr(*e.lhs);
            std::vector<NodeId> args;
            for (const auto& a : e.args) args.push_back(lower_expr(*a));
            NodeId call = make_node(NodeKind::Call, e.name + "()", nullptr, e.loc);
            UfgNode& cn = g_.nodes[static_cast<std::size_t>(call)];
            cn.callee = e.name;
            cn.call_arity = static_cast<int>(e.args.size());
            cn.receiver_type = receiver_type_of(e);
            cn.has_receiver = recv >= 0;
            if (recv >= 0) add_edge(recv, call, EdgeLabel::receiver());
            for (std::size_t k = 0; k < args.size(); ++k)
                add_edge(args[k], call, EdgeLabel::arg(static_cast<int>(k)));
            return call;
        }
        }
        throw InternalLoweringError("unhandled expression kind");
    }

    // --- statements ---------------------------------------------------------

    EdgeLabel value_edge_label(NodeId value) {
        return g_.node(value).kind == NodeKind::Call ? EdgeLabel::ret() : EdgeLabel::unlabeled();
    }

    void assign(const VarDecl* decl, const std::string& name, NodeId value, SourceLoc loc) {
        if (!decl) {
            // Unresolved target: keep the node so the value still flows somewhere.
            NodeId v = make_node(NodeKind::VarRef, name, nullptr, loc);
            add_edge(value, v, value_edge_label(value));
            return;
        }
        if (materialize_) {
            NodeId v = make_node(var_node_kind(decl), decl->name, decl, loc);
            add_edge(value, v, value_edge_label(value));
            env_[decl] = v;
        } else {
            env_[decl] = value;
        }
    }

    void lower_stmt(const Stmt& s) {
        switch (s.kind) {
        case StmtKind::Block:
            for (const auto& c : s.body) lower_stmt(*c);
            break;
        case StmtKind::VarDeclStmt:
            if (s.value) assign(s.decl, s.decl->name, lower_expr(*s.value), s.decl->loc);
            break;
        case StmtKind::Assign: {
            NodeId value = lower_expr(*s.value);
            assign(s.target->binding, s.target->name, value, s.target->loc);
            break;
        }
        case StmtKind::ExprStmt:
            lower_expr(*s.value);
            break;
        case StmtKind::Return: {
            NodeId ret = -1;
            if (s.value) {
                NodeId value = lower_expr(*s.value);
                ret = make_node(NodeKind::Return, "return", nullptr, s.loc);
                add_edge(value, ret, value_edge_label(value));
            } else {
                make_node(NodeKind::Return, "return", nullptr, s.loc);
            }
            break;
        }
        case StmtKind::If:
            lower_if(s);
            break;
        case StmtKind::While:
            lower_loop(s, *s.loop_body, nullptr, s.cond.get(), /*pre_test=*/true);
            break;
        case StmtKind::For: {
            if (s.init) lower_stmt(*s.init);
            lower_loop(s, *s.loop_body, s.update.get(), s.cond.get(), /*pre_test=*/true);
            break;
        }
        case StmtKind::DoWhile:
            lower_loop(s, *s.loop_body, nullptr, s.cond.get(), /*pre_test=*/false);
            break;
        case StmtKind::Empty:
            break;
        }
    }

    /// Deterministic ordering for merge processing.
    std::vector<const VarDecl*> sorted_decls(const std::set<const VarDecl*>& decls) {
        std::vector<const VarDecl*> out(decls.begin(), decls.end());
        std::sort(out.begin(), out.end(), [](const VarDecl* a, const VarDecl* b) {
            if (a->loc.line != b->loc.line) return a->loc.line < b->loc.line;
            if (a->loc.col != b->loc.col) return a->loc.col < b->loc.col;
            return a->name < b->name;
        });
        return out;
    }

    NodeId prior_or_initial(const std::map<const VarDecl*, NodeId>& env, const VarDecl* d,
                            SourceLoc loc) {
        auto it = env.find(d);
        if (it != env.end()) return it->second;
        return make_node(var_node_kind(d), d->name, d, loc);
    }

    void lower_if(const Stmt& s) {
        NodeId cond = lower_expr(*s.cond);
        std::map<const VarDecl*, NodeId> before = env_;
        bool outer_materialize = materialize_;

        materialize_ = false;
        lower_stmt(*s.then_branch);
        std::map<const VarDecl*, NodeId> after_then = std::move(env_);

        env_ = before;
        if (s.else_branch) lower_stmt(*s.else_branch);
        std::map<const VarDecl*, NodeId> after_else = std::move(env_);
        materialize_ = outer_materialize;

        env_ = before;
        std::set<const VarDecl*> modified;
        for (const auto& [d, n] : after_then) {
            auto it = before.find(d);
            if (it == before.end() || it->second != n) modified.insert(d);
        }
        for (const auto& [d, n] : after_else) {
            auto it = before.find(d);
            if (it == before.end() || it->second != n) modified.insert(d);
        }

        for (const VarDecl* d : sorted_decls(modified)) {
            NodeId join = make_node(NodeKind::Join, "Join", nullptr, s.loc);
            add_edge(cond, join, EdgeLabel::cond());
            auto then_it = after_then.find(d);
            NodeId then_val =
                then_it != after_then.end() ? then_it->second : prior_or_initial(before, d, s.loc);
            auto else_it = after_else.find(d);
            NodeId else_val =
                else_it != after_else.end() ? else_it->second : prior_or_initial(before, d, s.loc);
            add_edge(then_val, join, EdgeLabel::cond_true());
            add_edge(else_val, join, EdgeLabel::cond_false());
            if (materialize_) {
                NodeId v = make_node(var_node_kind(d), d->name, d, s.loc);
                add_edge(join, v, EdgeLabel::unlabeled());
                env_[d] = v;
            } else {
                env_[d] = join;
            }
        }
    }

    void collect_assigned(const Stmt& s, std::set<const VarDecl*>& assigned,
                          std::set<const VarDecl*>& declared) {
        switch (s.kind) {
        case StmtKind::Block:
            for (const auto& c : s.body) collect_assigned(*c, assigned, declared);
            break;
        case StmtKind::VarDeclStmt:
            declared.insert(s.decl);
            if (s.value) assigned.insert(s.decl);
            break;
        case StmtKind::Assign:
            if (s.target->binding) assigned.insert(s.target->binding);
            break;
        case StmtKind::If:
            collect_assigned(*s.then_branch, assigned, declared);
            if (s.else_branch) collect_assigned(*s.else_branch, assigned, declared);
            break;
        case StmtKind::While:
        case StmtKind::DoWhile:
            collect_assigned(*s.loop_body, assigned, declared);
            break;
        case StmtKind::For:
            collect_assigned(*s.init, assigned, declared);
            collect_assigned(*s.update, assigned, declared);
            collect_assigned(*s.loop_body, assigned, declared);
            break;
        default:
            break;
        }
    }

    void lower_loop(const Stmt& s, const Stmt& body, const Stmt* update, const Expr* cond,
                    bool pre_test) {
        // Variables carried across iterations: assigned in the loop region
        // but declared outside it.
        std::set<const VarDecl*> assigned, declared;
        collect_assigned(body, assigned, declared);
        if (update) collect_assigned(*update, assigned, declared);
        std::set<const VarDecl*> carried;
        for (const VarDecl* d : assigned)
            if (!declared.count(d)) carried.insert(d);

        std::vector<const VarDecl*> order = sorted_decls(carried);
        std::map<const VarDecl*, NodeId> begins, ends;
        for (const VarDecl* d : order) {
            NodeId entry = prior_or_initial(env_, d, s.loc);
            NodeId begin = make_node(NodeKind::Begin, "Begin", d, s.loc);
            add_edge(entry, begin, EdgeLabel::unlabeled());
            begins[d] = begin;
            env_[d] = begin;
        }

        if (pre_test && cond) {
            NodeId p = lower_expr(*cond);
            for (const VarDecl* d : order) add_edge(p, begins[d], EdgeLabel::cond());
        }

        bool outer_materialize = materialize_;
        materialize_ = true;
        lower_stmt(body);
        if (update) lower_stmt(*update);
        materialize_ = outer_materialize;

        for (const VarDecl* d : order) {
            NodeId end = make_node(NodeKind::End, "End", d, s.loc);
            add_edge(env_[d], end, EdgeLabel::unlabeled());
            add_edge(end, begins[d], EdgeLabel::unlabeled());
            ends[d] = end;
        }

        if (!pre_test && cond) {
            NodeId p = lower_expr(*cond);
            for (const VarDecl* d : order) add_edge(p, ends[d], EdgeLabel::cond());
        }

        for (const VarDecl* d : order) {
            if (materialize_) {
                NodeId v = make_node(var_node_kind(d), d->name, d, s.loc);
                add_edge(ends[d], v, EdgeLabel::unlabeled());
                env_[d] = v;
            } else {
                env_[d] = ends[d];
            }
        }
    }
};

} // namespace

Ufg build_method_graph(const MethodDecl& method, const TypeTable& types) {
    return Lowerer(method, types).run();
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

void validate_graph(const Ufg& g) {
    auto fail = [&](const std::string& msg) {
        throw InternalLoweringError("graph invariant violated in " + g.method_id + ": " + msg);
    };

    std::size_t n = g.nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        if (g.nodes[i].id != static_cast<NodeId>(i)) fail("node ids not dense");

    std::vector<std::vector<const UfgEdge*>> in(n), out(n);
    for (const auto& e : g.edges) {
        if (e.src < 0 || e.dst < 0 || e.src >= static_cast<NodeId>(n) ||
            e.dst >= static_cast<NodeId>(n))
            fail("edge endpoint out of range");
        out[static_cast<std::size_t>(e.src)].push_back(&e);
        in[static_cast<std::size_t>(e.dst)].push_back(&e);

        const UfgNode& dst = g.node(e.dst);
        const UfgNode& src = g.node(e.src);
        switch (e.label.tag) {
        case EdgeLabel::Tag::L:
        case EdgeLabel::Tag::R:
            if (dst.kind != NodeKind::BinOp) fail("L/R edge into non-BinOp");
            break;
        case EdgeLabel::Tag::Arg:
        case EdgeLabel::Tag::This:
            if (dst.kind != NodeKind::Call && dst.kind != NodeKind::ArraySlot)
                fail("#arg/this edge into non-Call");
            break;
        case EdgeLabel::Tag::Ret:
            if (src.kind != NodeKind::Call) fail("#return edge out of non-Call");
            break;
        case EdgeLabel::Tag::CondTrue:
        case EdgeLabel::Tag::CondFalse:
            if (dst.kind != NodeKind::Join && dst.kind != NodeKind::End)
                fail("cond:* edge into non-Join/End");
            break;
        case EdgeLabel::Tag::Cond:
            if (dst.kind != NodeKind::Join && dst.kind != NodeKind::Begin &&
                dst.kind != NodeKind::End)
                fail("cond edge into non-Join/Begin/End");
            break;
        case EdgeLabel::Tag::Unlabeled:
            break;
        }
    }

    for (const auto& node : g.nodes) {
        std::size_t i = static_cast<std::size_t>(node.id);
        switch (node.kind) {
        case NodeKind::BinOp: {
            int l = 0, r = 0, other = 0;
            for (const UfgEdge* e : in[i]) {
                if (e->label.tag == EdgeLabel::Tag::L) ++l;
                else if (e->label.tag == EdgeLabel::Tag::R) ++r;
                else ++other;
            }
            if (l != 1 || r != 1 || other != 0) fail("BinOp in-edges not exactly {L, R}");
            break;
        }
        case NodeKind::UnOp:
            if (in[i].size() != 1) fail("UnOp without exactly one operand");
            break;
        case NodeKind::Return:
            if (!out[i].empty()) fail("Return with outgoing edges");
            break;
        case NodeKind::Join: {
            int truev = 0, falsev = 0, condv = 0;
            for (const UfgEdge* e : in[i]) {
                if (e->label.tag == EdgeLabel::Tag::CondTrue) ++truev;
                else if (e->label.tag == EdgeLabel::Tag::CondFalse) ++falsev;
                else if (e->label.tag == EdgeLabel::Tag::Cond) ++condv;
                else fail("Join with unlabeled value edge");
            }
            if (truev != 1 || falsev != 1) fail("Join without distinct cond:true/cond:false");
            if (condv > 1) fail("Join with multiple condition inputs");
            break;
        }
        default:
            break;
        }
    }

    // Acyclic except through Begin/End pairs: drop End->Begin back edges.
    std::vector<int> state(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start]) continue;
        stack.push_back(start);
        std::vector<std::size_t> path;
        // Iterative DFS with explicit colors.
        struct Frame {
            std::size_t node;
            std::size_t next = 0;
        };
        std::vector<Frame> frames{{start}};
        state[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& succ = out[f.node];
            bool descended = false;
            while (f.next < succ.size()) {
                const UfgEdge* e = succ[f.next++];
                if (g.node(e->src).kind == NodeKind::End && g.node(e->dst).kind == NodeKind::Begin)
                    continue; // loop back edge
                std::size_t m = static_cast<std::size_t>(e->dst);
                if (state[m] == 1) fail("cycle outside Begin/End pair");
                if (state[m] == 0) {
                    state[m] = 1;
                    frames.push_back(Frame{m});
                    descended = true;
                    break;
                }
            }
            if (!descended && f.next >= succ.size()) {
                state[f.node] = 2;
                frames.pop_back();
            }
        }
        stack.clear();
    }
}

// ---------------------------------------------------------------------------
// Maximal source-to-Return paths (figure replay)
// ---------------------------------------------------------------------------

std::vector<std::string> maximal_return_paths(const Ufg& g) {
    std::size_t n = g.nodes.size();
    std::vector<std::vector<const UfgEdge*>> out(n);
    std::vector<int> indegree(n, 0);
    for (const auto& e : g.edges) {
        out[static_cast<std::size_t>(e.src)].push_back(&e);
        ++indegree[static_cast<std::size_t>(e.dst)];
    }

    std::vector<std::string> paths;
    std::vector<std::pair<const UfgEdge*, NodeId>> trail; // (incoming edge, node)

    auto render = [&]() {
        std::string s = g.node(trail.front().second).label;
        for (std::size_t i = 1; i < trail.size(); ++i) {
            std::string lbl = trail[i].first->label.str();
            s += " →" + lbl + " " + g.node(trail[i].second).label;
        }
        return s;
    };

    std::function<void(NodeId)> dfs = [&](NodeId at) {
        if (g.node(at).kind == NodeKind::Return) {
            paths.push_back(render());
            return;
        }
        const auto& succ = out[static_cast<std::size_t>(at)];
        for (const UfgEdge* e : succ) {
            trail.emplace_back(e, e->dst);
            dfs(e->dst);
            trail.pop_back();
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] != 0) continue;
        trail.clear();
        trail.emplace_back(nullptr, static_cast<NodeId>(i));
        dfs(static_cast<NodeId>(i));
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

} // namespace nameflow
