#include "nameflow/resolver.hpp"

#include <algorithm>

namespace nameflow {

namespace {

class Resolver {
public:
    Resolver(SourceUnit& unit, ResolutionIndex& index) : unit_(unit), index_(index) {}

    void run() {
        for (auto& type : unit_.types) {
            for (auto& field : type->fields)
                record(field.get(), field->loc, Occurrence::Kind::Decl, nullptr);
            for (auto& method : type->methods) resolve_method(*type, *method);
        }
        std::sort(index_.ordered_decls.begin(), index_.ordered_decls.end(),
                  [](const VarDecl* a, const VarDecl* b) {
                      if (a->loc.line != b->loc.line) return a->loc.line < b->loc.line;
                      if (a->loc.col != b->loc.col) return a->loc.col < b->loc.col;
                      return a->name < b->name;
                  });
    }

private:
    SourceUnit& unit_;
    ResolutionIndex& index_;
    const TypeDecl* type_ = nullptr;
    const MethodDecl* method_ = nullptr;
    // Innermost scope last. Each scope maps name -> decl.
    std::vector<std::map<std::string, VarDecl*>> scopes_;

    void record(const VarDecl* decl, SourceLoc loc, Occurrence::Kind kind,
                const MethodDecl* method) {
        auto [it, inserted] = index_.occurrences.try_emplace(decl);
        if (inserted) index_.ordered_decls.push_back(decl);
        it->second.push_back(Occurrence{loc, kind, method});
    }

    VarDecl* lookup(const std::string& name) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end()) return found->second;
        }
        return nullptr;
    }

    VarDecl* lookup_field(const TypeDecl& type, const std::string& name) {
        for (const auto& f : type.fields)
            if (f->name == name) return f.get();
        if (!type.superclass.empty()) {
            for (const auto& t : unit_.types)
                if (t->name == type.superclass) return lookup_field(*t, name);
        }
        return nullptr;
    }

    void resolve_method(const TypeDecl& type, MethodDecl& method) {
        type_ = &type;
        method_ = &method;
        scopes_.clear();

        std::map<std::string, VarDecl*> field_scope;
        collect_fields(type, field_scope);
        scopes_.push_back(std::move(field_scope));

        std::map<std::string, VarDecl*> param_scope;
        for (auto& p : method.params) {
            param_scope[p->name] = p.get();
            record(p.get(), p->loc, Occurrence::Kind::Decl, &method);
        }
        scopes_.push_back(std::move(param_scope));

        if (method.body) resolve_stmt(*method.body);
    }

    void collect_fields(const TypeDecl& type, std::map<std::string, VarDecl*>& out) {
        if (!type.superclass.empty()) {
            for (const auto& t : unit_.types)
                if (t->name == type.superclass) collect_fields(*t, out);
        }
        for (const auto& f : type.fields) out[f->name] = f.get();
    }

    void resolve_stmt(Stmt& s) {
        switch (s.kind) {
        case StmtKind::Block:
            scopes_.emplace_back();
            for (auto& c : s.body) resolve_stmt(*c);
            scopes_.pop_back();
            break;
        case StmtKind::VarDeclStmt:
            if (s.value) resolve_expr(*s.value, false);
            scopes_.back()[s.decl->name] = s.decl;
            record(s.decl, s.decl->loc, Occurrence::Kind::Decl, method_);
            if (s.value) record(s.decl, s.decl->loc, Occurrence::Kind::Write, method_);
            break;
        case StmtKind::Assign:
            resolve_expr(*s.value, false);
            resolve_expr(*s.target, true);
            break;
        case StmtKind::If:
            resolve_expr(*s.cond, false);
            resolve_stmt(*s.then_branch);
            if (s.else_branch) resolve_stmt(*s.else_branch);
            break;
        case StmtKind::While:
            resolve_expr(*s.cond, false);
            resolve_stmt(*s.loop_body);
            break;
        case StmtKind::DoWhile:
            resolve_stmt(*s.loop_body);
            resolve_expr(*s.cond, false);
            break;
        case StmtKind::For:
            scopes_.emplace_back(); // for-header scope
            resolve_stmt(*s.init);
            if (s.cond) resolve_expr(*s.cond, false);
            resolve_stmt(*s.loop_body);
            resolve_stmt(*s.update);
            scopes_.pop_back();
            break;
        case StmtKind::Return:
            if (s.value) resolve_expr(*s.value, false);
            break;
        case StmtKind::ExprStmt:
            resolve_expr(*s.value, false);
            break;
        case StmtKind::Empty:
            break;
        }
    }

    void resolve_expr(Expr& e, bool is_write) {
        switch (e.kind) {
        case ExprKind::Ident: {
            VarDecl* d = lookup(e.name);
            if (d) {
                e.binding = d;
                record(d, e.loc, is_write ? Occurrence::Kind::Write : Occurrence::Kind::Read,
                       method_);
            } else {
                Diagnostic diag;
                diag.severity = Severity::Warning;
                diag.path = unit_.path;
                diag.loc = e.loc;
                diag.message = "unresolved identifier '" + e.name + "'";
                index_.diagnostics.push_back(diag);
                unit_.diagnostics.push_back(std::move(diag));
            }
            break;
        }
        case ExprKind::FieldAccess: {
            if (e.lhs) resolve_expr(*e.lhs, false);
            // this.f or <TypeMember>.f where the base names our own type
            if (e.lhs && e.lhs->kind == ExprKind::This && type_) {
                if (VarDecl* f = lookup_field(*type_, e.name)) {
                    e.binding = f;
                    record(f, e.loc,
                           is_write ? Occurrence::Kind::Write : Occurrence::Kind::Read, method_);
                }
            }
            break;
        }
        case ExprKind::Index:
            resolve_expr(*e.lhs, false);
            resolve_expr(*e.rhs, false);
            break;
        case ExprKind::Unary:
            resolve_expr(*e.lhs, false);
            break;
        case ExprKind::Binary:
            resolve_expr(*e.lhs, false);
            resolve_expr(*e.rhs, false);
            break;
        case ExprKind::Call:
            if (e.lhs) resolve_expr(*e.lhs, false);
            for (auto& a : e.args) resolve_expr(*a, false);
            break;
        default:
            break;
        }
    }
};

} // namespace

ResolutionIndex resolve_names(SourceUnit& unit) {
    ResolutionIndex index;
    Resolver(unit, index).run();
    return index;
}

} // namespace nameflow
