#include "nameflow/interchange.hpp"

#include <json.hpp>

namespace nameflow {

using nlohmann::json;

namespace {

class Reader {
public:
    explicit Reader(const json& doc) : doc_(doc) {}

    std::unique_ptr<SourceUnit> run() {
        require(doc_.is_object(), "$", "top level must be an object");
        std::string schema = str(doc_, "schema", "$");
        if (schema != "ufg-ast/1") throw SchemaError("schema", "expected \"ufg-ast/1\"");
        auto unit = std::make_unique<SourceUnit>();
        unit->path = str(doc_, "path", "$");
        if (doc_.contains("source")) {
            require(doc_["source"].is_string(), "source", "must be a string");
            unit->raw_text = doc_["source"].get<std::string>();
        }
        path_ = unit->path;
        const json& types = field(doc_, "types", "$");
        require(types.is_array(), "types", "must be an array");
        for (const json& t : types) unit->types.push_back(read_type(t));
        return unit;
    }

private:
    const json& doc_;
    std::string path_;
    MethodDecl* current_method_ = nullptr;

    static void require(bool ok, const std::string& fieldname, const std::string& why) {
        if (!ok) throw SchemaError(fieldname, why);
    }
    static const json& field(const json& o, const char* name, const std::string& ctx) {
        if (!o.is_object() || !o.contains(name))
            throw SchemaError(ctx + "." + name, "missing field");
        return o[name];
    }
    static std::string str(const json& o, const char* name, const std::string& ctx) {
        const json& f = field(o, name, ctx);
        require(f.is_string(), ctx + "." + name, "must be a string");
        return f.get<std::string>();
    }

    SourceLoc loc_of(const json& o) {
        SourceLoc loc;
        if (!o.contains("loc")) return loc;
        const json& l = o["loc"];
        require(l.is_object(), "loc", "must be an object");
        loc.line = l.value("line", 0);
        loc.col = l.value("col", 0);
        if (l.contains("span") && l["span"].is_array() && l["span"].size() == 2) {
            loc.span_begin = l["span"][0].get<std::size_t>();
            loc.span_end = l["span"][1].get<std::size_t>();
        }
        return loc;
    }

    std::string kind_of(const json& o, const std::string& ctx) { return str(o, "kind", ctx); }

    std::unique_ptr<TypeDecl> read_type(const json& o) {
        std::string kind = kind_of(o, "types[]");
        if (kind != "TypeDecl") throw UnsupportedConstruct(kind, path_, loc_of(o));
        auto t = std::make_unique<TypeDecl>();
        t->name = str(o, "name", "TypeDecl");
        t->loc = loc_of(o);
        if (o.contains("superclass")) {
            require(o["superclass"].is_string(), "TypeDecl.superclass", "must be a string");
            t->superclass = o["superclass"].get<std::string>();
        }
        if (o.contains("fields")) {
            require(o["fields"].is_array(), "TypeDecl.fields", "must be an array");
            for (const json& f : o["fields"]) {
                std::string fk = kind_of(f, "fields[]");
                if (fk != "Field") throw UnsupportedConstruct(fk, path_, loc_of(f));
                auto v = std::make_unique<VarDecl>();
                v->name = str(f, "name", "Field");
                v->declared_type = str(f, "type", "Field");
                v->kind = VarKind::Field;
                v->loc = loc_of(f);
                v->owner_type = t.get();
                t->fields.push_back(std::move(v));
            }
        }
        if (o.contains("methods")) {
            require(o["methods"].is_array(), "TypeDecl.methods", "must be an array");
            for (const json& m : o["methods"]) t->methods.push_back(read_method(m, *t));
        }
        return t;
    }

    std::unique_ptr<MethodDecl> read_method(const json& o, TypeDecl& owner) {
        std::string kind = kind_of(o, "methods[]");
        if (kind != "Method") throw UnsupportedConstruct(kind, path_, loc_of(o));
        auto m = std::make_unique<MethodDecl>();
        m->name = str(o, "name", "Method");
        m->return_type = str(o, "return_type", "Method");
        m->loc = loc_of(o);
        m->owner = &owner;
        if (o.contains("params")) {
            require(o["params"].is_array(), "Method.params", "must be an array");
            for (const json& p : o["params"]) {
                std::string pk = kind_of(p, "params[]");
                if (pk != "Param") throw UnsupportedConstruct(pk, path_, loc_of(p));
                auto v = std::make_unique<VarDecl>();
                v->name = str(p, "name", "Param");
                v->declared_type = str(p, "type", "Param");
                v->kind = VarKind::Param;
                v->loc = loc_of(p);
                v->owner_method = m.get();
                m->params.push_back(std::move(v));
            }
        }
        current_method_ = m.get();
        m->body = read_stmt(field(o, "body", "Method"));
        current_method_ = nullptr;
        return m;
    }

    StmtPtr read_stmt(const json& o) {
        std::string kind = kind_of(o, "stmt");
        SourceLoc loc = loc_of(o);
        if (kind == "Block") {
            auto s = std::make_unique<Stmt>(StmtKind::Block);
            s->loc = loc;
            const json& body = field(o, "body", "Block");
            require(body.is_array(), "Block.body", "must be an array");
            for (const json& c : body) s->body.push_back(read_stmt(c));
            return s;
        }
        if (kind == "VarDecl") {
            auto s = std::make_unique<Stmt>(StmtKind::VarDeclStmt);
            s->loc = loc;
            auto v = std::make_unique<VarDecl>();
            v->name = str(o, "name", "VarDecl");
            v->declared_type = str(o, "type", "VarDecl");
            v->kind = VarKind::Local;
            v->loc = loc;
            v->owner_method = current_method_;
            if (!current_method_) throw SchemaError("VarDecl", "declaration outside method");
            if (o.contains("init")) s->value = read_expr(o["init"]);
            s->decl = v.get();
            current_method_->locals.push_back(std::move(v));
            return s;
        }
        if (kind == "Assign") {
            auto s = std::make_unique<Stmt>(StmtKind::Assign);
            s->loc = loc;
            s->target = read_expr(field(o, "target", "Assign"));
            s->value = read_expr(field(o, "value", "Assign"));
            if (s->target->kind != ExprKind::Ident && s->target->kind != ExprKind::FieldAccess)
                throw UnsupportedConstruct("assign-target", path_, loc);
            return s;
        }
        if (kind == "If") {
            auto s = std::make_unique<Stmt>(StmtKind::If);
            s->loc = loc;
            s->cond = read_expr(field(o, "cond", "If"));
            s->then_branch = read_stmt(field(o, "then", "If"));
            if (o.contains("else")) s->else_branch = read_stmt(o["else"]);
            return s;
        }
        if (kind == "While" || kind == "DoWhile") {
            auto s = std::make_unique<Stmt>(kind == "While" ? StmtKind::While : StmtKind::DoWhile);
            s->loc = loc;
            s->cond = read_expr(field(o, "cond", kind));
            s->loop_body = read_stmt(field(o, "body", kind));
            return s;
        }
        if (kind == "For") {
            auto s = std::make_unique<Stmt>(StmtKind::For);
            s->loc = loc;
            s->init = o.contains("init") ? read_stmt(o["init"])
                                         : std::make_unique<Stmt>(StmtKind::Empty);
            if (o.contains("cond")) s->cond = read_expr(o["cond"]);
            s->update = o.contains("update") ? read_stmt(o["update"])
                                             : std::make_unique<Stmt>(StmtKind::Empty);
            s->loop_body = read_stmt(field(o, "body", "For"));
            return s;
        }
        if (kind == "Return") {
            auto s = std::make_unique<Stmt>(StmtKind::Return);
            s->loc = loc;
            if (o.contains("value")) s->value = read_expr(o["value"]);
            return s;
        }
        if (kind == "ExprStmt") {
            auto s = std::make_unique<Stmt>(StmtKind::ExprStmt);
            s->loc = loc;
            s->value = read_expr(field(o, "expr", "ExprStmt"));
            return s;
        }
        if (kind == "Empty") {
            auto s = std::make_unique<Stmt>(StmtKind::Empty);
            s->loc = loc;
            return s;
        }
        throw UnsupportedConstruct(kind, path_, loc);
    }

    ExprPtr read_expr(const json& o) {
        std::string kind = kind_of(o, "expr");
        SourceLoc loc = loc_of(o);
        auto lit = [&](ExprKind k) {
            auto e = std::make_unique<Expr>(k);
            e->loc = loc;
            const json& v = field(o, "value", kind);
            e->literal = v.is_string() ? v.get<std::string>() : v.dump();
            return e;
        };
        if (kind == "IntLit") return lit(ExprKind::IntLit);
        if (kind == "StrLit") return lit(ExprKind::StrLit);
        if (kind == "CharLit") return lit(ExprKind::CharLit);
        if (kind == "BoolLit") return lit(ExprKind::BoolLit);
        if (kind == "Ident") {
            auto e = std::make_unique<Expr>(ExprKind::Ident);
            e->loc = loc;
            e->name = str(o, "name", "Ident");
            return e;
        }
        if (kind == "This") {
            auto e = std::make_unique<Expr>(ExprKind::This);
            e->loc = loc;
            return e;
        }
        if (kind == "FieldAccess") {
            auto e = std::make_unique<Expr>(ExprKind::FieldAccess);
            e->loc = loc;
            e->name = str(o, "name", "FieldAccess");
            e->lhs = read_expr(field(o, "base", "FieldAccess"));
            return e;
        }
        if (kind == "Index") {
            auto e = std::make_unique<Expr>(ExprKind::Index);
            e->loc = loc;
            e->lhs = read_expr(field(o, "base", "Index"));
            e->rhs = read_expr(field(o, "index", "Index"));
            return e;
        }
        if (kind == "Unary") {
            auto e = std::make_unique<Expr>(ExprKind::Unary);
            e->loc = loc;
            e->op = str(o, "op", "Unary");
            e->lhs = read_expr(field(o, "operand", "Unary"));
            return e;
        }
        if (kind == "Binary") {
            auto e = std::make_unique<Expr>(ExprKind::Binary);
            e->loc = loc;
            e->op = str(o, "op", "Binary");
            e->lhs = read_expr(field(o, "lhs", "Binary"));
            e->rhs = read_expr(field(o, "rhs", "Binary"));
            return e;
        }
        if (kind == "Call") {
            auto e = std::make_unique<Expr>(ExprKind::Call);
            e->loc = loc;
            e->name = str(o, "name", "Call");
            if (o.contains("receiver")) e->lhs = read_expr(o["receiver"]);
            if (o.contains("args")) {
                require(o["args"].is_array(), "Call.args", "must be an array");
                for (const json& a : o["args"]) e->args.push_back(read_expr(a));
            }
            return e;
        }
        throw UnsupportedConstruct(kind, path_, loc);
    }
};

} // namespace

std::unique_ptr<SourceUnit> parse_interchange(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return Reader(doc).run();
}

} // namespace nameflow
