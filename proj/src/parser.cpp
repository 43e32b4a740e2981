#include "nameflow/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace nameflow {

std::string severity_name(Severity s) {
    switch (s) {
    case Severity::Note: return "note";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
    }
    return "unknown";
}

std::string VarDecl::id(const std::string& path) const {
    std::ostringstream os;
    os << path << ':' << loc.line << ':' << loc.col << ':' << name;
    return os.str();
}

std::string MethodDecl::signature() const {
    std::string type_name = owner ? owner->name : std::string("<none>");
    return type_name + "." + name + "/" + std::to_string(arity());
}

namespace lexer {

namespace {

const std::set<std::string>& keywords() {
    static const std::set<std::string> kw = {
        "class", "extends", "if", "else", "while", "do", "for", "return",
        "true", "false", "this", "new", "public", "private", "protected",
        "static", "final", "abstract", "void",
    };
    return kw;
}

} // namespace

std::vector<Token> tokenize(const std::string& text, const std::string& path) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < text.size(); ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto here = [&]() {
        SourceLoc loc;
        loc.line = line;
        loc.col = col;
        loc.span_begin = i;
        loc.span_end = i;
        return loc;
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
            SourceLoc open = here();
            advance(2);
            while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) advance(1);
            if (i + 1 >= text.size()) throw SyntaxError(path, open, "unterminated block comment");
            advance(2);
            continue;
        }

        Token tok;
        tok.loc = here();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
                    text[i] == '$'))
                advance(1);
            tok.text = text.substr(start, i - start);
            tok.kind = keywords().count(tok.text) ? TokKind::Keyword : TokKind::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance(1);
            if (i < text.size() && text[i] == '.')
                throw UnsupportedConstruct("floating-point-literal", path, tok.loc);
            tok.text = text.substr(start, i - start);
            tok.kind = TokKind::IntLit;
        } else if (c == '"') {
            std::size_t start = i;
            advance(1);
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\') advance(1);
                if (text[i] == '\n') throw SyntaxError(path, tok.loc, "unterminated string literal");
                advance(1);
            }
            if (i >= text.size()) throw SyntaxError(path, tok.loc, "unterminated string literal");
            advance(1);
            tok.text = text.substr(start, i - start);
            tok.kind = TokKind::StrLit;
        } else if (c == '\'') {
            std::size_t start = i;
            advance(1);
            if (i < text.size() && text[i] == '\\') advance(1);
            if (i >= text.size()) throw SyntaxError(path, tok.loc, "unterminated char literal");
            advance(1);
            if (i >= text.size() || text[i] != '\'')
                throw SyntaxError(path, tok.loc, "unterminated char literal");
            advance(1);
            tok.text = text.substr(start, i - start);
            tok.kind = TokKind::CharLit;
        } else {
            static const char* two_char[] = {"==", "!=", "<=", ">=", "&&", "||",
                                             "+=", "-=", "*=", "/=", "%="};
            static const char* banned[] = {"++", "--"};
            std::string pair = text.substr(i, 2);
            bool matched = false;
            for (const char* b : banned)
                if (pair == b) throw UnsupportedConstruct("increment-operator", path, tok.loc);
            for (const char* t : two_char) {
                if (pair == t) {
                    tok.text = pair;
                    advance(2);
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                static const std::string singles = "+-*/%<>=!(){}[];,.&|";
                if (singles.find(c) == std::string::npos)
                    throw SyntaxError(path, tok.loc,
                                      std::string("unexpected character '") + c + "'");
                tok.text = std::string(1, c);
                advance(1);
            }
            tok.kind = TokKind::Punct;
        }
        tok.loc.span_end = i;
        out.push_back(std::move(tok));
    }

    Token eof;
    eof.kind = TokKind::End;
    eof.loc = here();
    out.push_back(eof);
    return out;
}

} // namespace lexer

// ---------------------------------------------------------------------------
// Recursive-descent parser for the subset grammar.
// ---------------------------------------------------------------------------

namespace {

using lexer::TokKind;
using lexer::Token;

class Parser {
public:
    Parser(const std::string& text, std::string path)
        : path_(std::move(path)), toks_(lexer::tokenize(text, path_)) {}

    std::unique_ptr<SourceUnit> run(const std::string& text) {
        auto unit = std::make_unique<SourceUnit>();
        unit->path = path_;
        unit->raw_text = text;

        TypeDecl* implicit_type = nullptr;
        while (!at_end()) {
            skip_modifiers();
            if (is_keyword("class")) {
                unit->types.push_back(parse_type_decl());
            } else {
                // Bare member: wrap into an implicit type named after the file.
                if (!implicit_type) {
                    auto t = std::make_unique<TypeDecl>();
                    t->name = implicit_type_name();
                    t->implicit = true;
                    t->loc = peek().loc;
                    implicit_type = t.get();
                    unit->types.push_back(std::move(t));
                }
                parse_member(*implicit_type);
            }
        }
        return unit;
    }

private:
    std::string path_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    MethodDecl* current_method_ = nullptr;

    const Token& peek(int ahead = 0) const {
        std::size_t k = pos_ + static_cast<std::size_t>(ahead);
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    bool at_end() const { return peek().kind == TokKind::End; }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    bool is_punct(const char* p, int ahead = 0) const {
        return peek(ahead).kind == TokKind::Punct && peek(ahead).text == p;
    }
    bool is_keyword(const char* k, int ahead = 0) const {
        return peek(ahead).kind == TokKind::Keyword && peek(ahead).text == k;
    }
    bool accept_punct(const char* p) {
        if (!is_punct(p)) return false;
        advance();
        return true;
    }
    void expect_punct(const char* p) {
        if (!accept_punct(p)) fail(std::string("expected '") + p + "'");
    }
    std::string expect_ident() {
        if (peek().kind != TokKind::Ident) fail("expected identifier");
        return advance().text;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(path_, peek().loc, msg + ", got '" + peek().text + "'");
    }

    std::string implicit_type_name() const {
        std::size_t slash = path_.find_last_of("/\\");
        std::string stem = slash == std::string::npos ? path_ : path_.substr(slash + 1);
        std::size_t dot = stem.find_last_of('.');
        if (dot != std::string::npos) stem = stem.substr(0, dot);
        std::string name;
        for (char c : stem)
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') name += c;
        if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) name = "Main";
        return name;
    }

    void skip_modifiers() {
        static const char* mods[] = {"public", "private", "protected", "static", "final"};
        for (;;) {
            bool any = false;
            for (const char* m : mods)
                if (is_keyword(m)) {
                    if (std::string(m) == "abstract")
                        throw UnsupportedConstruct("abstract", path_, peek().loc);
                    advance();
                    any = true;
                }
            if (is_keyword("abstract"))
                throw UnsupportedConstruct("abstract-modifier", path_, peek().loc);
            if (!any) return;
        }
    }

    std::unique_ptr<TypeDecl> parse_type_decl() {
        auto t = std::make_unique<TypeDecl>();
        t->loc = peek().loc;
        advance(); // class
        t->name = expect_ident();
        if (is_keyword("extends")) {
            advance();
            t->superclass = expect_ident();
        }
        if (is_punct("{", 0) == false && peek().text == "implements")
            throw UnsupportedConstruct("implements", path_, peek().loc);
        expect_punct("{");
        while (!accept_punct("}")) {
            if (at_end()) fail("unterminated class body");
            skip_modifiers();
            parse_member(*t);
        }
        return t;
    }

    std::string parse_type_name() {
        std::string ty;
        if (is_keyword("void")) {
            advance();
            return "void";
        }
        if (peek().kind != TokKind::Ident) fail("expected type name");
        ty = advance().text;
        if (is_punct("[") && is_punct("]", 1)) {
            advance();
            advance();
            ty += "[]";
        }
        return ty;
    }

    void parse_member(TypeDecl& owner) {
        SourceLoc start = peek().loc;
        std::string ty = parse_type_name();
        if (peek().kind != TokKind::Ident) {
            if (is_punct("(")) throw UnsupportedConstruct("constructor", path_, start);
            fail("expected member name");
        }
        const Token& name_tok = peek();
        std::string name = advance().text;

        if (is_punct("(")) {
            auto m = std::make_unique<MethodDecl>();
            m->name = name;
            m->return_type = ty;
            m->loc = name_tok.loc;
            m->owner = &owner;
            for (const auto& existing : owner.methods) {
                if (existing->name == name) {
                    // arity checked after params are parsed
                }
            }
            advance();
            if (!is_punct(")")) {
                for (;;) {
                    auto p = std::make_unique<VarDecl>();
                    p->declared_type = parse_type_name();
                    const Token& ptok = peek();
                    p->name = expect_ident();
                    p->loc = ptok.loc;
                    p->kind = VarKind::Param;
                    p->owner_method = m.get();
                    m->params.push_back(std::move(p));
                    if (!accept_punct(",")) break;
                }
            }
            expect_punct(")");
            for (const auto& existing : owner.methods)
                if (existing->name == name && existing->arity() == m->arity())
                    throw SyntaxError(path_, name_tok.loc,
                                      "duplicate method signature " + name + "/" +
                                          std::to_string(m->arity()));
            if (is_punct(";")) throw UnsupportedConstruct("abstract-method", path_, peek().loc);
            current_method_ = m.get();
            m->body = parse_block();
            current_method_ = nullptr;
            owner.methods.push_back(std::move(m));
        } else {
            auto f = std::make_unique<VarDecl>();
            f->declared_type = ty;
            f->name = name;
            f->loc = name_tok.loc;
            f->kind = VarKind::Field;
            f->owner_type = &owner;
            if (accept_punct("=")) {
                // Field initializers have no method context to lower into.
                throw UnsupportedConstruct("field-initializer", path_, peek().loc);
            }
            expect_punct(";");
            owner.fields.push_back(std::move(f));
        }
    }

    StmtPtr parse_block() {
        auto s = std::make_unique<Stmt>(StmtKind::Block);
        s->loc = peek().loc;
        expect_punct("{");
        while (!accept_punct("}")) {
            if (at_end()) fail("unterminated block");
            s->body.push_back(parse_stmt());
        }
        return s;
    }

    bool looks_like_decl() const {
        // Type Ident ...  or  Type[] Ident ...
        if (peek().kind != TokKind::Ident) return false;
        int k = 1;
        if (is_punct("[", 1) && is_punct("]", 2)) k = 3;
        return peek(k).kind == TokKind::Ident;
    }

    StmtPtr parse_stmt() {
        const Token& t = peek();
        if (is_punct("{")) return parse_block();
        if (is_punct(";")) {
            advance();
            auto s = std::make_unique<Stmt>(StmtKind::Empty);
            s->loc = t.loc;
            return s;
        }
        if (is_keyword("if")) return parse_if();
        if (is_keyword("while")) return parse_while();
        if (is_keyword("do")) return parse_do_while();
        if (is_keyword("for")) return parse_for();
        if (is_keyword("return")) {
            auto s = std::make_unique<Stmt>(StmtKind::Return);
            s->loc = t.loc;
            advance();
            if (!is_punct(";")) s->value = parse_expr();
            expect_punct(";");
            return s;
        }
        if (is_keyword("class")) throw UnsupportedConstruct("local-class", path_, t.loc);
        if (is_keyword("new")) throw UnsupportedConstruct("object-creation", path_, t.loc);
        if (looks_like_decl()) {
            auto s = parse_var_decl();
            expect_punct(";");
            return s;
        }
        auto s = parse_assign_or_expr();
        expect_punct(";");
        return s;
    }

    StmtPtr parse_var_decl() {
        auto s = std::make_unique<Stmt>(StmtKind::VarDeclStmt);
        s->loc = peek().loc;
        auto v = std::make_unique<VarDecl>();
        v->declared_type = parse_type_name();
        const Token& name_tok = peek();
        v->name = expect_ident();
        v->loc = name_tok.loc;
        v->kind = VarKind::Local;
        v->owner_method = current_method_;
        if (is_punct(",")) throw UnsupportedConstruct("multiple-declarators", path_, peek().loc);
        if (accept_punct("=")) s->value = parse_expr();
        if (!current_method_) fail("declaration outside method");
        s->decl = v.get();
        current_method_->locals.push_back(std::move(v));
        return s;
    }

    // Assignment statement or bare expression statement.
    StmtPtr parse_assign_or_expr() {
        SourceLoc start = peek().loc;
        ExprPtr e = parse_expr();
        static const char* compound[] = {"+=", "-=", "*=", "/=", "%="};
        if (is_punct("=")) {
            advance();
            auto s = std::make_unique<Stmt>(StmtKind::Assign);
            s->loc = start;
            check_lvalue(*e);
            s->target = std::move(e);
            s->value = parse_expr();
            return s;
        }
        for (const char* op : compound) {
            if (is_punct(op)) {
                SourceLoc op_loc = peek().loc;
                advance();
                check_lvalue(*e);
                // x += v  desugars to  x = x + v
                auto s = std::make_unique<Stmt>(StmtKind::Assign);
                s->loc = start;
                auto bin = std::make_unique<Expr>(ExprKind::Binary);
                bin->loc = op_loc;
                bin->op = std::string(1, op[0]);
                bin->lhs = clone_expr(*e);
                bin->rhs = parse_expr();
                s->target = std::move(e);
                s->value = std::move(bin);
                return s;
            }
        }
        auto s = std::make_unique<Stmt>(StmtKind::ExprStmt);
        s->loc = start;
        s->value = std::move(e);
        return s;
    }

    void check_lvalue(const Expr& e) {
        if (e.kind == ExprKind::Ident || e.kind == ExprKind::FieldAccess) return;
        if (e.kind == ExprKind::Index)
            throw UnsupportedConstruct("array-store", path_, e.loc);
        throw SyntaxError(path_, e.loc, "invalid assignment target");
    }

    ExprPtr clone_expr(const Expr& e) {
        auto c = std::make_unique<Expr>(e.kind);
        c->loc = e.loc;
        c->literal = e.literal;
        c->name = e.name;
        c->op = e.op;
        if (e.lhs) c->lhs = clone_expr(*e.lhs);
        if (e.rhs) c->rhs = clone_expr(*e.rhs);
        for (const auto& a : e.args) c->args.push_back(clone_expr(*a));
        return c;
    }

    StmtPtr parse_if() {
        auto s = std::make_unique<Stmt>(StmtKind::If);
        s->loc = peek().loc;
        advance();
        expect_punct("(");
        s->cond = parse_expr();
        expect_punct(")");
        s->then_branch = parse_stmt();
        if (is_keyword("else")) {
            advance();
            s->else_branch = parse_stmt();
        }
        return s;
    }

    StmtPtr parse_while() {
        auto s = std::make_unique<Stmt>(StmtKind::While);
        s->loc = peek().loc;
        advance();
        expect_punct("(");
        s->cond = parse_expr();
        expect_punct(")");
        s->loop_body = parse_stmt();
        return s;
    }

    StmtPtr parse_do_while() {
        auto s = std::make_unique<Stmt>(StmtKind::DoWhile);
        s->loc = peek().loc;
        advance();
        s->loop_body = parse_stmt();
        if (!is_keyword("while")) fail("expected 'while' after do body");
        advance();
        expect_punct("(");
        s->cond = parse_expr();
        expect_punct(")");
        expect_punct(";");
        return s;
    }

    StmtPtr parse_for() {
        auto s = std::make_unique<Stmt>(StmtKind::For);
        s->loc = peek().loc;
        advance();
        expect_punct("(");
        if (is_punct(";")) {
            advance();
            s->init = std::make_unique<Stmt>(StmtKind::Empty);
        } else if (looks_like_decl()) {
            s->init = parse_var_decl();
            expect_punct(";");
        } else {
            s->init = parse_assign_or_expr();
            expect_punct(";");
        }
        if (!is_punct(";")) s->cond = parse_expr();
        expect_punct(";");
        if (!is_punct(")"))
            s->update = parse_assign_or_expr();
        else
            s->update = std::make_unique<Stmt>(StmtKind::Empty);
        expect_punct(")");
        s->loop_body = parse_stmt();
        return s;
    }

    // ------------------------------------------------------------------
    // Expressions, precedence climbing
    // ------------------------------------------------------------------

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_bin_level(const std::vector<const char*>& ops, ExprPtr (Parser::*next)()) {
        ExprPtr lhs = (this->*next)();
        for (;;) {
            bool matched = false;
            for (const char* op : ops) {
                if (is_punct(op)) {
                    SourceLoc op_loc = peek().loc;
                    advance();
                    auto e = std::make_unique<Expr>(ExprKind::Binary);
                    e->loc = op_loc;
                    e->op = op;
                    e->lhs = std::move(lhs);
                    e->rhs = (this->*next)();
                    e->loc.span_begin = e->lhs->loc.span_begin;
                    e->loc.span_end = e->rhs->loc.span_end;
                    e->loc.line = e->lhs->loc.line;
                    e->loc.col = e->lhs->loc.col;
                    lhs = std::move(e);
                    matched = true;
                    break;
                }
            }
            if (!matched) return lhs;
        }
    }

    ExprPtr parse_or() { return parse_bin_level({"||"}, &Parser::parse_and); }
    ExprPtr parse_and() { return parse_bin_level({"&&"}, &Parser::parse_equality); }
    ExprPtr parse_equality() { return parse_bin_level({"==", "!="}, &Parser::parse_relational); }
    ExprPtr parse_relational() {
        return parse_bin_level({"<=", ">=", "<", ">"}, &Parser::parse_additive);
    }
    ExprPtr parse_additive() { return parse_bin_level({"+", "-"}, &Parser::parse_multiplicative); }
    ExprPtr parse_multiplicative() {
        return parse_bin_level({"*", "/", "%"}, &Parser::parse_unary);
    }

    ExprPtr parse_unary() {
        if (is_punct("-") || is_punct("!")) {
            auto e = std::make_unique<Expr>(ExprKind::Unary);
            e->loc = peek().loc;
            e->op = advance().text;
            e->lhs = parse_unary();
            e->loc.span_end = e->lhs->loc.span_end;
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        for (;;) {
            if (is_punct(".")) {
                advance();
                const Token& name_tok = peek();
                std::string member = expect_ident();
                if (is_punct("(")) {
                    auto call = std::make_unique<Expr>(ExprKind::Call);
                    call->loc = name_tok.loc;
                    call->name = member;
                    call->lhs = std::move(e); // receiver
                    parse_args(*call);
                    call->loc.span_end = toks_[pos_ - 1].loc.span_end;
                    e = std::move(call);
                } else {
                    auto fa = std::make_unique<Expr>(ExprKind::FieldAccess);
                    fa->loc = name_tok.loc;
                    fa->name = member;
                    fa->lhs = std::move(e);
                    e = std::move(fa);
                }
            } else if (is_punct("[")) {
                SourceLoc open = peek().loc;
                advance();
                auto ix = std::make_unique<Expr>(ExprKind::Index);
                ix->loc = open;
                ix->lhs = std::move(e);
                ix->rhs = parse_expr();
                expect_punct("]");
                ix->loc.span_end = toks_[pos_ - 1].loc.span_end;
                e = std::move(ix);
            } else {
                return e;
            }
        }
    }

    void parse_args(Expr& call) {
        expect_punct("(");
        if (!is_punct(")")) {
            for (;;) {
                call.args.push_back(parse_expr());
                if (!accept_punct(",")) break;
            }
        }
        expect_punct(")");
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
        case TokKind::IntLit: {
            auto e = std::make_unique<Expr>(ExprKind::IntLit);
            e->loc = t.loc;
            e->literal = advance().text;
            return e;
        }
        case TokKind::StrLit: {
            auto e = std::make_unique<Expr>(ExprKind::StrLit);
            e->loc = t.loc;
            e->literal = advance().text;
            return e;
        }
        case TokKind::CharLit: {
            auto e = std::make_unique<Expr>(ExprKind::CharLit);
            e->loc = t.loc;
            e->literal = advance().text;
            return e;
        }
        case TokKind::Keyword:
            if (t.text == "true" || t.text == "false") {
                auto e = std::make_unique<Expr>(ExprKind::BoolLit);
                e->loc = t.loc;
                e->literal = advance().text;
                return e;
            }
            if (t.text == "this") {
                auto e = std::make_unique<Expr>(ExprKind::This);
                e->loc = t.loc;
                advance();
                return e;
            }
            if (t.text == "new") throw UnsupportedConstruct("object-creation", path_, t.loc);
            fail("unexpected keyword in expression");
        case TokKind::Ident: {
            std::string name = advance().text;
            if (is_punct("(")) {
                auto call = std::make_unique<Expr>(ExprKind::Call);
                call->loc = t.loc;
                call->name = name;
                parse_args(*call);
                call->loc.span_end = toks_[pos_ - 1].loc.span_end;
                return call;
            }
            auto e = std::make_unique<Expr>(ExprKind::Ident);
            e->loc = t.loc;
            e->name = name;
            return e;
        }
        case TokKind::Punct:
            if (t.text == "(") {
                advance();
                ExprPtr inner = parse_expr();
                expect_punct(")");
                return inner;
            }
            fail("unexpected token in expression");
        case TokKind::End:
            fail("unexpected end of input");
        }
        fail("unexpected token");
    }
};

std::size_t count_expr(const Expr& e) {
    std::size_t n = 1;
    if (e.lhs) n += count_expr(*e.lhs);
    if (e.rhs) n += count_expr(*e.rhs);
    for (const auto& a : e.args) n += count_expr(*a);
    return n;
}

std::size_t count_stmt(const Stmt& s) {
    std::size_t n = 1;
    for (const auto& c : s.body) n += count_stmt(*c);
    if (s.target) n += count_expr(*s.target);
    if (s.value) n += count_expr(*s.value);
    if (s.cond) n += count_expr(*s.cond);
    if (s.then_branch) n += count_stmt(*s.then_branch);
    if (s.else_branch) n += count_stmt(*s.else_branch);
    if (s.init) n += count_stmt(*s.init);
    if (s.update) n += count_stmt(*s.update);
    if (s.loop_body) n += count_stmt(*s.loop_body);
    return n;
}

} // namespace

std::size_t ast_node_count(const MethodDecl& method) {
    std::size_t n = 1 + method.params.size();
    if (method.body) n += count_stmt(*method.body);
    return n;
}

std::size_t ast_node_count(const SourceUnit& unit) {
    std::size_t n = 0;
    for (const auto& t : unit.types) {
        n += 1 + t->fields.size();
        for (const auto& m : t->methods) n += ast_node_count(*m);
    }
    return n;
}

std::unique_ptr<SourceUnit> parse_source(const std::string& text, const std::string& path) {
    Parser p(text, path);
    return p.run(text);
}

} // namespace nameflow
