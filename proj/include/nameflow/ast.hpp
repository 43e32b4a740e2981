#pragma once

#include "nameflow/source.hpp"

#include <memory>
#include <string>
#include <vector>

namespace nameflow {

struct VarDecl;
struct MethodDecl;
struct TypeDecl;

enum class VarKind { Param, Local, Field };

/// A declared variable: the target of naming analysis.
struct VarDecl {
    std::string name;
    std::string declared_type;
    VarKind kind = VarKind::Local;
    SourceLoc loc;
    const TypeDecl* owner_type = nullptr;   // fields only
    const MethodDecl* owner_method = nullptr; // params/locals only

    /// Stable identity string: "<path>:<line>:<col>:<name>".
    std::string id(const std::string& path) const;
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class ExprKind {
    IntLit,
    StrLit,
    CharLit,
    BoolLit,
    Ident,
    This,
    FieldAccess, // base.field  (base may be null for resolver-bound bare idents)
    Index,       // base[index]
    Unary,       // op operand
    Binary,      // lhs op rhs
    Call,        // receiver.callee(args) or callee(args)
};

struct Expr {
    ExprKind kind;
    SourceLoc loc;

    // Literals
    std::string literal; // raw spelling for IntLit/StrLit/CharLit/BoolLit

    // Ident / FieldAccess / Call
    std::string name;             // identifier, field name, or callee name
    const VarDecl* binding = nullptr; // set by resolve_names for Ident/FieldAccess

    std::string op;   // Unary/Binary operator spelling
    std::unique_ptr<Expr> lhs;  // Binary lhs, Unary operand, FieldAccess/Index/Call base
    std::unique_ptr<Expr> rhs;  // Binary rhs, Index subscript
    std::vector<std::unique_ptr<Expr>> args; // Call arguments

    explicit Expr(ExprKind k) : kind(k) {}
};

using ExprPtr = std::unique_ptr<Expr>;

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

enum class StmtKind {
    Block,
    VarDeclStmt, // declaration with optional initializer
    Assign,      // target = value (compound ops already desugared)
    If,
    While,
    DoWhile,
    For,
    Return,
    ExprStmt,
    Empty,
};

struct Stmt {
    StmtKind kind;
    SourceLoc loc;

    std::vector<std::unique_ptr<Stmt>> body; // Block children
    VarDecl* decl = nullptr;                 // VarDeclStmt target (owned by method)
    ExprPtr target;                          // Assign lvalue
    ExprPtr value;                           // initializer / rhs / return value / condition-free expr
    ExprPtr cond;                            // If/While/DoWhile/For condition
    std::unique_ptr<Stmt> then_branch;
    std::unique_ptr<Stmt> else_branch;
    std::unique_ptr<Stmt> init;   // For init (VarDeclStmt/Assign/Empty)
    std::unique_ptr<Stmt> update; // For update (Assign/ExprStmt/Empty)
    std::unique_ptr<Stmt> loop_body;

    explicit Stmt(StmtKind k) : kind(k) {}
};

using StmtPtr = std::unique_ptr<Stmt>;

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct MethodDecl {
    std::string name;
    std::string return_type;
    std::vector<std::unique_ptr<VarDecl>> params;
    std::vector<std::unique_ptr<VarDecl>> locals; // filled by the parser
    StmtPtr body;
    SourceLoc loc;
    const TypeDecl* owner = nullptr;

    int arity() const { return static_cast<int>(params.size()); }
    /// Stable signature string "<Type>.<name>/<arity>".
    std::string signature() const;
};

struct TypeDecl {
    std::string name;
    std::string superclass; // empty when none
    bool implicit = false;  // synthesized wrapper for bare top-level members
    std::vector<std::unique_ptr<VarDecl>> fields;
    std::vector<std::unique_ptr<MethodDecl>> methods;
    SourceLoc loc;
};

/// One parsed source file.
struct SourceUnit {
    std::string path;
    std::string raw_text; // retained for snippet extraction; may be empty for interchange input
    std::vector<std::unique_ptr<TypeDecl>> types;
    std::vector<Diagnostic> diagnostics;
};

/// Number of AST nodes (types, members, statements, expressions); used for
/// the graph size bound.
std::size_t ast_node_count(const SourceUnit& unit);
std::size_t ast_node_count(const MethodDecl& method);

} // namespace nameflow
