#pragma once

#include "nameflow/ast.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nameflow {

using NodeId = std::int32_t;

enum class NodeKind {
    VarRef,
    FieldRef,
    Const,
    BinOp,
    UnOp,
    Call,
    Return,
    Join,
    Begin,
    End,
    ArraySlot,
};

std::string node_kind_name(NodeKind k);
NodeKind node_kind_from_name(const std::string& s);

/// Edge labels. #argK carries its index; everything else is a fixed tag.
struct EdgeLabel {
    enum class Tag {
        Unlabeled,
        L,
        R,
        Arg,      // #argK
        Ret,      // #return
        This,
        Cond,     // condition/predicate input into Join/Begin/End
        CondTrue,
        CondFalse,
    };
    Tag tag = Tag::Unlabeled;
    int arg_index = -1;

    static EdgeLabel unlabeled() { return {}; }
    static EdgeLabel left() { return {Tag::L, -1}; }
    static EdgeLabel right() { return {Tag::R, -1}; }
    static EdgeLabel arg(int k) { return {Tag::Arg, k}; }
    static EdgeLabel ret() { return {Tag::Ret, -1}; }
    static EdgeLabel receiver() { return {Tag::This, -1}; }
    static EdgeLabel cond() { return {Tag::Cond, -1}; }
    static EdgeLabel cond_true() { return {Tag::CondTrue, -1}; }
    static EdgeLabel cond_false() { return {Tag::CondFalse, -1}; }

    /// Wire spelling: "", "L", "R", "#arg0", "#return", "this", "cond",
    /// "cond:true", "cond:false".
    std::string str() const;
    static EdgeLabel parse(const std::string& s);

    friend bool operator==(const EdgeLabel& a, const EdgeLabel& b) {
        return a.tag == b.tag && a.arg_index == b.arg_index;
    }
    friend bool operator<(const EdgeLabel& a, const EdgeLabel& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        return a.arg_index < b.arg_index;
    }
};

struct UfgNode {
    NodeId id = -1;
    NodeKind kind = NodeKind::VarRef;
    /// Descriptor: operator symbol for ops, callee name + "()" for calls,
    /// raw identifier for VarRef/FieldRef, "const" for Const, node-kind name
    /// for Join/Begin/End/Return, "[]" for ArraySlot.
    std::string label;
    const VarDecl* decl = nullptr;
    SourceLoc loc;

    // Call-only: callee name, argument count and receiver static type
    // ("" unknown/external) recorded for interprocedural resolution.
    std::string callee;
    int call_arity = 0;
    std::string receiver_type;
    bool has_receiver = false;
};

struct UfgEdge {
    NodeId src = -1;
    NodeId dst = -1;
    EdgeLabel label;
};

inline bool operator<(const UfgEdge& a, const UfgEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.label < b.label;
}

/// Use-flow graph of one method: nodes are value locations and operations,
/// edges show value transmission.
struct Ufg {
    const MethodDecl* method = nullptr;
    std::string method_id; // "<Type>.<name>/<arity>"
    std::vector<UfgNode> nodes;
    std::vector<UfgEdge> edges; // kept sorted by (src, dst, label)

    const UfgNode& node(NodeId id) const { return nodes[static_cast<std::size_t>(id)]; }

    std::vector<const UfgEdge*> out_edges(NodeId id) const;
    std::vector<const UfgEdge*> in_edges(NodeId id) const;
};

/// Name-resolution context for typing call receivers during lowering; spans
/// the whole program.
struct TypeTable {
    std::map<std::string, const TypeDecl*> types;

    void add_unit(const SourceUnit& unit);
    const TypeDecl* find(const std::string& name) const;
    /// Method with given name+arity on `type` or its superclasses.
    const MethodDecl* find_method(const std::string& type, const std::string& name,
                                  int arity) const;
};

/// Lower one scope-annotated method to its UFG. Throws InternalLoweringError
/// when a graph invariant breaks (frontend bug).
Ufg build_method_graph(const MethodDecl& method, const TypeTable& types = {});

/// Check structural invariants; throws InternalLoweringError on violation.
void validate_graph(const Ufg& g);

/// All maximal source-to-Return paths, rendered "desc →label desc → ...".
/// Used by the figure-replay tests.
std::vector<std::string> maximal_return_paths(const Ufg& g);

} // namespace nameflow
