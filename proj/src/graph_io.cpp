#include "nameflow/graph_io.hpp"

#include <json.hpp>

#include <sstream>

namespace nameflow {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string graph_to_records(const Ufg& g, const std::string& path) {
    std::ostringstream os;
    ordered header;
    header["schema"] = "ufg/1";
    header["method"] = g.method_id;
    os << header.dump() << '\n';

    for (const auto& n : g.nodes) {
        ordered rec;
        rec["n"] = n.id;
        rec["k"] = node_kind_name(n.kind);
        rec["l"] = n.label;
        rec["loc"] = {{"line", n.loc.line}, {"col", n.loc.col}};
        if (n.decl) rec["d"] = n.decl->id(path);
        if (n.kind == NodeKind::Call) {
            rec["callee"] = n.callee;
            rec["arity"] = n.call_arity;
            if (!n.receiver_type.empty()) rec["recv"] = n.receiver_type;
        }
        os << rec.dump() << '\n';
    }
    // Edges are maintained sorted by (src, dst, label) in the graph itself.
    for (const auto& e : g.edges) {
        ordered rec;
        rec["e"] = {e.src, e.dst};
        rec["l"] = e.label.str();
        os << rec.dump() << '\n';
    }
    return os.str();
}

Ufg records_to_graph(const std::string& text) {
    Ufg g;
    std::istringstream is(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        if (!saw_header) {
            if (!rec.contains("schema") || rec["schema"] != "ufg/1")
                throw SchemaError("schema", "expected \"ufg/1\" header");
            if (!rec.contains("method") || !rec["method"].is_string())
                throw SchemaError("method", "missing in header");
            g.method_id = rec["method"].get<std::string>();
            saw_header = true;
            continue;
        }
        if (rec.contains("n")) {
            UfgNode n;
            n.id = rec.at("n").get<NodeId>();
            n.kind = node_kind_from_name(rec.at("k").get<std::string>());
            n.label = rec.at("l").get<std::string>();
            if (rec.contains("loc")) {
                n.loc.line = rec["loc"].value("line", 0);
                n.loc.col = rec["loc"].value("col", 0);
            }
            if (rec.contains("callee")) n.callee = rec["callee"].get<std::string>();
            if (rec.contains("arity")) n.call_arity = rec["arity"].get<int>();
            if (rec.contains("recv")) n.receiver_type = rec["recv"].get<std::string>();
            if (n.id != static_cast<NodeId>(g.nodes.size()))
                throw SchemaError("n", "node ids must be dense and ordered");
            g.nodes.push_back(std::move(n));
        } else if (rec.contains("e")) {
            UfgEdge e;
            e.src = rec.at("e").at(0).get<NodeId>();
            e.dst = rec.at("e").at(1).get<NodeId>();
            e.label = EdgeLabel::parse(rec.value("l", ""));
            g.edges.push_back(e);
        } else {
            throw SchemaError("record", "neither node nor edge");
        }
    }
    if (!saw_header) throw SchemaError("schema", "empty graph file");
    return g;
}

bool graphs_isomorphic(const Ufg& a, const Ufg& b) {
    if (a.method_id != b.method_id) return false;
    if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        const UfgNode& x = a.nodes[i];
        const UfgNode& y = b.nodes[i];
        if (x.id != y.id || x.kind != y.kind || x.label != y.label) return false;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const UfgEdge& x = a.edges[i];
        const UfgEdge& y = b.edges[i];
        if (x.src != y.src || x.dst != y.dst || !(x.label == y.label)) return false;
    }
    return true;
}

} // namespace nameflow
