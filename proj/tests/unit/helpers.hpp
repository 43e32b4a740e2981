#pragma once

#include "nameflow/ast.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(NAMEFLOW_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string read_fixture(const std::string& name) {
    return read_file(fixture_path(name));
}

// Structural AST equality, ignoring byte spans (line/col still compared when
// `compare_locs` is set).
bool expr_equal(const nameflow::Expr& a, const nameflow::Expr& b);
bool stmt_equal(const nameflow::Stmt& a, const nameflow::Stmt& b);
bool unit_equal(const nameflow::SourceUnit& a, const nameflow::SourceUnit& b);

} // namespace testutil
