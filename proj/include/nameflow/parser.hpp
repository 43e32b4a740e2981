#pragma once

#include "nameflow/ast.hpp"

#include <memory>
#include <string>

namespace nameflow {

/// Parse source text in the supported Java-like subset into a SourceUnit.
/// Bare top-level members are wrapped in an implicit type named after the
/// file stem. Throws SyntaxError / UnsupportedConstruct.
std::unique_ptr<SourceUnit> parse_source(const std::string& text, const std::string& path);

namespace lexer {

enum class TokKind {
    End,
    Ident,
    Keyword,
    IntLit,
    StrLit,
    CharLit,
    Punct,
};

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    SourceLoc loc;
};

/// Tokenize the whole input. Exposed for the location-soundness tests.
std::vector<Token> tokenize(const std::string& text, const std::string& path);

} // namespace lexer

} // namespace nameflow
