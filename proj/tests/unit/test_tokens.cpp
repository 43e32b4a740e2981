#include <doctest.h>

#include "nameflow/tokens.hpp"

#include <cctype>

using namespace nameflow;

namespace {

// Hand-executable reference: walk the name, cut at every boundary the rules
// define, lowercase the pieces. Kept dumb on purpose.
std::vector<std::string> split_by_hand(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    auto is_up = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
    auto is_low = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
    auto is_dig = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    for (std::size_t i = 0; i < name.size(); ++i) {
        char c = name[i];
        if (c == '_') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
            continue;
        }
        bool boundary = false;
        if (!cur.empty()) {
            char p = cur.back();
            if (is_low(p) && is_up(c)) boundary = true;
            if ((is_low(p) || is_up(p)) && is_dig(c)) boundary = true;
            if (is_dig(p) && (is_low(c) || is_up(c))) boundary = true;
            if (is_up(p) && is_up(c) && i + 1 < name.size() && is_low(name[i + 1]))
                boundary = true;
        }
        if (boundary) {
            parts.push_back(cur);
            cur.clear();
        }
        cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

std::string letters_digits(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

TEST_CASE("tokenize_name splits camelCase and snake_case") {
    CHECK(tokenize_name("outputBufferName") == std::vector<std::string>{"output", "buffer", "name"});
    CHECK(tokenize_name("x") == std::vector<std::string>{"x"});
    CHECK(tokenize_name("pkg_name2") == std::vector<std::string>{"pkg", "name", "2"});
    CHECK(tokenize_name("HTTPServer") == std::vector<std::string>{"http", "server"});
    CHECK(tokenize_name("pkgName") == std::vector<std::string>{"pkg", "name"});
    CHECK(tokenize_name("__x__") == std::vector<std::string>{"x"});
    CHECK(tokenize_name("a2b") == std::vector<std::string>{"a", "2", "b"});
}

TEST_CASE("tokenize_name matches the hand oracle and loses nothing") {
    const char* names[] = {
        "outputBufferName", "pkg_name2", "HTTPServer", "readLine",  "NO_OF_OPERANDS",
        "x",                "buf",       "getName",    "a2b",       "parseHTTPResponse",
        "camelCase_mixed",  "v2",        "XMLNode",    "x_y_z",     "abc123def",
    };
    for (const char* n : names) {
        CAPTURE(n);
        CHECK(tokenize_name(n) == split_by_hand(n));
        // Concatenating tokens reproduces the name's letters/digits in order.
        std::string joined;
        for (const auto& t : tokenize_name(n)) joined += t;
        CHECK(joined == letters_digits(n));
    }
}

TEST_CASE("canonical_name joins tokens") {
    CHECK(canonical_name("pkgName") == "pkg_name");
    CHECK(canonical_name("packageName") == "package_name");
    CHECK(canonical_name("Buf") == "buf");
    CHECK(canonical_name("buf") == "buf");
    // pkgName and packageName stay distinct labels
    CHECK(canonical_name("pkgName") != canonical_name("packageName"));
}

TEST_CASE("recase_like follows the original convention") {
    CHECK(recase_like({"package", "name"}, "pkgName") == "packageName");
    CHECK(recase_like({"package", "name"}, "pkg_name") == "package_name");
    CHECK(recase_like({"opcode"}, "index") == "opcode");
    CHECK(recase_like({"pkg", "name", "2"}, "oldCamel") == "pkgName2");
}
