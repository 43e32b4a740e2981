#include "nameflow/tokens.hpp"

#include <cctype>

namespace nameflow {

namespace {

inline bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)); }
inline bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
inline bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

std::vector<std::string> tokenize_name(const std::string& name) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            tokens.push_back(lower(cur));
            cur.clear();
        }
    };

    for (std::size_t i = 0; i < name.size(); ++i) {
        char c = name[i];
        if (c == '_' || c == '$') {
            flush();
            continue;
        }
        if (!cur.empty()) {
            char prev = cur.back();
            if (is_lower(prev) && is_upper(c)) flush();            // camelCase
            else if (is_letter(prev) && is_digit(c)) flush();      // name2
            else if (is_digit(prev) && is_letter(c)) flush();      // 2name
            else if (is_upper(prev) && is_upper(c) && i + 1 < name.size() &&
                     is_lower(name[i + 1]))
                flush(); // HTTPServer -> HTTP | Server
        }
        cur += c;
    }
    flush();
    return tokens;
}

std::string canonical_name(const std::string& name) {
    std::string out;
    for (const std::string& t : tokenize_name(name)) {
        if (!out.empty()) out += '_';
        out += t;
    }
    return out;
}

std::string recase_like(const std::vector<std::string>& tokens, const std::string& like) {
    if (tokens.empty()) return "";
    bool snake = like.find('_') != std::string::npos;
    std::string out;
    if (snake) {
        for (const std::string& t : tokens) {
            if (!out.empty()) out += '_';
            out += t;
        }
        return out;
    }
    out = tokens.front();
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::string t = tokens[i];
        if (!t.empty() && is_letter(t[0]))
            t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
        out += t;
    }
    return out;
}

} // namespace nameflow
