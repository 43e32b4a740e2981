#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nameflow {

/// Position of a token or node in its source file. Lines and columns are
/// 1-based; the byte span is a half-open range into the file's raw text.
struct SourceLoc {
    int line = 0;
    int col = 0;
    std::size_t span_begin = 0;
    std::size_t span_end = 0;

    bool valid() const { return line > 0 && col > 0; }
};

inline bool operator==(const SourceLoc& a, const SourceLoc& b) {
    return a.line == b.line && a.col == b.col && a.span_begin == b.span_begin &&
           a.span_end == b.span_end;
}

enum class Severity { Note, Warning, Error };

/// Non-fatal finding attached to a file position (unresolved identifier,
/// dropped binding, truncated pattern budget, ...).
struct Diagnostic {
    Severity severity = Severity::Warning;
    std::string path;
    SourceLoc loc;
    std::string message;
};

std::string severity_name(Severity s);

/// Fatal parse failure: the first offending token and why.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string path, SourceLoc loc, const std::string& message)
        : std::runtime_error(message), path_(std::move(path)), loc_(loc) {}

    const std::string& path() const { return path_; }
    const SourceLoc& loc() const { return loc_; }

private:
    std::string path_;
    SourceLoc loc_;
};

/// Syntactically recognizable construct that is outside the supported
/// language subset (lambdas, array stores, increments, ...).
class UnsupportedConstruct : public std::runtime_error {
public:
    UnsupportedConstruct(std::string construct, std::string path, SourceLoc loc)
        : std::runtime_error("unsupported construct: " + construct),
          construct_(std::move(construct)), path_(std::move(path)), loc_(loc) {}

    const std::string& construct() const { return construct_; }
    const std::string& path() const { return path_; }
    const SourceLoc& loc() const { return loc_; }

private:
    std::string construct_;
    std::string path_;
    SourceLoc loc_;
};

/// Malformed interchange document: names the missing or ill-typed field.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& field, const std::string& detail)
        : std::runtime_error("schema error at \"" + field + "\": " + detail), field_(field) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Graph invariant violated while lowering; indicates a frontend bug and
/// aborts the file.
class InternalLoweringError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace nameflow
