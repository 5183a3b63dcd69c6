#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace holotest {

enum class Severity { error, warning };

// Structured finding attached to a document location. Error codes start
// with E_, warning codes with W_.
struct Diagnostic {
  std::string code;
  Severity severity = Severity::error;
  std::string path;  // slash-separated document path, e.g. /connections/0/from
  std::optional<int> line;
  std::optional<int> col;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

inline Diagnostic make_error(std::string code, std::string path, std::string message) {
  return Diagnostic{std::move(code), Severity::error, std::move(path),
                    std::nullopt, std::nullopt, std::move(message)};
}

inline Diagnostic make_warning(std::string code, std::string path, std::string message) {
  return Diagnostic{std::move(code), Severity::warning, std::move(path),
                    std::nullopt, std::nullopt, std::move(message)};
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::error) return true;
  }
  return false;
}

inline void append_diagnostics(std::vector<Diagnostic>& dst, std::vector<Diagnostic> src) {
  for (auto& d : src) dst.push_back(std::move(d));
}

inline const char* severity_name(Severity s) {
  return s == Severity::error ? "error" : "warning";
}

inline std::string format_diagnostic(const Diagnostic& d) {
  std::string out = severity_name(d.severity);
  out += " ";
  out += d.code;
  if (!d.path.empty()) {
    out += " ";
    out += d.path;
  }
  out += ": ";
  out += d.message;
  if (d.line) {
    out += " [" + std::to_string(*d.line);
    if (d.col) out += ":" + std::to_string(*d.col);
    out += "]";
  }
  return out;
}

// Value-or-diagnostics carrier used by operations that can fail. A missing
// value always comes with at least one error diagnostic.
template <typename T>
struct Result {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value() && !has_errors(diagnostics); }

  static Result failure(std::vector<Diagnostic> diags) {
    Result r;
    r.diagnostics = std::move(diags);
    return r;
  }
  static Result failure(Diagnostic d) {
    Result r;
    r.diagnostics.push_back(std::move(d));
    return r;
  }
  static Result success(T v, std::vector<Diagnostic> diags = {}) {
    Result r;
    r.value = std::move(v);
    r.diagnostics = std::move(diags);
    return r;
  }
};

}  // namespace holotest
