#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chctk {

struct SourcePos {
  int line = 0;
  int col = 0;
  bool known() const { return line > 0; }
  bool operator==(const SourcePos&) const = default;
};

enum class Severity { Error, Warning };

/// A parse/check finding tied to a source location (line/col are 1-based;
/// 0 means "no location", used for whole-benchmark findings).
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  SourcePos pos;

  std::string str() const {
    std::string out = severity == Severity::Error ? "error" : "warning";
    if (pos.known()) {
      out += " at " + std::to_string(pos.line) + ":" + std::to_string(pos.col);
    }
    return out + ": " + message;
  }
};

inline bool hasErrors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags)
    if (d.severity == Severity::Error) return true;
  return false;
}

/// Domain error: violated precondition of a pipeline operation
/// (e.g. merging a benchmark without queries). Distinct from I/O and
/// usage errors, which surface as std::runtime_error or CLI failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chctk
