#pragma once

#include <string>

namespace uwm {

enum class VerdictKind { ok, violation, structure_mismatch };

// Outcome of an exact check. A failing verdict carries the first
// counterexample found: (i, j) indices whose meaning depends on the check,
// plus a human-readable detail line. Violations are data, not exceptions;
// exceptions are reserved for precondition/usage errors.
struct Verdict {
  VerdictKind kind = VerdictKind::ok;
  std::string detail;
  int i = -1;
  int j = -1;

  explicit operator bool() const { return kind == VerdictKind::ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string detail, int i = -1, int j = -1) {
    return {VerdictKind::violation, std::move(detail), i, j};
  }
  static Verdict mismatch(std::string detail) {
    return {VerdictKind::structure_mismatch, std::move(detail), -1, -1};
  }
};

}  // namespace uwm
