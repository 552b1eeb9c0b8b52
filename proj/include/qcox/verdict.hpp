#pragma once

#include <string>

namespace qcox {

/// Outcome of a single certification: pass, or fail with a rendered
/// witness pinpointing the first offending identity/instance.
struct Verdict {
  bool pass = true;
  std::string witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return pass; }
};

} // namespace qcox
