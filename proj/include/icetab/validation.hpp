#ifndef ICETAB_VALIDATION_HPP
#define ICETAB_VALIDATION_HPP

#include <string>
#include <vector>

#include "icetab/errors.hpp"

namespace icetab {

// Structural problems (wrong dimensions, boxes missing from a shape) are
// kept apart from rule violations on a well-formed object.
enum class ViolationKind { structure, rule };

struct Violation {
  ViolationKind kind = ViolationKind::rule;
  std::string rule;  // short identifier, e.g. "row-alternation"
  int row = 0;       // 1-based coordinates where applicable, 0 otherwise
  int col = 0;
  std::string detail;
};

class ValidationReport {
 public:
  ValidationReport() = default;

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const Violation* first() const {
    return violations_.empty() ? nullptr : &violations_.front();
  }

  void add(ViolationKind kind, std::string rule, int row, int col,
           std::string detail) {
    violations_.push_back(
        {kind, std::move(rule), row, col, std::move(detail)});
  }
  bool has_structural() const {
    for (const auto& v : violations_)
      if (v.kind == ViolationKind::structure) return true;
    return false;
  }

  std::string summary() const {
    if (ok()) return "valid";
    std::string s;
    for (const auto& v : violations_) {
      if (!s.empty()) s += "; ";
      s += v.rule;
      if (v.row || v.col)
        s += " at (" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
      if (!v.detail.empty()) s += ": " + v.detail;
    }
    return s;
  }

  // For operations whose precondition is a valid object.
  void require(const std::string& what) const {
    if (!ok()) throw InvalidInput(what + " invalid: " + summary());
  }

 private:
  std::vector<Violation> violations_;
};

}  // namespace icetab

#endif
