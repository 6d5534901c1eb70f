#pragma once

#include "twophoton/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twophoton {

/// One offending entry. Row/column indices are given per tensor leg.
struct Mismatch {
  std::string item;
  std::vector<std::size_t> row, col;
  std::string lhs, rhs;
};

/// Outcome of an exact identity check on a truncated representation.
struct VerificationReport {
  std::string check;
  std::string kind;
  std::size_t dim = 0;
  std::size_t guard = 0;
  std::string parameter;
  bool passed = true;
  std::vector<std::string> items;
  std::vector<std::string> failed_items;
  std::optional<Mismatch> first_failure;
  /// Largest leg index at which any entry (guarded or not) disagreed; absent
  /// when both sides agree everywhere.
  std::optional<std::size_t> max_violation_index;
  std::string note;

  /// Throws VerificationError naming the first failing item.
  void require() const;
};

/// Compares two operators on V^{⊗legs} (dim V = d). Entries whose row and
/// column leg indices are all ≤ d−1−guard must agree; others only update
/// max_violation_index. Returns true when the guarded block agrees.
bool compare_guarded(const ScalarMatrix &lhs, const ScalarMatrix &rhs, std::size_t d,
                     std::size_t legs, std::size_t guard, const std::string &item,
                     VerificationReport &report);

} // namespace twophoton
