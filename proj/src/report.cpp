#include "twophoton/report.hpp"

#include <algorithm>

namespace twophoton {

void VerificationReport::require() const {
  if (passed)
    return;
  std::string what = check + " failed";
  if (first_failure)
    what += " for " + first_failure->item + ": lhs " + first_failure->lhs +
            " != rhs " + first_failure->rhs;
  throw VerificationError(what);
}

namespace {
std::vector<std::size_t> digits(std::size_t idx, std::size_t d, std::size_t legs) {
  std::vector<std::size_t> out(legs);
  for (std::size_t k = legs; k-- > 0;) {
    out[k] = idx % d;
    idx /= d;
  }
  return out;
}
} // namespace

bool compare_guarded(const ScalarMatrix &lhs, const ScalarMatrix &rhs, std::size_t d,
                     std::size_t legs, std::size_t guard, const std::string &item,
                     VerificationReport &report) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DomainError("compare_guarded: shape mismatch for " + item);
  report.items.push_back(item);
  const std::size_t limit = d > guard ? d - 1 - guard : 0;
  const bool any_guarded = d > guard;
  bool ok = true;
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (lhs(i, j) == rhs(i, j))
        continue;
      auto ri = digits(i, d, legs), cj = digits(j, d, legs);
      std::size_t top = std::max(*std::max_element(ri.begin(), ri.end()),
                                 *std::max_element(cj.begin(), cj.end()));
      report.max_violation_index =
          std::max(report.max_violation_index.value_or(0), top);
      if (!any_guarded || top > limit)
        continue;
      ok = false;
      if (!report.first_failure)
        report.first_failure =
            Mismatch{item, ri, cj, lhs(i, j).to_string(), rhs(i, j).to_string()};
    }
  if (!ok) {
    report.passed = false;
    report.failed_items.push_back(item);
  }
  return ok;
}

} // namespace twophoton
