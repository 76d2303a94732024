#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wkern::acceptance {

enum class Scale { small, full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs every acceptance check in order; `on_result` sees each result as soon
/// as it is known.
std::vector<CriterionResult> run_all(Scale scale,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 4 title: detail (1.2 s)"
std::string format_line(const CriterionResult& r);

}  // namespace wkern::acceptance
