#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stairgf/rational.hpp"

namespace stairgf {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

/// First disagreement of a check: the exponent where it occurs, or -1 for a structural
/// comparison, with both sides rendered exactly.
struct Witness {
  int exponent = -1;
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  int order_checked = 0;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return status == CheckStatus::Pass; }
  std::string to_text() const;
  /// One JSON object on a single line.
  std::string to_machine() const;
};

struct CheckInfo {
  std::string id;
  std::string statement;
};

inline constexpr int kDefaultCheckOrder = 40;

const std::vector<CheckInfo>& check_catalog();

/// Throws UnknownNameError for an id outside the catalog.
CheckReport run_check(std::string_view id, int order = kDefaultCheckOrder);

/// Every check in catalog order; failures are reported, not thrown.
std::vector<CheckReport> run_all(int order = kDefaultCheckOrder, bool parallel = false);

}  // namespace stairgf
