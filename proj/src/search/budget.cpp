#include "semisplit/search/budget.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "semisplit/core/errors.hpp"

namespace semisplit {

std::string BudgetSpec::describe() const {
  std::ostringstream out;
  if (mode == Mode::kNodalStates) {
    out << nodal_states << " nodal states/turn";
  } else {
    out << seconds << " s/turn";
  }
  return out.str();
}

BudgetSpec parse_budget_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string mode = text.substr(0, colon);
  const std::string value = colon == std::string::npos ? "" : text.substr(colon + 1);
  const char* first = value.data();
  const char* last = value.data() + value.size();
  if (mode == "fixed") {
    std::uint64_t n = 0;
    const auto [end, ec] = std::from_chars(first, last, n);
    if (ec == std::errc{} && end == last && n > 0) return BudgetSpec::states(n);
  } else if (mode == "timed") {
    double s = 0.0;
    const auto [end, ec] = std::from_chars(first, last, s);
    if (ec == std::errc{} && end == last && s > 0.0 && std::isfinite(s)) return BudgetSpec::timed(s);
  }
  throw ConfigError("bad budget '" + text + "'; expected fixed:<nodal states> or timed:<seconds>");
}

void Budget::start() {
  charged_ = 0;
  iterations_ = 0;
  start_ = Clock::now();
  const auto span = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(spec_.seconds));
  deadline_ = start_ + span;
  hard_deadline_ = start_ + span + span / 5;
}

bool Budget::should_stop() const {
  if (spec_.mode == BudgetSpec::Mode::kNodalStates) {
    return charged_ >= spec_.nodal_states || iterations_ >= spec_.nodal_states;
  }
  return Clock::now() >= deadline_;
}

double Budget::elapsed_seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

}  // namespace semisplit
