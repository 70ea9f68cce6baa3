#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <string>

namespace semisplit {

// Thrown from inside an iteration when the budget runs out; the iteration is
// discarded.
struct BudgetExhausted : std::exception {
  const char* what() const noexcept override { return "budget exhausted"; }
};

struct BudgetSpec {
  enum class Mode { kNodalStates, kSeconds };
  Mode mode = Mode::kNodalStates;
  std::uint64_t nodal_states = 0;
  double seconds = 0.0;

  static BudgetSpec states(std::uint64_t n) { return {Mode::kNodalStates, n, 0.0}; }
  static BudgetSpec timed(double s) { return {Mode::kSeconds, 0, s}; }
  [[nodiscard]] bool deterministic() const { return mode == Mode::kNodalStates; }
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const BudgetSpec&, const BudgetSpec&) = default;
};

// "fixed:N" (nodal states per turn) or "timed:S" (seconds per turn); throws
// ConfigError otherwise.
BudgetSpec parse_budget_spec(const std::string& text);

// One turn's budget. A fixed budget charges each nodal state materialized by
// the search and never lets the count pass the limit; it also stops after as
// many iterations as states, so a fully explored tree cannot loop forever.
// A timed budget stops between iterations at the deadline and aborts the
// running iteration at 120% of it.
class Budget {
 public:
  explicit Budget(BudgetSpec spec) : spec_(spec) {}

  void start();
  void charge() {
    if (spec_.mode == BudgetSpec::Mode::kNodalStates) {
      if (charged_ >= spec_.nodal_states) throw BudgetExhausted{};
    } else if ((charged_ & 63u) == 0 && Clock::now() >= hard_deadline_) {
      throw BudgetExhausted{};
    }
    ++charged_;
  }
  void count_iteration() { ++iterations_; }
  [[nodiscard]] bool should_stop() const;

  [[nodiscard]] std::uint64_t charged() const { return charged_; }
  [[nodiscard]] std::uint64_t iterations() const { return iterations_; }
  [[nodiscard]] double elapsed_seconds() const;
  [[nodiscard]] const BudgetSpec& spec() const { return spec_; }

 private:
  using Clock = std::chrono::steady_clock;

  BudgetSpec spec_;
  std::uint64_t charged_ = 0;
  std::uint64_t iterations_ = 0;
  Clock::time_point start_{};
  Clock::time_point deadline_{};
  Clock::time_point hard_deadline_{};
};

}  // namespace semisplit
