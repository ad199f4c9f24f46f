#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace islecolor {

using Clock = std::chrono::steady_clock;

/// Optional wall-clock cutoff. A default-constructed deadline never passes.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}

  static Deadline after(Clock::duration d) { return Deadline(Clock::now() + d); }

  bool bounded() const { return at_.has_value(); }
  bool passed() const { return at_.has_value() && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

/// Per-island accounting of fitness evaluations.
///
/// One evaluation is one candidate solution whose fitness becomes known at
/// population level: an initial member, or an operator output after its
/// TabuCol refinement. Callers ask for a slot with try_consume() before
/// producing a candidate; the slot is refused once the evaluation cap is
/// reached, the deadline has passed, or (when enabled) a proper coloring
/// has been reported.
class SearchBudget {
 public:
  SearchBudget() = default;
  SearchBudget(std::optional<std::uint64_t> max_evaluations, Deadline deadline,
               bool stop_on_solution)
      : max_evaluations_(max_evaluations),
        deadline_(deadline),
        stop_on_solution_(stop_on_solution) {}

  bool try_consume() {
    if (exhausted()) return false;
    ++evaluations_;
    return true;
  }

  void report(std::int64_t conflicts) {
    if (conflicts == 0) solved_ = true;
  }

  bool exhausted() const {
    if (stop_on_solution_ && solved_) return true;
    if (max_evaluations_ && evaluations_ >= *max_evaluations_) return true;
    return deadline_.passed();
  }

  std::uint64_t evaluations() const { return evaluations_; }
  bool solved() const { return solved_; }
  const Deadline& deadline() const { return deadline_; }

 private:
  std::optional<std::uint64_t> max_evaluations_;
  Deadline deadline_;
  bool stop_on_solution_ = false;
  bool solved_ = false;
  std::uint64_t evaluations_ = 0;
};

}  // namespace islecolor
