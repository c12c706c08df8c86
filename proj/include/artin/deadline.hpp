#ifndef ARTIN_DEADLINE_HPP_
#define ARTIN_DEADLINE_HPP_

// Cooperative wall-clock budgets. Long searches poll expired() and throw
// BudgetExhausted; nothing is interrupted from outside.

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace artin {

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::string const& what) : std::runtime_error(what) {}
};

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;  // never expires
  explicit Deadline(Clock::duration budget) : end_(Clock::now() + budget) {}

  static Deadline never() { return Deadline(); }

  bool expired() const { return end_ && Clock::now() >= *end_; }

  void check(char const* what) const {
    if (expired()) throw BudgetExhausted(std::string("budget exhausted during ") + what);
  }

 private:
  std::optional<Clock::time_point> end_;
};

// "1s", "10m", "500ms", "2h"; a bare number means seconds.
inline std::chrono::milliseconds parse_duration(std::string const& text) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (std::exception const&) {
    throw std::invalid_argument("bad duration: " + text);
  }
  std::string unit = text.substr(pos);
  double ms = 0;
  if (unit.empty() || unit == "s") {
    ms = v * 1000;
  } else if (unit == "ms") {
    ms = v;
  } else if (unit == "m" || unit == "min") {
    ms = v * 60'000;
  } else if (unit == "h") {
    ms = v * 3'600'000;
  } else {
    throw std::invalid_argument("bad duration unit: " + text);
  }
  if (v < 0) throw std::invalid_argument("negative duration: " + text);
  return std::chrono::milliseconds(static_cast<long long>(ms));
}

}  // namespace artin

#endif  // ARTIN_DEADLINE_HPP_
