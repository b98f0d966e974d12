// Verification reports shared by every checker.
#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ver4 {

enum class Status { Pass, Fail, Error };

inline std::string_view toString(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

/// Process exit code for a status: 0, 1 or 2.
inline int exitCode(Status s) { return static_cast<int>(s); }

struct Violation {
  std::string law;
  std::string witness;
};

class Report {
 public:
  static constexpr std::size_t kMaxStored = 16;

  Report() = default;
  explicit Report(std::string name) : name_(std::move(name)) {}

  [[nodiscard]] const std::string& name() const { return name_; }

  /// Records one check. The witness callback only runs on failure.
  template <typename WitnessFn>
  void check(bool ok, std::string_view law, WitnessFn&& witness) {
    ++checks_;
    if (!ok) fail(law, witness());
  }
  void check(bool ok, std::string_view law) {
    check(ok, law, [] { return std::string(); });
  }

  void fail(std::string_view law, std::string witness) {
    ++failures_;
    if (violations_.size() < kMaxStored) violations_.push_back({std::string(law), std::move(witness)});
  }

  void error(std::string message) {
    errored_ = true;
    errors_.push_back(std::move(message));
  }

  void note(std::string line) { notes_.push_back(std::move(line)); }

  /// Merges a sub-report, prefixing its laws with the sub-report name.
  void absorb(const Report& other) {
    checks_ += other.checks_;
    failures_ += other.failures_;
    for (const auto& v : other.violations_) {
      if (violations_.size() >= kMaxStored) break;
      violations_.push_back({other.name_.empty() ? v.law : other.name_ + ": " + v.law, v.witness});
    }
    for (const auto& e : other.errors_) {
      errored_ = true;
      errors_.push_back(other.name_.empty() ? e : other.name_ + ": " + e);
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
  }

  [[nodiscard]] Status status() const {
    if (errored_) return Status::Error;
    return failures_ == 0 ? Status::Pass : Status::Fail;
  }
  [[nodiscard]] bool passed() const { return status() == Status::Pass; }
  [[nodiscard]] std::size_t checks() const { return checks_; }
  [[nodiscard]] std::size_t failures() const { return failures_; }
  [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }
  [[nodiscard]] const std::vector<std::string>& errors() const { return errors_; }
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

  /// "name: PASS (123 checks)" or the first violation.
  [[nodiscard]] std::string summary() const {
    std::ostringstream os;
    if (!name_.empty()) os << name_ << ": ";
    os << toString(status()) << " (" << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed";
    os << ")";
    if (!errors_.empty()) os << " " << errors_.front();
    if (!violations_.empty()) {
      os << " first violation: " << violations_.front().law;
      if (!violations_.front().witness.empty()) os << " at " << violations_.front().witness;
    }
    return os.str();
  }

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  bool errored_ = false;
  std::vector<Violation> violations_;
  std::vector<std::string> errors_;
  std::vector<std::string> notes_;
};

}  // namespace ver4
