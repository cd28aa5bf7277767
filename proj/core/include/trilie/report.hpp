#pragma once

#include "trilie/matrix.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace trilie {

struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vec residual;
};

/// Outcome of an exhaustive identity check. Only the first violation of each
/// identity is kept; `failures()` counts all of them.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  /// Records one checked tuple; a nonzero residual is a violation.
  void check(std::string_view identity, std::vector<std::size_t> indices, const Vec& residual);
  void check(std::string_view identity, std::vector<std::size_t> indices, const Rational& residual);
  /// Records a violation that has no natural residual vector.
  void fail(std::string_view identity, std::vector<std::size_t> indices, Vec residual = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }

  /// Appends another report; identities are prefixed with `prefix` when given.
  void merge(const Report& other, std::string_view prefix = {});

  [[nodiscard]] bool passed() const { return failures_ == 0; }
  [[nodiscard]] std::size_t checked() const { return checked_; }
  [[nodiscard]] std::size_t failures() const { return failures_; }
  [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }
  [[nodiscard]] const std::string& subject() const { return subject_; }
  void set_subject(std::string s) { subject_ = std::move(s); }

  /// First violation of `identity`, or nullptr.
  [[nodiscard]] const Violation* find(std::string_view identity) const;
  /// One-line summary followed by one line per stored violation.
  [[nodiscard]] std::string summary() const;

 private:
  void record(std::string_view identity, std::vector<std::size_t> indices, Vec residual);

  std::string subject_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

}  // namespace trilie
