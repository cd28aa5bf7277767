#include "trilie/report.hpp"

#include <algorithm>
#include <sstream>

namespace trilie {

void Report::record(std::string_view identity, std::vector<std::size_t> indices, Vec residual) {
  ++failures_;
  if (find(identity) == nullptr) {
    violations_.push_back({std::string(identity), std::move(indices), std::move(residual)});
  }
}

void Report::check(std::string_view identity, std::vector<std::size_t> indices, const Vec& residual) {
  ++checked_;
  if (!residual.is_zero()) record(identity, std::move(indices), residual);
}

void Report::check(std::string_view identity, std::vector<std::size_t> indices, const Rational& residual) {
  check(identity, std::move(indices), Vec{residual});
}

void Report::fail(std::string_view identity, std::vector<std::size_t> indices, Vec residual) {
  ++checked_;
  record(identity, std::move(indices), std::move(residual));
}

void Report::merge(const Report& other, std::string_view prefix) {
  checked_ += other.checked_;
  for (const auto& v : other.violations_) {
    std::string id = prefix.empty() ? v.identity : std::string(prefix) + "." + v.identity;
    if (find(id) == nullptr) violations_.push_back({std::move(id), v.indices, v.residual});
  }
  failures_ += other.failures_;
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

const Violation* Report::find(std::string_view identity) const {
  const auto it = std::find_if(violations_.begin(), violations_.end(),
                               [&](const Violation& v) { return v.identity == identity; });
  return it == violations_.end() ? nullptr : &*it;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL");
  if (!subject_.empty()) os << ' ' << subject_;
  os << " (" << checked_ << " checked, " << failures_ << " failed)";
  for (const auto& v : violations_) {
    os << "\n  " << v.identity << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << ") residual " << v.residual;
  }
  return os.str();
}

}  // namespace trilie
