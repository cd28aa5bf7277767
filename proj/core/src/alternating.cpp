#include "trilie/alternating.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace trilie {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate(std::size_t n, std::size_t k, std::size_t start, Combination& cur,
               std::vector<Combination>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    enumerate(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Combination>& combinations(std::size_t n, std::size_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<const std::vector<Combination>>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) {
    auto list = std::make_unique<std::vector<Combination>>();
    Combination cur;
    enumerate(n, k, 0, cur, *list);
    slot = std::move(list);
  }
  return *slot;
}

std::size_t combination_rank(std::size_t n, std::span<const Index> combo) {
  const std::size_t k = combo.size();
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = next; v < combo[i]; ++v) rank += binomial(n - 1 - v, k - 1 - i);
    next = combo[i] + 1;
  }
  return rank;
}

int sort_with_sign(std::span<Index> idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace trilie
