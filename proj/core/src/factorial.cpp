#include "factorial.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace angmom::detail {

namespace {

struct FactorialTable {
  std::shared_mutex mutex;
  std::deque<BigInt> values{BigInt(1)};
};

FactorialTable &table() {
  static FactorialTable t;
  return t;
}

} // namespace

const BigInt &factorial(int n) {
  if (n < 0)
    throw std::domain_error("factorial of a negative number");
  auto &t = table();
  {
    std::shared_lock lock(t.mutex);
    if (static_cast<std::size_t>(n) < t.values.size())
      return t.values[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(t.mutex);
  while (t.values.size() <= static_cast<std::size_t>(n)) {
    const auto k = t.values.size();
    t.values.push_back(t.values.back() * static_cast<unsigned long>(k));
  }
  return t.values[static_cast<std::size_t>(n)];
}

BigInt falling_ratio(int n, int k) {
  if (k < 0 || k > n)
    throw std::domain_error("falling_ratio: need 0 <= k <= n");
  BigInt r(1);
  for (int i = k + 1; i <= n; ++i)
    r *= static_cast<unsigned long>(i);
  return r;
}

} // namespace angmom::detail
