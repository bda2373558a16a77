#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace baker {

/// Deterministic RNG wrapper. Bounded draws are implemented by hand so that
/// identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  /// Uniform value in [0, n).
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  /// k distinct elements of pool, in sorted order.
  template <typename T>
  std::vector<T> sample(std::vector<T> pool, size_t k) {
    shuffle(pool);
    if (k < pool.size()) pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

inline long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace baker
