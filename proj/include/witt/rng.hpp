#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

// Deterministic random stream, format v1: a single std::mt19937_64 seeded
// directly, with bounded draws by rejection. The mt19937_64 output sequence
// is pinned by the C++ standard, so runs reproduce across platforms as long
// as draw order is unchanged. Changing draw order is a format break.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform on [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw usage_error("DetRng::below: empty range");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    while (true) {
      std::uint64_t v = gen_();
      if (v < limit) return v % n;
    }
  }

  // Uniform on [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw usage_error("DetRng::range: empty range");
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return below(2) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace witt
