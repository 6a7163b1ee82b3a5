#pragma once

// Small independent oracles used to freeze expected values. Nothing here
// calls into the library code under test.

#include <cstdint>
#include <vector>

namespace oracle {

using Series = std::vector<std::int64_t>;

inline Series multiply(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline Series power(const Series& a, int e) {
  Series out{1};
  for (int k = 0; k < e; ++k) out = multiply(out, a);
  return out;
}

// 1 + t + ... + t^(q-1)
inline Series geometric(long q) { return Series(static_cast<std::size_t>(q), 1); }

// Hilbert series of A: (1 + t) (1 + t + ... + t^(q-1))^N.
inline Series hilbert_A(int N, long q) { return multiply({1, 1}, power(geometric(q), N)); }

inline std::int64_t at(const Series& s, long i) {
  return i < 0 || i >= static_cast<long>(s.size()) ? 0 : s[static_cast<std::size_t>(i)];
}

// First `terms` coefficients of (1 + t) / (1 - t)^N, the Hilbert series of a
// quadric hypersurface in N + 1 variables.
inline Series quadric_hypersurface(int N, int terms) {
  const auto size = static_cast<std::size_t>(terms);
  // 1 / (1 - t)^N by N rounds of prefix sums.
  Series acc(size, 0);
  acc[0] = 1;
  for (int k = 0; k < N; ++k) {
    std::int64_t running = 0;
    for (auto& v : acc) {
      running += v;
      v = running;
    }
  }
  Series out(size, 0);
  for (std::size_t i = 0; i < size; ++i) out[i] = acc[i] + (i > 0 ? acc[i - 1] : 0);
  return out;
}

}  // namespace oracle
