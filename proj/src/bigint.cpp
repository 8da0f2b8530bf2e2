#include "dexter/bigint.hpp"

#include <vector>

namespace dexter {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt motzkin(int n) {
  static std::vector<BigInt> cache{1};
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    BigInt v = cache[static_cast<size_t>(m - 1)];
    for (int k = 0; k <= m - 2; ++k)
      v += cache[static_cast<size_t>(k)] * cache[static_cast<size_t>(m - 2 - k)];
    cache.push_back(v);
  }
  return cache[static_cast<size_t>(n)];
}

BigInt narayana(int n, int k) {
  if (n <= 0 || k < 1 || k > n) return n == 0 && k == 0 ? 1 : 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

}  // namespace dexter
