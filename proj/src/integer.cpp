#include "ccfrieze/integer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccfrieze {

Integer binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0, got " +
                                         std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

}  // namespace ccfrieze
