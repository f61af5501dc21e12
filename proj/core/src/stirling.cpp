#include "peterson/stirling.hpp"

#include <algorithm>
#include <vector>

#include "peterson/errors.hpp"

namespace peterson {

BigInt stirling2(int k, int j) {
  if (k < 0 || j < 0) throw DomainError("stirling2 arguments must be nonnegative");
  if (j > k) return 0;
  if (k == 0) return 1;  // j == 0 here
  if (j == 0) return 0;
  std::vector<BigInt> row(j + 1, 0);
  row[0] = 1;  // row for k = 0
  for (int kk = 1; kk <= k; ++kk) {
    for (int jj = std::min(j, kk); jj >= 1; --jj)
      row[jj] = jj * row[jj] + row[jj - 1];
    row[0] = 0;
  }
  return row[j];
}

}  // namespace peterson
