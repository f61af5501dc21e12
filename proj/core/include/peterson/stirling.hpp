#ifndef PETERSON_STIRLING_HPP
#define PETERSON_STIRLING_HPP

#include "peterson/numeric.hpp"

namespace peterson {

// Stirling number of the second kind S(k, j): partitions of a k-set into j
// nonempty blocks.  Computed by the recurrence
//   S(k+1, j) = j S(k, j) + S(k, j-1)
// with S(0,0) = 1, S(k,0) = 0 for k > 0 and S(k,j) = 0 for j > k.
BigInt stirling2(int k, int j);

}  // namespace peterson

#endif  // PETERSON_STIRLING_HPP
