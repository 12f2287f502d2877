#pragma once

#include <functional>
#include <vector>

#include "orbitkit/partition.hpp"

namespace orbitkit {

/// Visit every partition of n (largest part first, lexicographically
/// decreasing). n = 0 visits the empty partition once.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// All partitions of n, in the visiting order of for_each_partition.
std::vector<Partition> partitions_of(int n);

/// All type-X partitions of n. Empty when the parity of n is wrong for X.
std::vector<Partition> partitions_of_type(int n, ClassicalType x);

} // namespace orbitkit
