#pragma once

#include "orbitkit/partition.hpp"

namespace orbitkit {

/// The X-collapse: the unique maximal type-X partition dominated by p.
///
/// For X = A this is the identity and never errors. For X in {B,C,D} the
/// total size must have the right parity (ParityMismatch otherwise), and
/// the result is computed by a recursive split: pick the largest part
/// value at which p violates the type constraint, split the parts strictly
/// above it, and combine the collapses of the two pieces according to the
/// parities of the length and size of the upper piece. When the violating
/// value is the largest part, the split point moves down by one so the
/// upper piece is nonempty. Partitions already of type X are fixed.
Partition collapse(const Partition& p, ClassicalType x);

/// Brute-force definition of the collapse: enumerate all type-X partitions
/// of |p| dominated by p, require a unique dominance-maximum, return it.
/// Exists as an independent cross-check of collapse(); sizes above
/// `size_guard` throw SizeGuardExceeded. NoUniqueMaximum signals an
/// implementation bug and must never fire.
Partition collapse_oracle(const Partition& p, ClassicalType x, int size_guard = 24);

} // namespace orbitkit
