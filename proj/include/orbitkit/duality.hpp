#pragma once

#include <cstdint>
#include <vector>

#include "orbitkit/collapse.hpp"
#include "orbitkit/partition.hpp"

namespace orbitkit {

/// The dual type X' paired with X: (A,A), (B,C), (C,B), (D,D).
ClassicalType dual_type(ClassicalType x);

/// One of the four source/target pairs the duality moves between.
struct DualityCase {
    ClassicalType source;
    ClassicalType target;
};

inline DualityCase duality_case(ClassicalType source) {
    return {source, dual_type(source)};
}

/// Barbasch-Vogan duality on partitions.
///   A: p*          B: ((p-)_C)*       C: ((p+)_B)*       D: (p*)_D
/// Requires is_type(p, X) (TypeMismatch otherwise); the result lies in the
/// class of the dual type, which is asserted.
Partition dbv(const Partition& p, ClassicalType x);

/// Left side of the compatibility-with-induction identity:
/// dbv(p ⊔ [b^{2d}], X). Requires X in {B,C,D} and is_type(p, X).
Partition key_lemma_lhs(const Partition& p, ClassicalType x, int b, int d);

/// Right side of the identity: ([(2d)^b] + dbv(p, X))_{X'}.
Partition key_lemma_rhs(const Partition& p, ClassicalType x, int b, int d);

/// Case analysis of the inner collapse on the left side. The generic value
/// is inner ⊔ [b^{2d}]; the exceptional value, taken exactly when
/// conditions (a), (b), (c) all hold, is inner ⊔ [b+1, b^{2d-2}, b-1].
/// Here inner is (p-)_C for X=B, (p+)_B for X=C, and ((p+)-)_C for X=D,
/// and the conditions are
///   B: b odd,  |p_{>b}| odd,              p_{=b} empty
///   C: b even, l(p_{>b}) + |p_{>b}| even, p_{=b} empty
///   D: b odd,  |p_{>b}| even,             p_{=b} empty
struct LhsCaseReport {
    bool exceptional;
    bool cond_a;
    bool cond_b;
    bool cond_c;
    Partition result;
};

LhsCaseReport lhs_case_formula(const Partition& p, ClassicalType x, int b, int d);

/// Direct evaluation of the expression the case formula summarizes:
/// ((p ⊔ [b^{2d}])-)_C for X=B, ((p ⊔ [b^{2d}])+)_B for X=C,
/// (((p ⊔ [b^{2d}])+)-)_C for X=D.
Partition lhs_direct(const Partition& p, ClassicalType x, int b, int d);

/// Checks the strict-inequality corollary instance: given type-X p >= q of
/// equal size with dbv(p) strictly dominated by dbv(q), returns whether
/// dbv(p ⊔ [b^{2d}]) is strictly dominated by dbv(q ⊔ [b^{2d}]). The
/// corollary asserts this is always true. PreconditionViolated when the
/// hypotheses fail.
bool strict_inequality_check(const Partition& p, const Partition& q, ClassicalType x,
                             int b, int d);

struct SweepCounterexample {
    ClassicalType x;
    Partition p;
    int b;
    int d;
    Partition lhs; // the directly computed side
    Partition rhs; // the side that should have matched it
    // "key_lemma" when lhs != rhs across the identity,
    // "case_formula" when lhs_case_formula disagrees with lhs_direct.
    const char* kind;
};

struct SweepSummary {
    std::int64_t cases_checked = 0;
    std::vector<SweepCounterexample> counterexamples;
};

/// Exhaustive verification sweep: all X in {B,C,D}, all type-X partitions
/// with |p| <= max_size, 1 <= b <= max_b, 1 <= d <= max_d. Each cell checks
/// key_lemma_lhs == key_lemma_rhs and lhs_case_formula == lhs_direct.
/// Iteration order is lexicographic over (X, |p|, p, b, d); the summary is
/// independent of the worker count.
SweepSummary key_lemma_sweep(int max_size, int max_b, int max_d, int jobs = 1);

} // namespace orbitkit
