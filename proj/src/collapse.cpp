#include "orbitkit/collapse.hpp"

#include <string>

#include "orbitkit/enumerate.hpp"

namespace orbitkit {

namespace {

void check_parity(const Partition& p, ClassicalType x) {
    bool want_odd = (x == ClassicalType::B);
    if ((p.sum() % 2 != 0) != want_odd)
        throw ParityMismatch(std::string("|p|=") + std::to_string(p.sum()) +
                             " has the wrong parity for type " + type_letter(x));
}

/// Largest part value violating the type-X multiplicity constraint,
/// or 0 if p lies in the constrained class.
int largest_violation(const Partition& p, ClassicalType x) {
    int bad_parity = (x == ClassicalType::C) ? 1 : 0;
    for (auto [value, count] : p.multiplicities()) {
        if (value % 2 == bad_parity && count % 2 != 0)
            return value;
    }
    return 0;
}

// Assumes the size parity of p matches x. Splits per the collapse table:
// with hi = p_{>pivot} and lo = p_{<=pivot},
//   B: (l even, |hi| even) hi_D ⊔ lo_B     (l even, |hi| odd) hi-_D ⊔ lo+_B
//      (l odd,  |hi| even) hi-_B ⊔ lo+_D   (l odd,  |hi| odd) hi_B ⊔ lo_D
//   C: (|hi| even) hi_C ⊔ lo_C             (|hi| odd) hi-_C ⊔ lo+_C
//   D: (l even, |hi| even) hi_D ⊔ lo_D     (l even, |hi| odd) hi-_D ⊔ lo+_D
//      (l odd,  |hi| even) hi-_B ⊔ lo+_B   (l odd,  |hi| odd) hi_B ⊔ lo_B
Partition collapse_rec(const Partition& p, ClassicalType x) {
    int violation = largest_violation(p, x);
    if (violation == 0)
        return p;

    // Split strictly above the violating value; if nothing lies above it,
    // step down so the upper piece [violation^m] is nonempty. (The violating
    // value then has odd multiplicity, which forces the -/+ rows below, so
    // every recursive call strictly shrinks the total size.)
    int pivot = (p.largest() == violation) ? violation - 1 : violation;
    Partition hi = slice(p, Cmp::gt, pivot);
    Partition lo = slice(p, Cmp::le, pivot);
    bool l_odd = hi.length() % 2 != 0;
    bool s_odd = hi.sum() % 2 != 0;

    const ClassicalType B = ClassicalType::B;
    const ClassicalType C = ClassicalType::C;
    const ClassicalType D = ClassicalType::D;

    switch (x) {
    case ClassicalType::B:
        if (!l_odd && !s_odd) return collapse_rec(hi, D) | collapse_rec(lo, B);
        if (!l_odd && s_odd)  return collapse_rec(minus_one(hi), D) | collapse_rec(plus_one(lo), B);
        if (l_odd && !s_odd)  return collapse_rec(minus_one(hi), B) | collapse_rec(plus_one(lo), D);
        return collapse_rec(hi, B) | collapse_rec(lo, D);
    case ClassicalType::C:
        if (!s_odd) return collapse_rec(hi, C) | collapse_rec(lo, C);
        return collapse_rec(minus_one(hi), C) | collapse_rec(plus_one(lo), C);
    case ClassicalType::D:
        if (!l_odd && !s_odd) return collapse_rec(hi, D) | collapse_rec(lo, D);
        if (!l_odd && s_odd)  return collapse_rec(minus_one(hi), D) | collapse_rec(plus_one(lo), D);
        if (l_odd && !s_odd)  return collapse_rec(minus_one(hi), B) | collapse_rec(plus_one(lo), B);
        return collapse_rec(hi, B) | collapse_rec(lo, B);
    case ClassicalType::A:
        break;
    }
    return p;
}

} // namespace

Partition collapse(const Partition& p, ClassicalType x) {
    if (x == ClassicalType::A)
        return p;
    check_parity(p, x);
    return collapse_rec(p, x);
}

Partition collapse_oracle(const Partition& p, ClassicalType x, int size_guard) {
    if (x == ClassicalType::A)
        return p;
    check_parity(p, x);
    if (p.sum() > size_guard)
        throw SizeGuardExceeded("oracle limited to |p| <= " + std::to_string(size_guard) +
                                ", got " + std::to_string(p.sum()));

    std::vector<Partition> candidates;
    for_each_partition(p.sum(), [&](const Partition& q) {
        if (is_type(q, x) && dominates(p, q))
            candidates.push_back(q);
    });

    std::vector<Partition> maxima;
    for (const Partition& q : candidates) {
        bool is_max = true;
        for (const Partition& r : candidates) {
            if (r != q && dominates(r, q)) {
                is_max = false;
                break;
            }
        }
        if (is_max)
            maxima.push_back(q);
    }
    if (maxima.size() != 1)
        throw NoUniqueMaximum("expected exactly one dominance-maximal candidate, found " +
                              std::to_string(maxima.size()) + " for p=" + to_string(p) +
                              ", X=" + type_letter(x));
    return maxima.front();
}

} // namespace orbitkit
