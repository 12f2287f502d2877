#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/errors.hpp"

namespace orbitkit {

/// Tag selecting the partition class of a classical Lie algebra family.
/// A carries no constraint; B requires an odd total size, C and D an even
/// one (enforced at use sites, not by the tag itself).
enum class ClassicalType { A, B, C, D };

char type_letter(ClassicalType x);
ClassicalType type_from_letter(char c); // throws SyntaxError on bad letter

/// An integer partition: a non-increasing list of positive parts.
/// Values are immutable after construction; the empty partition is valid.
class Partition {
  public:
    Partition() = default;

    /// Normalizing constructor: zeros are stripped and the remaining
    /// entries sorted non-increasing. Negative entries are rejected.
    explicit Partition(std::vector<int> raw);
    Partition(std::initializer_list<int> raw)
        : Partition(std::vector<int>(raw)) {}

    const std::vector<int>& parts() const { return parts_; }
    /// Total size |p| (the number being partitioned).
    int sum() const { return sum_; }
    /// Number of parts l(p).
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based; parts beyond the end read as 0.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int largest() const { return part(0); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    /// Number of parts equal to `value`.
    int multiplicity(int value) const;
    /// Multiplicity view: (value, count) pairs with values decreasing.
    std::vector<std::pair<int, int>> multiplicities() const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic order on the part lists; used only to make
    /// iteration orders and reports deterministic.
    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// Comparator for partition slicing.
enum class Cmp { gt, ge, eq, lt, le };

struct Slice {
    Cmp cmp;
    int threshold; // nonnegative
};

/// Sub-partition of the parts satisfying the comparison, e.g. p_{>b}.
Partition slice(const Partition& p, Slice s);
Partition slice(const Partition& p, Cmp cmp, int threshold);

/// Dominance order: p >= q iff every prefix sum of p is >= that of q
/// (the shorter list padded with zeros). Throws SizeMismatch if |p| != |q|.
bool dominates(const Partition& p, const Partition& q);

/// Outcome of comparing two same-size partitions under dominance.
enum class Dominance { equal, greater, less, incomparable };
Dominance compare_dominance(const Partition& p, const Partition& q);

/// Strict dominance p > q.
bool strictly_dominates(const Partition& p, const Partition& q);

/// Conjugate partition p*, with p*_i = #{j : p_j >= i}.
Partition transpose(const Partition& p);

/// Multiset union p ⊔ q.
Partition operator|(const Partition& p, const Partition& q);

/// Entrywise sum p + q, the shorter list padded with zeros.
Partition operator+(const Partition& p, const Partition& q);

/// p with 1 added to its largest part ([]+ is [1]).
Partition plus_one(const Partition& p);

/// p with 1 subtracted from its smallest part (a part reaching 0 is
/// dropped). Throws EmptyPartition on [].
Partition minus_one(const Partition& p);

/// The rectangle [value^count].
Partition rectangle(int value, int count);

/// Membership in the partition class of type X.
/// A: always. B: |p| odd and every even part has even multiplicity.
/// C: |p| even and every odd part has even multiplicity.
/// D: |p| even and every even part has even multiplicity.
bool is_type(const Partition& p, ClassicalType x);

/// Parse the bracketed text form, e.g. "[5,3,1^3]" == [5,3,1,1,1].
/// Whitespace-insensitive. Throws SyntaxError.
Partition parse_partition(const std::string& text);

/// Canonical text form; exponent shorthand is used for a part repeated
/// four or more times, so printing and parsing round-trip exactly.
std::string to_string(const Partition& p);

std::ostream& operator<<(std::ostream& os, const Partition& p);

} // namespace orbitkit
