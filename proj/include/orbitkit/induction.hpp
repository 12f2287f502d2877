#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitkit/collapse.hpp"
#include "orbitkit/partition.hpp"

namespace orbitkit {

/// Labels for the two type-D orbits sharing a very even partition.
enum class VeryEvenLabel { I, II };

/// A nilpotent orbit of a classical Lie algebra, carried at partition
/// level. The label may be present only for type D with all parts even
/// (the "very even" case); induction ignores it.
struct NilpotentOrbit {
    ClassicalType group_type;
    Partition partition;
    std::optional<VeryEvenLabel> label;

    NilpotentOrbit(ClassicalType type, Partition part,
                   std::optional<VeryEvenLabel> lab = std::nullopt);
};

bool is_very_even(const Partition& p);

/// Levi datum of a classical group: a chain of GL factors, each carrying a
/// nilpotent-orbit partition of its size, plus an optional classical tail.
struct GlBlock {
    int size;
    Partition orbit; // |orbit| == size
};

struct LeviDatum {
    std::vector<GlBlock> gl_blocks;
    std::optional<NilpotentOrbit> tail;
};

/// Induction for gl ⊕ gl inside gl: the entrywise sum p1 + p2.
Partition induce_gl(const Partition& p1, const Partition& p2);

/// Induction for gl ⊕ g inside a classical g: (gl + gl + tail)_X.
/// Requires X in {B,C,D} and the tail of type X (or empty).
Partition induce_classical(const Partition& gl_part, const Partition& tail_part,
                           ClassicalType x);

/// Induction in stages across a full Levi datum: fold induce_gl over the
/// GL blocks, then the classical step against the tail. For X = A the
/// datum must have no tail and the result is the plain entrywise sum.
Partition induce_levi(const LeviDatum& levi, ClassicalType x);

/// Image of pairwise induction on two wavefront sets, deduplicated.
/// Both inputs must be nonempty.
std::set<Partition> induced_wavefront(const std::set<Partition>& tau_wavefront,
                                      const std::set<Partition>& sigma_wavefront,
                                      ClassicalType x);

/// Text form "GL(p1)*GL(p2)*...*G(tail):X", e.g.
/// "GL([2,1])*G([4,2,2,2]):C". The G(...) factor is optional; for pure GL
/// data use type A. Parse and print round-trip exactly.
LeviDatum parse_levi(const std::string& text, ClassicalType& type_out);
std::string to_string(const LeviDatum& levi, ClassicalType type);

} // namespace orbitkit
