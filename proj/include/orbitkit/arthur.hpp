#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/partition.hpp"

namespace orbitkit {

/// Exact rational twist; half-integers arise when restricting the Arthur
/// SL2 factor, so no floating point is used anywhere.
using Rational = boost::rational<int>;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text, std::size_t& pos);

/// An irreducible Weil-group factor, kept opaque: only its dimension (and,
/// in division-algebra contexts, the s-value of its Jacquet-Langlands
/// description) enter any computation here.
struct Irrep {
    std::string id;
    int dim = 1;
    std::optional<int> s_value;

    bool operator==(const Irrep&) const = default;
};

/// One formal term rho|.|^x ⊗ S_a ⊗ S_b. When `paired` is set the summand
/// stands for the term plus its dual with twist -x; a nonzero twist forces
/// pairing. `deligne` is a, `arthur` is b (b = 1 throughout an
/// L-parameter).
struct Summand {
    Irrep rho;
    Rational twist = Rational(0);
    int deligne = 1;
    int arthur = 1;
    bool paired = false;

    /// Contribution to the ambient GL dimension.
    int gl_dim() const { return (paired ? 2 : 1) * rho.dim * deligne * arthur; }

    bool operator==(const Summand&) const = default;
};

enum class ParamContext { LParameter, Arthur };

/// A decomposed L-parameter or local Arthur parameter: a formal sum of
/// summands with a fixed context. Construction normalizes to canonical
/// summand order (dim, id, a, b, twist descending) and validates the
/// invariants: b = 1 in L-parameter context, paired whenever the twist is
/// nonzero, positive dims.
class Parameter {
  public:
    Parameter() = default;
    Parameter(ParamContext context, std::vector<Summand> summands);

    ParamContext context() const { return context_; }
    const std::vector<Summand>& summands() const { return summands_; }
    int ambient_dim() const { return ambient_dim_; }

    /// Multiset equality of summands (plus equal context).
    bool operator==(const Parameter&) const = default;

  private:
    ParamContext context_ = ParamContext::LParameter;
    std::vector<Summand> summands_;
    int ambient_dim_ = 0;
};

/// Parse the textual grammar
///   param := term ("+" term)*
///   term  := ["2*"] "rho(" dim ["," "s=" int] ")" ["@" rational] "S" int ["S" int]
/// "2*" marks a paired summand (its dual is implicit; the positive twist is
/// listed). Terms with one S_k factor form an L-parameter, terms with two
/// an Arthur parameter; mixing the two shapes is rejected. The empty string
/// parses to the empty L-parameter.
Parameter parse_parameter(const std::string& text);

/// Same, but additionally requires the ambient dimension to match.
Parameter parse_parameter(const std::string& text, int expected_dim);

/// Canonical text emission; parse_parameter is its left inverse.
std::string to_string(const Parameter& param);

/// p(phi) = ⊔ [a^{dim(rho)}] over unpaired summands, ⊔ [a^{2 dim(rho)}]
/// over paired ones. L-parameter context only.
Partition p_of_phi(const Parameter& phi);

/// p(psi) = ⊔ [b^{a dim(rho)}] (unpaired) resp. [b^{2a dim(rho)}]
/// (paired). Arthur context only.
Partition p_of_psi(const Parameter& psi);

/// Swap the Deligne and Arthur SL2 factors; an involution on Arthur
/// parameters.
Parameter hat(const Parameter& psi);

/// Restrict the Arthur SL2 along the diagonal |.|^{1/2} cocharacter:
/// every rho|.|^x ⊗ S_a ⊗ S_b becomes the b terms
/// rho|.|^{x+(b+1)/2-j} ⊗ S_a for j = 1..b. The result is an L-parameter
/// of the same ambient dimension.
Parameter phi_of_psi(const Parameter& psi);

/// Division-algebra partition p_A(phi) = ⊔ [(a' d_A)^{dim(rho) s / d_A}]
/// with a' = a/s, doubled for paired summands. Every summand must carry an
/// s-value dividing both d_A and its Deligne dimension, and d_A must
/// divide dim(rho)*s.
Partition p_A_of_phi(const Parameter& phi, int d_A);

/// One Langlands-datum factor St(rho', n)|.|^x with rho' cuspidal on
/// GL_m(A).
struct StandardFactor {
    int m;
    int n;
    Rational x = Rational(0);
};

/// Wavefront partition of the representation with the given standard
/// module over a division algebra of degree d_A: the entrywise sum of the
/// rectangles [m^{n d_A}].
Partition gl_wavefront(const std::vector<StandardFactor>& standard_module, int d_A);

} // namespace orbitkit
