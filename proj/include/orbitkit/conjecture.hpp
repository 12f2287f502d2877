#pragma once

#include <string>
#include <vector>

#include "orbitkit/arthur.hpp"
#include "orbitkit/duality.hpp"
#include "orbitkit/partition.hpp"

namespace orbitkit {

/// How a candidate wavefront partition sits against a conjectural bound.
/// `violates` means the bound is strictly dominated by the candidate;
/// incomparability is reported separately because the dominance order is
/// partial.
enum class BoundVerdict { satisfies, incomparable, violates };

const char* verdict_name(BoundVerdict v);

struct BoundReport {
    Partition bound;
    std::vector<std::pair<Partition, BoundVerdict>> candidates;
    bool all_satisfied = true;
};

/// Conjectural upper bound from the dual L-parameter:
/// dbv(p(phi_hat_pi), X). Requires p(phi_hat_pi) of type X.
Partition bound_from_dual_lparam(const Parameter& phi_hat_pi, ClassicalType x);

/// Conjectural upper bound from a local Arthur parameter:
/// dbv(p(psi), X). Requires p(psi) of type X.
Partition bound_from_arthur(const Parameter& psi, ClassicalType x);

/// Verdict for each candidate against the bound under dominance.
/// All candidates must have the bound's total size.
BoundReport check_bound(const std::vector<Partition>& candidates, const Partition& bound);

/// Checks the sharper-bound chain: given that p(phi_hat_pi) dominates
/// p(phi_{hat psi}) (PreconditionViolated otherwise), returns whether
/// dbv(p(phi_hat_pi), X) <= dbv(p(psi), X). Order reversal of dbv makes
/// this always true under the precondition; the operation machine-checks
/// it.
bool sharper_chain_check(const Parameter& phi_hat_pi, const Parameter& psi,
                         ClassicalType x);

struct GoldenCase {
    std::string example_id;
    std::string expected;
    std::string computed;
    bool pass;
};

struct GoldenReport {
    std::vector<GoldenCase> cases;
    bool all_pass = true;
};

/// Runs the hard-coded worked-example suite end to end:
///   (1) the Sp10 strict-inequality chain,
///   (2) the odd-orthogonal supercuspidal bound family,
///   (3) the odd-orthogonal three-block tempered family with its closed
///       form [2a3-3, 2a2-1, 2a1+1, 1^4],
///   (4) the division-algebra (d_A = 2) partition pairs.
GoldenReport reproduce_paper_examples();

} // namespace orbitkit
