#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cnbethe/exchange_operators.hpp"
#include "cnbethe/representations.hpp"

namespace cnbethe {

/// ~1e4 machine epsilons; absorbs rounding from 3–4 operator applications.
inline constexpr double kIdentityTolerance = 1e-12;

enum class Outcome { Pass, Fail, NotApplicable };

/// What the theory predicts for a relation in a given setting.
enum class Expectation {
  Holds,        ///< residual must be within tolerance
  Fails,        ///< residual must exceed tolerance (pdp with distinguishable particles)
  Unspecified,  ///< measured and reported only
};

std::string to_string(Outcome outcome);
std::string to_string(Expectation expectation);

struct ResidualReport {
  std::string relation;
  double u = 0.0;
  double v = 0.0;
  double residual = 0.0;
  double tolerance = kIdentityTolerance;
  Outcome outcome = Outcome::NotApplicable;

  bool passed() const noexcept { return outcome == Outcome::Pass; }
  bool applicable() const noexcept { return outcome != Outcome::NotApplicable; }
};

/// max over standard basis vectors e of max_q |((lhs - rhs)e)_q|.
double operator_residual(const RepOperator& lhs, const RepOperator& rhs, const Representation& rep);

/// Y_i(-u)Y_i(u) = I for every i and Z(-u)Z(u) = I.
ResidualReport check_unitarity(const ModelSpec& spec, const Representation& rep, double u,
                               double tolerance = kIdentityTolerance);

/// Y_i(v)Y_{i+1}(u+v)Y_i(u) = Y_{i+1}(u)Y_i(u+v)Y_{i+1}(v), all i ≤ N-2.
/// Not applicable for N < 3.
ResidualReport check_braid(const ModelSpec& spec, const Representation& rep, double u, double v,
                           double tolerance = kIdentityTolerance);

/// Z(2v)Y_1(u+v)Z(2u)Y_1(u-v) = Y_1(u-v)Z(2u)Y_1(u+v)Z(2v). Needs N ≥ 2.
ResidualReport check_reflection(const ModelSpec& spec, const Representation& rep, double u, double v,
                                double tolerance = kIdentityTolerance);

/// [Y_i(u), Y_j(v)] = 0 for |i-j| > 1 and [Z(u), Y_i(v)] = 0 for i > 1.
/// Not applicable for N < 3.
ResidualReport check_commuting(const ModelSpec& spec, const Representation& rep, double u, double v,
                               double tolerance = kIdentityTolerance);

/// Commutator residual of two specific operators.
ResidualReport check_commuting_pair(const RepOperator& first, const RepOperator& second,
                                    const Representation& rep, std::string name, double u, double v,
                                    double tolerance = kIdentityTolerance);

struct BraidCoefficientTerms {
  Complex lhs;  ///< b(v)a(u+v)a(u) + a(v)a(u+v)b(u)
  Complex rhs;  ///< a(u)b(u+v)a(v)
};
BraidCoefficientTerms braid_coefficient_terms(const ModelSpec& spec, double u, double v);

/**
 * Scalar identities between the coefficient functions:
 *   pair_unitarity_even:  a(-u)a(u) + b(-u)b(u) = 1
 *   pair_unitarity_odd:   a(-u)b(u) + b(-u)a(u) = 0
 *   braid_coefficient:    b(v)a(u+v)a(u) + a(v)a(u+v)b(u) = a(u)b(u+v)a(v)
 *   wall_unitarity_even / wall_unitarity_odd: the same two for (ã, b̃)
 *   reflection_coefficient: b̃(2v)b(u+v)ã(2u)a(u-v) + b̃(2v)a(u+v)ã(2u)b(u-v)
 *                            + ã(2v)a(u+v)b̃(2u)b(u-v) = a(u-v)b̃(2u)b(u+v)ã(2v)
 */
std::vector<ResidualReport> coefficient_relations(const ModelSpec& spec, double u, double v,
                                                  double tolerance = kIdentityTolerance);

/// Theory's prediction for a named relation (operator- or coefficient-level).
Expectation expected_outcome(const ModelSpec& spec, const Representation& rep, const std::string& relation);

struct RelationSummary {
  std::string relation;
  Expectation expectation = Expectation::Holds;
  Outcome outcome = Outcome::NotApplicable;  ///< of the max residual against tolerance
  double max_residual = 0.0;
  double worst_u = 0.0;
  double worst_v = 0.0;
  std::size_t samples = 0;

  /// Holds ⇒ Pass; Fails ⇒ Fail; Unspecified and NotApplicable always met.
  bool expectation_met() const noexcept;
};

struct ConsistencyReport {
  std::string spec;
  std::string representation;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = kIdentityTolerance;
  double sample_range = 5.0;
  std::vector<RelationSummary> relations;
  /// Coefficient-level braid witness at u = v = 1.
  BraidCoefficientTerms witness;
  double witness_residual = 0.0;

  bool expectations_met() const noexcept;
  /// True when every applicable relation is within tolerance.
  bool all_pass() const noexcept;
  const RelationSummary* find(const std::string& relation) const noexcept;
};

/// Runs every operator- and coefficient-level check on `samples` seeded
/// (u, v) drawn uniformly from [-range, range]². Deterministic given seed.
ConsistencyReport consistency_report(const ModelSpec& spec, const Representation& rep, std::size_t samples,
                                     std::uint64_t seed, double tolerance = kIdentityTolerance,
                                     double range = 5.0);

}  // namespace cnbethe
