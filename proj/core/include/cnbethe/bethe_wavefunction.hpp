#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnbethe/exchange_operators.hpp"
#include "cnbethe/representations.hpp"
#include "cnbethe/weyl_group.hpp"

namespace cnbethe {

/// Generic momenta: all |k_j| nonzero and pairwise distinct.
class Momenta {
 public:
  /// Throws DomainError for degenerate momenta.
  explicit Momenta(std::vector<double> k);

  std::span<const double> values() const noexcept { return k_; }
  int rank() const noexcept { return static_cast<int>(k_.size()); }
  double operator[](std::size_t j) const { return k_.at(j); }

 private:
  std::vector<double> k_;
};

/// Σ k_j².
double energy(std::span<const double> k);
inline double energy(const Momenta& k) { return energy(k.values()); }

/// A revisit in the Cayley-graph traversal disagreed with the stored value:
/// the two words reach the same element but give different coefficients.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(std::size_t element, GeneratorWord first, GeneratorWord second, double residual);

  std::size_t element() const noexcept { return element_; }
  const GeneratorWord& first_word() const noexcept { return first_; }
  const GeneratorWord& second_word() const noexcept { return second_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t element_;
  GeneratorWord first_;
  GeneratorWord second_;
  double residual_;
};

struct CoefficientOptions {
  /// Revisit cross-check tolerance (max abs component difference).
  double tolerance = 1e-12;
  /// Group rank cap used when a scalar representation needs its own table.
  int max_rank = kDefaultMaxRank;
};

/**
 * The table A_P for every P in W_N, built from A_I by the recursions
 * A_{PT_i} = Y_i(k_{P(i+1)} - k_{Pi})^{-1} A_P and A_{PR_1} = Z(2k_{P1})^{-1} A_P.
 *
 * In regular mode each A_P is a vector over wedges Q (length 2^N·N!); in a
 * scalar sector it is a single number and A_P(Q) = χ(Q)·A_P with χ the
 * sector character. Immutable once built.
 */
class BetheCoefficients {
 public:
  const Momenta& momenta() const noexcept { return momenta_; }
  const ModelSpec& spec() const noexcept { return spec_; }
  const Representation& representation() const noexcept { return rep_; }
  const WeylGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const WeylGroup>& group_ptr() const noexcept { return group_; }

  int rank() const noexcept { return momenta_.rank(); }
  std::size_t size() const noexcept { return group_->order(); }
  std::size_t vector_dimension() const noexcept { return rep_.dimension(); }

  /// A_P as stored (length 2^N·N! or 1).
  std::span<const Complex> coefficient(std::size_t p_index) const;
  std::span<const Complex> initial() const { return coefficient(WeylGroup::identity_index()); }
  /// A_P(Q).
  Complex amplitude(std::size_t p_index, std::size_t q_index) const;

  /// Momentum relabelling k_P = P·k for each element index.
  const std::vector<std::vector<double>>& relabelled_momenta() const noexcept { return k_by_element_; }

  std::size_t cross_checks() const noexcept { return cross_checks_; }
  double max_cross_check_residual() const noexcept { return max_cross_residual_; }

 private:
  friend BetheCoefficients compute_coefficients(const Momenta&, std::span<const Complex>, const ModelSpec&,
                                                const Representation&, const CoefficientOptions&);
  BetheCoefficients(Momenta k, ModelSpec spec, Representation rep, std::shared_ptr<const WeylGroup> group);

  Momenta momenta_;
  ModelSpec spec_;
  Representation rep_;
  std::shared_ptr<const WeylGroup> group_;
  std::vector<Complex> table_;  // size() × vector_dimension(), row P
  std::vector<int> character_;  // χ(Q) in scalar mode
  std::vector<std::vector<double>> k_by_element_;
  std::size_t cross_checks_ = 0;
  double max_cross_residual_ = 0.0;
};

/// Operator carrying A_P to A_{P·g}, evaluated with the target's momenta
/// k_{Pg}: Y_i(k_{Pg,i+1} - k_{Pg,i}) for g = T_i, Z(2 k_{Pg,1}) for g = R_1.
RepOperator edge_operator(Generator g, std::span<const double> target_momenta, const ModelSpec& spec,
                          const Representation& rep);

/**
 * Breadth-first traversal of the Cayley graph of W_N from the identity over
 * generators {T_1..T_{N-1}, R_1}. First visits assign; every revisit is
 * cross-checked and a mismatch beyond tolerance raises InconsistencyError
 * carrying the two words. `initial` must have the representation's dimension.
 */
BetheCoefficients compute_coefficients(const Momenta& k, std::span<const Complex> initial, const ModelSpec& spec,
                                       const Representation& rep, const CoefficientOptions& options = {});

/// Same, with the default A_I: 1 in a scalar sector, the basis vector at the
/// identity wedge in regular mode.
BetheCoefficients compute_coefficients(const Momenta& k, const ModelSpec& spec, const Representation& rep,
                                       const CoefficientOptions& options = {});

/// A_I chosen by the two-argument overload.
std::vector<Complex> default_initial(const Representation& rep);

/// W_P(k)A_I accumulated letter by letter along `word`.
std::vector<Complex> evaluate_along_word(const Momenta& k, std::span<const Complex> initial, const ModelSpec& spec,
                                         const Representation& rep, const GeneratorWord& word);

/// Inserts a relator (T_iT_i, (T_iT_j)^2, (T_iT_{i+1})^3, R_1R_1, (R_1T_i)^2,
/// (R_1T_1)^4) at a random position, or applies one braid move when possible.
/// The result evaluates to the same group element.
GeneratorWord rewrite_with_relation(const GeneratorWord& word, int rank, std::uint64_t seed);

struct WordIndependenceResult {
  double max_residual = 0.0;
  std::size_t trials = 0;
  GeneratorWord worst_first;
  GeneratorWord worst_second;
};

/// For `trials` random P: compares W_P(k)A_I along word_for(P) and along a
/// relation-rewritten variant.
WordIndependenceResult word_independence_test(const Momenta& k, const ModelSpec& spec, const Representation& rep,
                                              std::size_t trials, std::uint64_t seed);

struct WavefunctionSample {
  std::vector<double> point;
  SignedPermutation wedge;
  Complex value;
  std::vector<Complex> gradient;
};

/// ψ(x) = Σ_P A_P(Q) exp(i k_P · x_Q) and its analytic gradient. Q is
/// classify_wedge(x) unless `wedge` is supplied, in which case the closed
/// form of Δ_Q is evaluated at x (used for one-sided boundary values).
WavefunctionSample evaluate_psi(const BetheCoefficients& coeffs, std::span<const double> x,
                                const std::optional<SignedPermutation>& wedge = std::nullopt);

}  // namespace cnbethe
