#pragma once

#include <span>
#include <string>
#include <vector>

#include "cnbethe/representations.hpp"
#include "cnbethe/weyl_group.hpp"

namespace cnbethe {

enum class Model { Delta, Pdp };

std::string to_string(Model model);
/// "delta" or "pdp"; DomainError otherwise.
Model parse_model(const std::string& text);

/**
 * Which interaction and its two couplings. For the delta model these are
 * (c_1, c_2): pair strength and wall strength. For the p·δ·p model they are
 * (λ_1, λ_2). Both must be strictly positive (no bound states).
 */
class ModelSpec {
 public:
  ModelSpec(Model model, double pair_coupling, double boundary_coupling);

  static ModelSpec delta(double c1, double c2) { return {Model::Delta, c1, c2}; }
  static ModelSpec pdp(double lambda1, double lambda2) { return {Model::Pdp, lambda1, lambda2}; }

  Model model() const noexcept { return model_; }
  double pair_coupling() const noexcept { return pair_; }
  double boundary_coupling() const noexcept { return boundary_; }

  std::string describe() const;

 private:
  Model model_;
  double pair_;
  double boundary_;
};

/// Operator a + b·Ĝ written as its two scalar coefficients.
struct CoefficientPair {
  Complex a;
  Complex b;
};

/// a = c_1/(iu - c_1), b = iu/(iu - c_1).
CoefficientPair coeffs_delta(double u, double c1);

/// a = iu/(iu - 1/λ_1), b = -(1/λ_1)/(iu - 1/λ_1).
///
/// Note: the denominator of b is iu - 1/λ_1. Writing it as iu - λ_1 does not
/// reproduce Y_i(u) = (iu - T̂_i/λ_1)/(iu - 1/λ_1).
CoefficientPair coeffs_pdp(double u, double lambda1);

/// Pair coefficients of Y_i(u) for the model.
CoefficientPair pair_coeffs(double u, const ModelSpec& spec);
/// Wall coefficients (ã, b̃) of Z(u) = ã + b̃·R̂_1.
CoefficientPair boundary_coeffs(double u, const ModelSpec& spec);

namespace detail {
// Complex-argument versions, for analytic-continuation tests only.
CoefficientPair pair_coeffs_complex(Complex u, const ModelSpec& spec);
CoefficientPair boundary_coeffs_complex(Complex u, const ModelSpec& spec);
}  // namespace detail

/// (a + b·Ĝ)/den. Keeping the common denominator lets a one-dimensional
/// representation evaluate (a ± b)/den with a single division.
struct AffineFactor {
  Complex a;
  Complex b;
  Generator generator;
  Complex den{1.0, 0.0};
};

/**
 * Product of affine factors (a_k + b_k·Ĝ_k), kept symbolic and applied
 * right-to-left to vectors in a given representation. Never densified.
 */
class RepOperator {
 public:
  RepOperator() = default;  // identity

  static RepOperator identity() { return {}; }
  static RepOperator affine(Complex a, Complex b, Generator g);
  /// (a + b·Ĝ)/den.
  static RepOperator fraction(Complex a, Complex b, Complex den, Generator g);
  static RepOperator generator(Generator g) { return affine(0.0, 1.0, g); }

  /// (*this)∘rhs: rhs acts first.
  RepOperator operator*(const RepOperator& rhs) const;

  std::vector<Complex> apply(const Representation& rep, std::span<const Complex> v) const;
  /// Action on the 1-dimensional space of a scalar representation.
  Complex scalar_value(const Representation& rep) const;

  std::span<const AffineFactor> factors() const noexcept { return factors_; }
  bool is_identity() const noexcept { return factors_.empty(); }

 private:
  std::vector<AffineFactor> factors_;  // leftmost first
};

/// Y_i(u) = a(u) + b(u)·T̂_i. IndexError unless 1 ≤ i ≤ N-1.
RepOperator Y_op(int i, double u, const ModelSpec& spec, const Representation& rep);
/// Z(u) = ã(u) + b̃(u)·R̂_1.
RepOperator Z_op(double u, const ModelSpec& spec, const Representation& rep);

}  // namespace cnbethe
