#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cnbethe/bethe_wavefunction.hpp"

namespace cnbethe {

/// One-sided derivative combinations amplify rounding by ~|k|·n.
inline constexpr double kBoundaryTolerance = 1e-10;
/// Minimum coordinate gap of generated facet points.
inline constexpr double kProbeMargin = 0.1;

enum class FacetKind { PairContact, WallContact };

std::string to_string(FacetKind kind);

/**
 * A generic point on a facet of the wedge Δ_Q. For PairContact the facet is
 * x_{Qi} = x_{Q(i+1)}, shared with Δ_{Q·T_i}; for WallContact it is
 * x_{Q1} = 0, shared with Δ_{Q·R_1}. `index` is the 1-based i (1 for walls).
 */
struct BoundaryProbe {
  FacetKind kind = FacetKind::PairContact;
  SignedPermutation wedge;
  int index = 1;
  std::vector<double> point;
};

/// Point y with 0 < y_1 < ... < y_N except y_i = y_{i+1} (pair) or y_1 = 0
/// (wall), gaps at least `margin`, mapped back by Q^{-1}.
BoundaryProbe make_probe(FacetKind kind, const SignedPermutation& wedge, int index, std::mt19937_64& rng,
                         double margin = kProbeMargin);

/// `count` probes with uniformly random wedge (and contact index for pairs).
std::vector<BoundaryProbe> random_probes(const WeylGroup& group, FacetKind kind, std::size_t count,
                                         std::uint64_t seed, double margin = kProbeMargin);

struct BoundaryResidual {
  double first = 0.0;   ///< continuity condition
  double second = 0.0;  ///< jump condition
  double max() const noexcept { return first > second ? first : second; }
};

/**
 * Pair-contact conditions from the two one-sided wedge expansions. With
 * j = p(i), k = p(i+1) and s = σ_iσ_{i+1} the facet is x_j = s·x_k, the
 * normal combination is D = ∂_j - s∂_k and "+" is the side x_j > s·x_k.
 *   delta: ψ₊ = ψ₋,   Dψ₊ - Dψ₋ = 2c_1 ψ₋
 *   pdp:   Dψ₊ = Dψ₋, ψ₊ - ψ₋ = 2λ_1 Dψ₋
 */
BoundaryResidual check_pair_boundary(const BetheCoefficients& coeffs, const BoundaryProbe& probe);

/**
 * Wall-contact conditions at x_j = 0 with j = p(1):
 *   delta: ψ₊ = ψ₋,       ∂_jψ₊ - ∂_jψ₋ = c_2 ψ₊
 *   pdp:   ∂_jψ₊ = ∂_jψ₋, ψ₊ - ψ₋ = 4λ_2 ∂_jψ₊
 */
BoundaryResidual check_wall_boundary(const BetheCoefficients& coeffs, const BoundaryProbe& probe);

/**
 * Reduced wall conditions at x_j = 0⁺ for a sector wavefunction, one residual
 * per particle j. `point` must have all coordinates > 0 and distinct; the
 * j-th coordinate is replaced by 0.
 *   delta: 2∂_jψ = c_2ψ (ε_R = +1),  ψ = 0 (ε_R = -1)
 *   pdp:   ∂_jψ = 0 (ε_R = +1),       ψ = 2λ_2∂_jψ (ε_R = -1)
 * UsageError for regular-mode coefficients.
 */
std::vector<double> check_halfline_reduction(const BetheCoefficients& coeffs, std::span<const double> point);

struct EigenCheck {
  double residual = 0.0;  ///< |Δ_h ψ + Eψ|
  Complex psi;
  Complex laplacian;
  double energy = 0.0;
  /// -Re(Δ_h ψ / ψ), the energy estimate.
  double estimated_energy() const noexcept;
};

/// Central-difference Laplacian with step h. GeometryError if any of the 2N
/// stencil points leaves the wedge of `point`.
EigenCheck check_eigen(const BetheCoefficients& coeffs, std::span<const double> point, double h);

/// max_P max_q |A_P(q) - B_P(q)| between two tables of the same shape.
double max_table_difference(const BetheCoefficients& a, const BetheCoefficients& b);

struct DualPair {
  BetheCoefficients delta_boson;  ///< sector (+,+), couplings (c_1, c_2)
  BetheCoefficients pdp_fermion;  ///< sector (-,-), couplings (1/c_1, 1/c_2)
};

DualPair build_dual_pair(const Momenta& k, double c1, double c2);

/// max over points of |ψ^δ_B(x) - ψ^{pδp}_F(x)|. Points must satisfy
/// 0 < x_1 < ... < x_N (GeometryError otherwise).
double duality_compare(const Momenta& k, double c1, double c2, std::span<const std::vector<double>> points);

/// `count` random points in the fundamental wedge with coordinates in (0, scale].
std::vector<std::vector<double>> fundamental_wedge_points(int rank, std::size_t count, std::uint64_t seed,
                                                          double scale = 3.0);

}  // namespace cnbethe
