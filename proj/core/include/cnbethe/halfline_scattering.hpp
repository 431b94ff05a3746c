#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnbethe/exchange_operators.hpp"

namespace cnbethe {

/// Even (+) or odd (-) behaviour under x -> -x.
enum class Parity { Even, Odd };

std::string to_string(Parity parity);
/// "even"/"+" or "odd"/"-"; DomainError otherwise.
Parity parse_parity(const std::string& text);

/// Coefficient of the outgoing wave in e^{-ikx} + A e^{ikx}.
struct ScatteringAmplitude {
  Model model = Model::Delta;
  Parity parity = Parity::Even;
  double k = 0.0;
  Complex value;
};

/**
 * Half-line amplitudes with the wall condition at x = 0⁺:
 *   delta: A_+ = (ik + c/2)/(ik - c/2),  A_- = -1
 *   pdp:   A_+ = 1,                      A_- = (ik + 1/2λ)/(ik - 1/2λ)
 * DomainError unless k > 0 and coupling > 0.
 */
ScatteringAmplitude reflection_amp(Model model, Parity parity, double k, double coupling);

/**
 * Line problem with a step V_0 on x < 0 plus the symmetric point interaction.
 * Outside ψ = e^{-ikx} + B e^{ikx}, under the wall ψ = C e^{ωx}, ω = √(V_0 - k²).
 */
struct FiniteWallSolution {
  ScatteringAmplitude reflection;  ///< B
  Complex interior;                ///< C
  double omega = 0.0;
  double effective_coupling = 0.0;  ///< g (delta) or g̃ (pdp)
};

/**
 *   delta: B = (ik + ω + g)/(ik - ω - g),  g_+ = c/2 - √V_0, g_- = 0,  C = 1 + B
 *   pdp:   B = (ik + w)/(ik - w),  w = ω/(1 + ωg̃),  g̃_+ = √V_0, g̃_- = 2λ,
 *          C = (1 + B)/(1 + ωg̃)
 * `g_tilde` replaces g̃_+ for the pdp even case. DomainError if V_0 <= k².
 */
FiniteWallSolution finite_wall_solution(Model model, Parity parity, double k, double coupling, double v0,
                                        std::optional<double> g_tilde = std::nullopt);

inline ScatteringAmplitude finite_wall_amp(Model model, Parity parity, double k, double coupling, double v0,
                                           std::optional<double> g_tilde = std::nullopt) {
  return finite_wall_solution(model, parity, k, coupling, v0, g_tilde).reflection;
}

/// `count` points from start to stop, equally spaced in log10.
std::vector<double> log_spaced_grid(double start, double stop, std::size_t count);

struct SweepRow {
  double v0 = 0.0;
  Complex b;
  double deviation = 0.0;  ///< |B - A|
};

struct SweepResult {
  Model model = Model::Delta;
  Parity parity = Parity::Even;
  double k = 0.0;
  double coupling = 0.0;
  Complex limit;  ///< A
  std::vector<SweepRow> rows;
  bool monotone = false;  ///< deviation strictly decreasing along the grid
  double slope = 0.0;     ///< least squares d log|B-A| / d log V_0 over the last half
  std::size_t fit_points = 0;
};

/// DomainError if any grid entry is <= k² or fewer than two rows enter the fit.
SweepResult convergence_sweep(Model model, Parity parity, double k, double coupling, std::span<const double> grid);

}  // namespace cnbethe
