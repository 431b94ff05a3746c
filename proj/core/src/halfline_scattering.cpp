#include "cnbethe/halfline_scattering.hpp"

#include <cmath>

#include "cnbethe/errors.hpp"

namespace cnbethe {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

Complex mobius(double k, Complex w) {
  const Complex ik{0.0, k};
  return (ik + w) / (ik - w);
}

}  // namespace

std::string to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even" || text == "+") return Parity::Even;
  if (text == "odd" || text == "-") return Parity::Odd;
  throw DomainError("parity must be 'even' or 'odd', got '" + text + "'");
}

ScatteringAmplitude reflection_amp(Model model, Parity parity, double k, double coupling) {
  require_positive(k, "k");
  require_positive(coupling, "coupling");
  Complex value;
  if (model == Model::Delta) {
    value = parity == Parity::Even ? mobius(k, coupling / 2.0) : Complex{-1.0, 0.0};
  } else {
    value = parity == Parity::Even ? Complex{1.0, 0.0} : mobius(k, 1.0 / (2.0 * coupling));
  }
  return {model, parity, k, value};
}

FiniteWallSolution finite_wall_solution(Model model, Parity parity, double k, double coupling, double v0,
                                        std::optional<double> g_tilde) {
  require_positive(k, "k");
  require_positive(coupling, "coupling");
  if (!(v0 > k * k) || !std::isfinite(v0)) {
    throw DomainError("V0 must exceed k^2 (got V0=" + std::to_string(v0) + ", k=" + std::to_string(k) + ")");
  }
  const double root = std::sqrt(v0);
  const double omega = std::sqrt(v0 - k * k);
  FiniteWallSolution out;
  out.omega = omega;
  if (model == Model::Delta) {
    double w = omega;
    if (parity == Parity::Even) {
      out.effective_coupling = coupling / 2.0 - root;
      // ω - √V_0 without cancellation.
      w = coupling / 2.0 - k * k / (omega + root);
    }
    out.reflection = {model, parity, k, mobius(k, w)};
    out.interior = 1.0 + out.reflection.value;
  } else {
    const double gt = parity == Parity::Even ? g_tilde.value_or(root) : 2.0 * coupling;
    out.effective_coupling = gt;
    const double w = omega / (1.0 + omega * gt);
    out.reflection = {model, parity, k, mobius(k, w)};
    out.interior = (1.0 + out.reflection.value) / (1.0 + omega * gt);
  }
  return out;
}

std::vector<double> log_spaced_grid(double start, double stop, std::size_t count) {
  require_positive(start, "grid start");
  require_positive(stop, "grid stop");
  if (count == 0) return {};
  if (count == 1) return {start};
  const double a = std::log10(start);
  const double step = (std::log10(stop) - a) / static_cast<double>(count - 1);
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = std::pow(10.0, a + step * static_cast<double>(j));
  out.back() = stop;
  return out;
}

SweepResult convergence_sweep(Model model, Parity parity, double k, double coupling, std::span<const double> grid) {
  SweepResult result;
  result.model = model;
  result.parity = parity;
  result.k = k;
  result.coupling = coupling;
  result.limit = reflection_amp(model, parity, k, coupling).value;
  for (double v0 : grid) {
    const auto b = finite_wall_amp(model, parity, k, coupling, v0).value;
    result.rows.push_back({v0, b, std::abs(b - result.limit)});
  }
  result.monotone = !result.rows.empty();
  for (std::size_t j = 1; j < result.rows.size(); ++j) {
    if (!(result.rows[j].deviation < result.rows[j - 1].deviation)) result.monotone = false;
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (std::size_t j = result.rows.size() / 2; j < result.rows.size(); ++j) {
    const auto& row = result.rows[j];
    if (!(row.deviation > 0.0)) continue;
    const double x = std::log(row.v0);
    const double y = std::log(row.deviation);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  if (n < 2 || !(std::abs(denom) > 0.0)) throw DomainError("convergence fit needs at least two distinct grid points");
  result.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
  result.fit_points = n;
  return result;
}

}  // namespace cnbethe
