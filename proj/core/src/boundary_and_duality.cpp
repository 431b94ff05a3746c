#include "cnbethe/boundary_and_duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cnbethe/errors.hpp"

namespace cnbethe {
namespace {

struct OneSided {
  WavefunctionSample plus;
  WavefunctionSample minus;
};

OneSided one_sided(const BetheCoefficients& coeffs, const BoundaryProbe& probe, const SignedPermutation& neighbour,
                   bool wedge_is_plus) {
  auto inside = evaluate_psi(coeffs, probe.point, probe.wedge);
  auto across = evaluate_psi(coeffs, probe.point, neighbour);
  if (wedge_is_plus) return {std::move(inside), std::move(across)};
  return {std::move(across), std::move(inside)};
}

void check_probe_rank(const BetheCoefficients& coeffs, const BoundaryProbe& probe) {
  if (probe.wedge.rank() != coeffs.rank() || probe.point.size() != static_cast<std::size_t>(coeffs.rank())) {
    throw DimensionError("probe rank does not match coefficients");
  }
}

}  // namespace

std::string to_string(FacetKind kind) { return kind == FacetKind::PairContact ? "pair" : "wall"; }

BoundaryProbe make_probe(FacetKind kind, const SignedPermutation& wedge, int index, std::mt19937_64& rng,
                         double margin) {
  const int n = wedge.rank();
  if (kind == FacetKind::PairContact && (index < 1 || index >= n)) {
    throw IndexError("pair contact index " + std::to_string(index) + " out of range for N=" + std::to_string(n));
  }
  std::uniform_real_distribution<double> extra(0.0, 1.0);
  std::vector<double> y(static_cast<std::size_t>(n));
  double position = 0.0;
  for (int a = 0; a < n; ++a) {
    const bool touching = (kind == FacetKind::WallContact && a == 0) || (kind == FacetKind::PairContact && a == index);
    if (!touching) position += margin + extra(rng);
    y[static_cast<std::size_t>(a)] = position;
  }
  return {kind, wedge, kind == FacetKind::WallContact ? 1 : index, apply_to_point(inverse(wedge), y)};
}

std::vector<BoundaryProbe> random_probes(const WeylGroup& group, FacetKind kind, std::size_t count,
                                         std::uint64_t seed, double margin) {
  if (kind == FacetKind::PairContact && group.rank() < 2) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  std::uniform_int_distribution<int> contact(1, std::max(1, group.rank() - 1));
  std::vector<BoundaryProbe> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    const auto& q = group.element(pick(rng));
    const int index = kind == FacetKind::PairContact ? contact(rng) : 1;
    out.push_back(make_probe(kind, q, index, rng, margin));
  }
  return out;
}

BoundaryResidual check_pair_boundary(const BetheCoefficients& coeffs, const BoundaryProbe& probe) {
  if (probe.kind != FacetKind::PairContact) throw UsageError("check_pair_boundary needs a pair-contact probe");
  check_probe_rank(coeffs, probe);
  const auto& q = probe.wedge;
  const int a = probe.index - 1;
  const auto j = static_cast<std::size_t>(q.image(a));
  const auto k = static_cast<std::size_t>(q.image(a + 1));
  const double s = q.sign(a) * q.sign(a + 1);
  const auto neighbour = compose(q, SignedPermutation::transposition(q.rank(), probe.index));
  const auto sides = one_sided(coeffs, probe, neighbour, q.sign(a) < 0);

  const Complex d_plus = sides.plus.gradient[j] - s * sides.plus.gradient[k];
  const Complex d_minus = sides.minus.gradient[j] - s * sides.minus.gradient[k];
  const double coupling = coeffs.spec().pair_coupling();
  if (coeffs.spec().model() == Model::Delta) {
    return {std::abs(sides.plus.value - sides.minus.value),
            std::abs(d_plus - d_minus - 2.0 * coupling * sides.minus.value)};
  }
  return {std::abs(d_plus - d_minus), std::abs(sides.plus.value - sides.minus.value - 2.0 * coupling * d_minus)};
}

BoundaryResidual check_wall_boundary(const BetheCoefficients& coeffs, const BoundaryProbe& probe) {
  if (probe.kind != FacetKind::WallContact) throw UsageError("check_wall_boundary needs a wall-contact probe");
  check_probe_rank(coeffs, probe);
  const auto& q = probe.wedge;
  const auto j = static_cast<std::size_t>(q.image(0));
  const auto neighbour = compose(q, SignedPermutation::reflection(q.rank(), 1));
  const auto sides = one_sided(coeffs, probe, neighbour, q.sign(0) > 0);

  const Complex d_plus = sides.plus.gradient[j];
  const Complex d_minus = sides.minus.gradient[j];
  const double coupling = coeffs.spec().boundary_coupling();
  if (coeffs.spec().model() == Model::Delta) {
    return {std::abs(sides.plus.value - sides.minus.value),
            std::abs(d_plus - d_minus - coupling * sides.plus.value)};
  }
  return {std::abs(d_plus - d_minus), std::abs(sides.plus.value - sides.minus.value - 4.0 * coupling * d_plus)};
}

std::vector<double> check_halfline_reduction(const BetheCoefficients& coeffs, std::span<const double> point) {
  if (!coeffs.representation().is_scalar()) {
    throw UsageError("half-line reduction needs coefficients built in a one-dimensional sector");
  }
  const std::size_t n = point.size();
  if (n != static_cast<std::size_t>(coeffs.rank())) throw DimensionError("point rank does not match coefficients");
  if (std::any_of(point.begin(), point.end(), [](double x) { return !(x > 0.0); })) {
    throw GeometryError("half-line points need all coordinates > 0");
  }
  const int reflection_sign = coeffs.representation().sector().reflection_sign;
  const double coupling = coeffs.spec().boundary_coupling();

  std::vector<double> residuals;
  for (std::size_t j = 0; j < n; ++j) {
    double smallest_other = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < n; ++l) {
      if (l != j) smallest_other = std::min(smallest_other, point[l]);
    }
    // Any 0 < x_j < min others selects the same wedge.
    std::vector<double> nearby(point.begin(), point.end());
    nearby[j] = std::isfinite(smallest_other) ? smallest_other / 2.0 : 1.0;
    const auto wedge = classify_wedge(nearby);

    std::vector<double> on_wall(point.begin(), point.end());
    on_wall[j] = 0.0;
    const auto sample = evaluate_psi(coeffs, on_wall, wedge);
    const Complex psi = sample.value;
    const Complex dpsi = sample.gradient[j];
    if (coeffs.spec().model() == Model::Delta) {
      residuals.push_back(reflection_sign > 0 ? std::abs(2.0 * dpsi - coupling * psi) : std::abs(psi));
    } else {
      residuals.push_back(reflection_sign > 0 ? std::abs(dpsi) : std::abs(psi - 2.0 * coupling * dpsi));
    }
  }
  return residuals;
}

double EigenCheck::estimated_energy() const noexcept { return -(laplacian / psi).real(); }

EigenCheck check_eigen(const BetheCoefficients& coeffs, std::span<const double> point, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const auto wedge = classify_wedge(point);
  const auto centre = evaluate_psi(coeffs, point, wedge);
  Complex laplacian{};
  std::vector<double> shifted(point.begin(), point.end());
  for (std::size_t m = 0; m < point.size(); ++m) {
    Complex sum = -2.0 * centre.value;
    for (double step : {h, -h}) {
      shifted[m] = point[m] + step;
      bool same_wedge = false;
      try {
        same_wedge = classify_wedge(shifted) == wedge;
      } catch (const BoundaryPointError&) {
      }
      if (!same_wedge) throw GeometryError("finite-difference stencil crosses a wedge facet");
      sum += evaluate_psi(coeffs, shifted, wedge).value;
    }
    shifted[m] = point[m];
    laplacian += sum / (h * h);
  }
  EigenCheck out;
  out.psi = centre.value;
  out.laplacian = laplacian;
  out.energy = energy(coeffs.momenta());
  out.residual = std::abs(laplacian + out.energy * centre.value);
  return out;
}

double max_table_difference(const BetheCoefficients& a, const BetheCoefficients& b) {
  if (a.size() != b.size() || a.vector_dimension() != b.vector_dimension()) {
    throw DimensionError("coefficient tables have different shapes");
  }
  double worst = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    const auto x = a.coefficient(p);
    const auto y = b.coefficient(p);
    for (std::size_t q = 0; q < x.size(); ++q) worst = std::max(worst, std::abs(x[q] - y[q]));
  }
  return worst;
}

DualPair build_dual_pair(const Momenta& k, double c1, double c2) {
  const int n = k.rank();
  return {compute_coefficients(k, ModelSpec::delta(c1, c2), Representation::scalar(n, {1, 1})),
          compute_coefficients(k, ModelSpec::pdp(1.0 / c1, 1.0 / c2), Representation::scalar(n, {-1, -1}))};
}

double duality_compare(const Momenta& k, double c1, double c2, std::span<const std::vector<double>> points) {
  for (const auto& x : points) {
    if (x.size() != static_cast<std::size_t>(k.rank())) throw DimensionError("point rank does not match momenta");
    bool ordered = !x.empty() && x[0] > 0.0;
    for (std::size_t j = 1; ordered && j < x.size(); ++j) ordered = x[j - 1] < x[j];
    if (!ordered) throw GeometryError("duality points must satisfy 0 < x_1 < ... < x_N");
  }
  const auto pair = build_dual_pair(k, c1, c2);
  double worst = 0.0;
  for (const auto& x : points) {
    const auto lhs = evaluate_psi(pair.delta_boson, x).value;
    const auto rhs = evaluate_psi(pair.pdp_fermion, x).value;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::vector<std::vector<double>> fundamental_wedge_points(int rank, std::size_t count, std::uint64_t seed,
                                                          double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, scale);
  std::vector<std::vector<double>> out;
  while (out.size() < count) {
    std::vector<double> x(static_cast<std::size_t>(rank));
    for (auto& v : x) v = dist(rng);
    std::sort(x.begin(), x.end());
    bool generic = x[0] > 0.0;
    for (std::size_t j = 1; generic && j < x.size(); ++j) generic = x[j - 1] < x[j];
    if (generic) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace cnbethe
