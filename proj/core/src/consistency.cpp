#include "cnbethe/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cnbethe/errors.hpp"

namespace cnbethe {
namespace {

ResidualReport make_report(std::string name, double u, double v, double residual, double tolerance) {
  return {std::move(name), u, v, residual, tolerance, residual <= tolerance ? Outcome::Pass : Outcome::Fail};
}

ResidualReport not_applicable(std::string name, double u, double v, double tolerance) {
  return {std::move(name), u, v, 0.0, tolerance, Outcome::NotApplicable};
}

double scalar_residual(Complex lhs, Complex rhs) { return std::abs(lhs - rhs); }

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string to_string(Expectation expectation) {
  switch (expectation) {
    case Expectation::Holds: return "holds";
    case Expectation::Fails: return "fails";
    case Expectation::Unspecified: return "unspecified";
  }
  return "unknown";
}

double operator_residual(const RepOperator& lhs, const RepOperator& rhs, const Representation& rep) {
  const std::size_t dim = rep.dimension();
  std::vector<Complex> basis(dim, Complex{});
  double worst = 0.0;
  for (std::size_t e = 0; e < dim; ++e) {
    basis[e] = 1.0;
    const auto left = lhs.apply(rep, basis);
    const auto right = rhs.apply(rep, basis);
    for (std::size_t q = 0; q < dim; ++q) worst = std::max(worst, std::abs(left[q] - right[q]));
    basis[e] = 0.0;
  }
  return worst;
}

ResidualReport check_unitarity(const ModelSpec& spec, const Representation& rep, double u, double tolerance) {
  const RepOperator identity;
  double worst = 0.0;
  for (int i = 1; i < rep.rank(); ++i) {
    worst = std::max(worst, operator_residual(Y_op(i, -u, spec, rep) * Y_op(i, u, spec, rep), identity, rep));
  }
  worst = std::max(worst, operator_residual(Z_op(-u, spec, rep) * Z_op(u, spec, rep), identity, rep));
  return make_report("unitarity", u, 0.0, worst, tolerance);
}

ResidualReport check_braid(const ModelSpec& spec, const Representation& rep, double u, double v, double tolerance) {
  if (rep.rank() < 3) return not_applicable("braid", u, v, tolerance);
  double worst = 0.0;
  for (int i = 1; i + 1 < rep.rank(); ++i) {
    const auto lhs = Y_op(i, v, spec, rep) * Y_op(i + 1, u + v, spec, rep) * Y_op(i, u, spec, rep);
    const auto rhs = Y_op(i + 1, u, spec, rep) * Y_op(i, u + v, spec, rep) * Y_op(i + 1, v, spec, rep);
    worst = std::max(worst, operator_residual(lhs, rhs, rep));
  }
  return make_report("braid", u, v, worst, tolerance);
}

ResidualReport check_reflection(const ModelSpec& spec, const Representation& rep, double u, double v,
                                double tolerance) {
  if (rep.rank() < 2) return not_applicable("reflection", u, v, tolerance);
  const auto lhs = Z_op(2 * v, spec, rep) * Y_op(1, u + v, spec, rep) * Z_op(2 * u, spec, rep) *
                   Y_op(1, u - v, spec, rep);
  const auto rhs = Y_op(1, u - v, spec, rep) * Z_op(2 * u, spec, rep) * Y_op(1, u + v, spec, rep) *
                   Z_op(2 * v, spec, rep);
  return make_report("reflection", u, v, operator_residual(lhs, rhs, rep), tolerance);
}

ResidualReport check_commuting_pair(const RepOperator& first, const RepOperator& second, const Representation& rep,
                                    std::string name, double u, double v, double tolerance) {
  return make_report(std::move(name), u, v, operator_residual(first * second, second * first, rep), tolerance);
}

ResidualReport check_commuting(const ModelSpec& spec, const Representation& rep, double u, double v,
                               double tolerance) {
  if (rep.rank() < 3) return not_applicable("commuting", u, v, tolerance);
  double worst = 0.0;
  for (int i = 1; i < rep.rank(); ++i) {
    for (int j = i + 2; j < rep.rank(); ++j) {
      worst = std::max(worst, check_commuting_pair(Y_op(i, u, spec, rep), Y_op(j, v, spec, rep), rep, "", u, v,
                                                   tolerance).residual);
    }
  }
  for (int i = 2; i < rep.rank(); ++i) {
    worst = std::max(
        worst, check_commuting_pair(Z_op(u, spec, rep), Y_op(i, v, spec, rep), rep, "", u, v, tolerance).residual);
  }
  return make_report("commuting", u, v, worst, tolerance);
}

BraidCoefficientTerms braid_coefficient_terms(const ModelSpec& spec, double u, double v) {
  const auto cu = pair_coeffs(u, spec);
  const auto cv = pair_coeffs(v, spec);
  const auto cuv = pair_coeffs(u + v, spec);
  return {cv.b * cuv.a * cu.a + cv.a * cuv.a * cu.b, cu.a * cuv.b * cv.a};
}

std::vector<ResidualReport> coefficient_relations(const ModelSpec& spec, double u, double v, double tolerance) {
  std::vector<ResidualReport> out;
  const auto p = pair_coeffs(u, spec);
  const auto pm = pair_coeffs(-u, spec);
  out.push_back(make_report("pair_unitarity_even", u, v, scalar_residual(pm.a * p.a + pm.b * p.b, 1.0), tolerance));
  out.push_back(make_report("pair_unitarity_odd", u, v, scalar_residual(pm.a * p.b + pm.b * p.a, 0.0), tolerance));

  const auto braid = braid_coefficient_terms(spec, u, v);
  out.push_back(make_report("braid_coefficient", u, v, scalar_residual(braid.lhs, braid.rhs), tolerance));

  const auto w = boundary_coeffs(u, spec);
  const auto wm = boundary_coeffs(-u, spec);
  out.push_back(make_report("wall_unitarity_even", u, v, scalar_residual(wm.a * w.a + wm.b * w.b, 1.0), tolerance));
  out.push_back(make_report("wall_unitarity_odd", u, v, scalar_residual(wm.a * w.b + wm.b * w.a, 0.0), tolerance));

  const auto y_plus = pair_coeffs(u + v, spec);
  const auto y_minus = pair_coeffs(u - v, spec);
  const auto z_2u = boundary_coeffs(2 * u, spec);
  const auto z_2v = boundary_coeffs(2 * v, spec);
  const Complex lhs = z_2v.b * y_plus.b * z_2u.a * y_minus.a + z_2v.b * y_plus.a * z_2u.a * y_minus.b +
                      z_2v.a * y_plus.a * z_2u.b * y_minus.b;
  const Complex rhs = y_minus.a * z_2u.b * y_plus.b * z_2v.a;
  out.push_back(make_report("reflection_coefficient", u, v, scalar_residual(lhs, rhs), tolerance));
  return out;
}

Expectation expected_outcome(const ModelSpec& spec, const Representation& rep, const std::string& relation) {
  if (spec.model() == Model::Delta) return Expectation::Holds;
  // p·δ·p: the coefficient identities assume arbitrary T̂_i, and the braid
  // identity is violated there; in a one-dimensional sector everything holds.
  if (relation == "braid_coefficient") return Expectation::Fails;
  if (relation == "reflection_coefficient") return Expectation::Unspecified;
  if (rep.is_regular()) {
    if (relation == "braid") return Expectation::Fails;
    if (relation == "reflection") return Expectation::Unspecified;
  }
  return Expectation::Holds;
}

bool RelationSummary::expectation_met() const noexcept {
  if (outcome == Outcome::NotApplicable) return true;
  switch (expectation) {
    case Expectation::Holds: return outcome == Outcome::Pass;
    case Expectation::Fails: return outcome == Outcome::Fail;
    case Expectation::Unspecified: return true;
  }
  return false;
}

bool ConsistencyReport::expectations_met() const noexcept {
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.expectation_met(); });
}

bool ConsistencyReport::all_pass() const noexcept {
  return std::all_of(relations.begin(), relations.end(),
                     [](const auto& r) { return r.outcome != Outcome::Fail; });
}

const RelationSummary* ConsistencyReport::find(const std::string& relation) const noexcept {
  for (const auto& r : relations) {
    if (r.relation == relation) return &r;
  }
  return nullptr;
}

ConsistencyReport consistency_report(const ModelSpec& spec, const Representation& rep, std::size_t samples,
                                     std::uint64_t seed, double tolerance, double range) {
  if (samples == 0) throw DomainError("sample count must be at least 1");
  ConsistencyReport report;
  report.spec = spec.describe();
  report.representation = rep.describe();
  report.samples = samples;
  report.seed = seed;
  report.tolerance = tolerance;
  report.sample_range = range;

  std::vector<RelationSummary> summaries;
  auto absorb = [&](const ResidualReport& r) {
    auto it = std::find_if(summaries.begin(), summaries.end(),
                           [&](const auto& s) { return s.relation == r.relation; });
    if (it == summaries.end()) {
      summaries.push_back({r.relation, expected_outcome(spec, rep, r.relation), Outcome::NotApplicable, 0.0,
                           r.u, r.v, 0});
      it = std::prev(summaries.end());
    }
    if (!r.applicable()) return;
    ++it->samples;
    if (it->outcome == Outcome::NotApplicable || r.residual > it->max_residual) {
      it->max_residual = r.residual;
      it->worst_u = r.u;
      it->worst_v = r.v;
    }
    it->outcome = it->max_residual <= tolerance ? Outcome::Pass : Outcome::Fail;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-range, range);
  for (std::size_t s = 0; s < samples; ++s) {
    const double u = dist(rng);
    const double v = dist(rng);
    absorb(check_unitarity(spec, rep, u, tolerance));
    absorb(check_commuting(spec, rep, u, v, tolerance));
    absorb(check_braid(spec, rep, u, v, tolerance));
    absorb(check_reflection(spec, rep, u, v, tolerance));
    for (const auto& r : coefficient_relations(spec, u, v, tolerance)) absorb(r);
  }
  report.relations = std::move(summaries);
  report.witness = braid_coefficient_terms(spec, 1.0, 1.0);
  report.witness_residual = std::abs(report.witness.lhs - report.witness.rhs);
  return report;
}

}  // namespace cnbethe
