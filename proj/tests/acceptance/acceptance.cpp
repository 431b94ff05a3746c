// Acceptance gate. One line per criterion: PASS/FAIL, runtime, details.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cnbethe/boundary_and_duality.hpp"
#include "cnbethe/consistency.hpp"
#include "cnbethe/halfline_scattering.hpp"
#include "oracle.hpp"

using namespace cnbethe;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

void require(Verdict& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Momenta generic_momenta(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.3, 3.0);
  std::vector<double> k;
  while (k.size() < static_cast<std::size_t>(n)) {
    const double x = d(rng);
    bool apart = true;
    for (double y : k) apart = apart && std::abs(x - y) > 0.05;
    if (apart) k.push_back(x);
  }
  return Momenta(k);
}

std::vector<Complex> random_initial(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<Complex> v(dim);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

bool is_operator_relation(const std::string& r) {
  return r == "unitarity" || r == "braid" || r == "reflection" || r == "commuting";
}

Verdict group_core() {
  Verdict o;
  for (int n = 2; n <= 4; ++n) {
    const auto id = SignedPermutation::identity(n);
    const auto r = SignedPermutation::reflection(n, 1);
    auto t = [n](int i) { return SignedPermutation::transposition(n, i); };
    auto prod = [](std::initializer_list<SignedPermutation> gs) {
      auto acc = *gs.begin();
      for (auto it = gs.begin() + 1; it != gs.end(); ++it) acc = compose(acc, *it);
      return acc;
    };
    require(o, compose(r, r) == id, "R1^2");
    for (int i = 1; i < n; ++i) require(o, compose(t(i), t(i)) == id, "Ti^2");
    for (int i = 1; i + 1 < n; ++i)
      require(o, prod({t(i), t(i + 1), t(i)}) == prod({t(i + 1), t(i), t(i + 1)}), "braid");
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) require(o, compose(t(i), t(j)) == compose(t(j), t(i)), "far commute");
    for (int i = 2; i < n; ++i) require(o, compose(r, t(i)) == compose(t(i), r), "R1 Ti commute");
    require(o, prod({r, t(1), r, t(1)}) == prod({t(1), r, t(1), r}), "R1T1R1T1");

    const std::size_t expected = n == 2 ? 8 : n == 3 ? 48 : 384;
    const auto all = enumerate(n);
    require(o, all.size() == expected && oracle::group(n).size() == expected, "order N=" + std::to_string(n));
  }
  o.detail = o.pass ? "relations N=2..4, orders 8/48/384" : o.detail;
  return o;
}

Verdict yang_baxter_delta_regular() {
  Verdict o;
  const auto spec = ModelSpec::delta(1.0, 2.0);
  const auto rep = Representation::regular(3);
  const auto report = consistency_report(spec, rep, 200, 2024);
  double worst = 0.0;
  for (const auto& r : report.relations) {
    if (!is_operator_relation(r.relation) && r.relation != "braid_coefficient" && r.relation != "reflection_coefficient")
      continue;
    worst = std::max(worst, r.max_residual);
    require(o, r.max_residual <= 1e-12, r.relation + "=" + fmt(r.max_residual));
  }

  // Dense oracle on a few samples.
  const oracle::Regular reg(3);
  const auto t1 = reg.rho(oracle::swap(3, 1)), t2 = reg.rho(oracle::swap(3, 2)), r1 = reg.rho(oracle::flip(3));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int s = 0; s < 3; ++s) {
    const double u = d(rng), v = d(rng);
    using oracle::matmul;
    auto y1 = [&](double w) { return oracle::y_delta(w, 1.0, t1); };
    auto y2 = [&](double w) { return oracle::y_delta(w, 1.0, t2); };
    auto z = [&](double w) { return oracle::z_delta(w, 2.0, r1); };
    const double braid =
        oracle::max_diff(matmul(matmul(y1(v), y2(u + v)), y1(u)), matmul(matmul(y2(u), y1(u + v)), y2(v)));
    const double refl = oracle::max_diff(matmul(matmul(matmul(z(2 * v), y1(u + v)), z(2 * u)), y1(u - v)),
                                         matmul(matmul(matmul(y1(u - v), z(2 * u)), y1(u + v)), z(2 * v)));
    require(o, braid <= 1e-12 && refl <= 1e-12, "dense oracle");
  }
  if (o.pass) o.detail = "max residual " + fmt(worst) + " over 200 samples";
  return o;
}

Verdict pdp_witness() {
  Verdict o;
  // a(u) = iu/(iu - 1/λ), b(u) = -(1/λ)/(iu - 1/λ) with λ = 1.
  using oracle::I;
  auto a = [](double u) { return I * u / (I * u - 1.0); };
  auto b = [](double u) { return -1.0 / (I * u - 1.0); };
  const oracle::C lhs = b(1) * a(2) * a(1) + a(1) * a(2) * b(1);
  const oracle::C rhs = a(1) * b(2) * a(1);
  const double exact = 3.0 * std::sqrt(5.0) / 10.0;
  require(o, std::abs(lhs - oracle::C(0.8, -0.4)) <= 1e-15, "oracle lhs");
  require(o, std::abs(rhs - oracle::C(0.2, -0.1)) <= 1e-15, "oracle rhs");

  const auto spec = ModelSpec::pdp(1.0, 1.0);
  const auto terms = braid_coefficient_terms(spec, 1.0, 1.0);
  const double residual = std::abs(terms.lhs - terms.rhs);
  require(o, std::abs(residual - exact) <= 1e-12, "witness " + fmt(residual));
  require(o, std::abs(terms.lhs - lhs) <= 1e-12 && std::abs(terms.rhs - rhs) <= 1e-12, "terms");

  const auto braid = check_braid(spec, Representation::regular(3), 1.0, 1.0);
  require(o, braid.residual > 0.1, "operator braid " + fmt(braid.residual));
  if (o.pass) o.detail = "coefficient residual " + fmt(residual) + ", operator braid " + fmt(braid.residual);
  return o;
}

Verdict scalar_sectors() {
  Verdict o;
  double worst = 0.0;
  for (const auto& spec : {ModelSpec::delta(1.0, 2.0), ModelSpec::pdp(1.0, 1.0)}) {
    for (const auto& s : all_sectors()) {
      const auto report = consistency_report(spec, Representation::scalar(3, s), 100, 11, 1e-14);
      for (const auto& r : report.relations) {
        if (!is_operator_relation(r.relation) || r.outcome == cnbethe::Outcome::NotApplicable) continue;
        worst = std::max(worst, r.max_residual);
        require(o, r.max_residual <= 1e-14, to_string(spec.model()) + " " + s.to_string() + " " + r.relation);
      }
    }
  }
  if (o.pass) o.detail = "max operator residual " + fmt(worst);
  return o;
}

Verdict word_independence() {
  Verdict o;
  const auto k = generic_momenta(3, 3);
  const auto spec = ModelSpec::delta(1.0, 2.0);
  const auto rep = Representation::regular(3);
  const auto res = word_independence_test(k, spec, rep, 50, 17);
  require(o, res.trials == 50 && res.max_residual <= 1e-12, "word pairs " + fmt(res.max_residual));
  const auto c = compute_coefficients(k, random_initial(rep.dimension(), 4), spec, rep);
  require(o, c.cross_checks() > 0 && c.max_cross_check_residual() <= 1e-12, "cross checks");
  if (o.pass)
    o.detail = "max word diff " + fmt(res.max_residual) + ", " + std::to_string(c.cross_checks()) +
               " cross-checks ≤ " + fmt(c.max_cross_check_residual());
  return o;
}

Verdict boundary_conditions() {
  Verdict o;
  double worst = 0.0;
  auto sweep = [&](const BetheCoefficients& c, const std::string& label) {
    for (auto kind : {FacetKind::PairContact, FacetKind::WallContact}) {
      for (const auto& p : random_probes(c.group(), kind, 20, 99)) {
        const auto r = kind == FacetKind::PairContact ? check_pair_boundary(c, p) : check_wall_boundary(c, p);
        worst = std::max(worst, r.max());
        require(o, r.max() <= 1e-10, label + " " + to_string(kind) + " " + fmt(r.max()));
      }
    }
  };
  for (int n : {2, 3}) {
    const auto k = generic_momenta(n, 40 + static_cast<std::uint64_t>(n));
    sweep(compute_coefficients(k, ModelSpec::delta(1.0, 2.0), Representation::scalar(n, {1, 1})), "delta boson");
    const auto reg = Representation::regular(n);
    sweep(compute_coefficients(k, random_initial(reg.dimension(), 6), ModelSpec::delta(1.0, 2.0), reg), "delta regular");
    sweep(compute_coefficients(k, ModelSpec::pdp(0.7, 1.3), Representation::scalar(n, {-1, -1})), "pdp fermion");
  }
  if (o.pass) o.detail = "max residual " + fmt(worst);
  return o;
}

Verdict eigenvalue() {
  Verdict o;
  const Momenta k({1.0, 2.0});
  const auto c = compute_coefficients(k, ModelSpec::delta(1.0, 2.0), Representation::scalar(2, {1, 1}));
  const std::vector<double> x{0.7, 1.9};
  const double ratio = check_eigen(c, x, 1e-2).residual / check_eigen(c, x, 5e-3).residual;
  const auto fine = check_eigen(c, x, 1e-4);
  const double rel = std::abs(fine.estimated_energy() - energy(k)) / energy(k);
  require(o, std::abs(ratio - 4.0) <= 0.5, "ratio " + fmt(ratio));
  require(o, rel <= 1e-6, "energy rel " + fmt(rel));
  if (o.pass) o.detail = "ratio " + fmt(ratio) + ", energy rel err " + fmt(rel);
  return o;
}

Verdict duality() {
  Verdict o;
  double table = 0.0, psi = 0.0;
  for (int n : {2, 3}) {
    const auto k = generic_momenta(n, 60 + static_cast<std::uint64_t>(n));
    const auto pair = build_dual_pair(k, 1.0, 2.0);
    table = std::max(table, max_table_difference(pair.delta_boson, pair.pdp_fermion));
    psi = std::max(psi, duality_compare(k, 1.0, 2.0, fundamental_wedge_points(n, 20, 8)));
  }
  require(o, table <= 1e-12, "table " + fmt(table));
  require(o, psi <= 1e-12, "psi " + fmt(psi));
  if (o.pass) o.detail = "table diff " + fmt(table) + ", psi diff " + fmt(psi);
  return o;
}

Verdict triviality() {
  Verdict o;
  // Both couplings drop out where the wall factor is trivial too: delta (-,-)
  // and pdp (+,+). For the other wall parity only the pair coupling drops out.
  const std::vector<std::pair<double, double>> couplings{{0.1, 0.3}, {5.0, 7.0}, {1.0, 2.0}};
  for (int n : {2, 3}) {
    const auto k = generic_momenta(n, 80 + static_cast<std::uint64_t>(n));
    for (int eps_r : {1, -1}) {
      const bool wall_trivial_delta = eps_r == -1, wall_trivial_pdp = eps_r == 1;
      const auto f = Representation::scalar(n, {-1, eps_r});
      const auto b = Representation::scalar(n, {1, eps_r});
      const auto base = compute_coefficients(k, ModelSpec::delta(1.0, 2.0), f);
      const auto pbase = compute_coefficients(k, ModelSpec::pdp(1.0, 2.0), b);
      for (auto [g1, g2] : couplings) {
        const double d2 = wall_trivial_delta ? g2 : 2.0, p2 = wall_trivial_pdp ? g2 : 2.0;
        require(o, max_table_difference(base, compute_coefficients(k, ModelSpec::delta(g1, d2), f)) == 0.0,
                "delta fermion eps_R=" + std::to_string(eps_r));
        require(o, max_table_difference(pbase, compute_coefficients(k, ModelSpec::pdp(g1, p2), b)) == 0.0,
                "pdp boson eps_R=" + std::to_string(eps_r));
      }
    }
  }
  if (o.pass) o.detail = "exact agreement across couplings";
  return o;
}

Verdict halfline_limits() {
  Verdict o;
  const auto grid = log_spaced_grid(1e3, 1e9, 25);
  std::string slopes;
  for (auto m : {Model::Delta, Model::Pdp}) {
    const double g = m == Model::Delta ? 2.0 : 0.5;
    for (auto p : {Parity::Even, Parity::Odd}) {
      const auto s = convergence_sweep(m, p, 1.0, g, grid);
      require(o, std::abs(s.slope + 0.5) <= 0.05, to_string(m) + " " + to_string(p) + " slope " + fmt(s.slope));
      slopes += (slopes.empty() ? "" : " ") + fmt(s.slope);
    }
  }
  require(o, reflection_amp(Model::Delta, Parity::Odd, 1.0, 2.0).value == Complex(-1.0), "delta A-");
  require(o, reflection_amp(Model::Pdp, Parity::Even, 1.0, 0.5).value == Complex(1.0), "pdp A+");
  if (o.pass) o.detail = "slopes " + slopes;
  return o;
}

Verdict sum_rule() {
  Verdict o;
  std::string sums;
  for (int n = 1; n <= 4; ++n) {
    const auto r = dimension_sum_check(n);
    std::uint64_t order = 1;
    for (int j = 1; j <= n; ++j) order *= 2 * static_cast<std::uint64_t>(j);
    require(o, r.ok() && r.sum_of_squares == order, "N=" + std::to_string(n));
    sums += (sums.empty() ? "" : "/") + std::to_string(r.sum_of_squares);
  }
  if (o.pass) o.detail = "sums " + sums;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"group_core", group_core},
      {"yang_baxter_reflection_delta_regular", yang_baxter_delta_regular},
      {"pdp_inconsistency_witness", pdp_witness},
      {"scalar_sector_consistency", scalar_sectors},
      {"word_independence", word_independence},
      {"boundary_conditions", boundary_conditions},
      {"eigenvalue_check", eigenvalue},
      {"duality", duality},
      {"triviality", triviality},
      {"halfline_limits", halfline_limits},
      {"dimension_sum_rule", sum_rule},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("[%2zu] %-4s %-38s %9.1f ms  %s\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), ms,
                out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
