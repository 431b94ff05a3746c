#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <random>
#include <span>
#include <sstream>

#include <json.hpp>

#include "cnbethe/bethe_wavefunction.hpp"
#include "cnbethe/boundary_and_duality.hpp"
#include "cnbethe/consistency.hpp"
#include "cnbethe/errors.hpp"
#include "cnbethe/halfline_scattering.hpp"
#include "cnbethe/representations.hpp"

namespace cnbethe::cli {
namespace {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string partition_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
  return s + "]";
}

std::string document_name(const RunConfig& config) {
  return config.subcommand.empty() ? config.command : config.command + "_" + config.subcommand;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (!c.subcommand.empty()) j["subcommand"] = c.subcommand;
  j["model"] = c.model;
  j["N"] = c.n;
  j["rep"] = c.regular ? "regular" : "scalar";
  j["sector"] = c.sector;
  j["c1"] = c.c1;
  j["c2"] = c.c2;
  j["lambda1"] = c.lambda1;
  j["lambda2"] = c.lambda2;
  j["k"] = c.k;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["probes"] = c.probes;
  j["points"] = c.points;
  j["h"] = c.h;
  if (c.tol) {
    j["tol"] = *c.tol;
  } else {
    j["tol"] = nullptr;
  }
  j["parity"] = c.parity;
  j["c"] = c.c;
  j["lambda"] = c.lambda;
  j["v0"] = c.v0;
  j["format"] = c.format == Format::Json ? "json" : "csv";
  return j;
}

Json header(const RunConfig& config) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = document_name(config);
  j["seed"] = config.seed;
  j["config"] = config_json(config);
  return j;
}

std::string csv_header(const RunConfig& config) {
  std::string s = "# schema_version=" + std::to_string(kSchemaVersion) + "\n";
  s += "# command=" + document_name(config) + "\n";
  s += "# seed=" + std::to_string(config.seed) + "\n";
  s += "# config=" + config_json(config).dump() + "\n";
  return s;
}

CommandResult finish(const RunConfig& config, const Json& doc, const std::string& csv_body, bool ok) {
  CommandResult r;
  r.code = ok ? ExitCode::Ok : ExitCode::ExpectationViolated;
  if (config.format == Format::Json) {
    r.document = doc.dump(2) + "\n";
    r.extension = "json";
  } else {
    r.document = csv_header(config) + csv_body;
    r.extension = "csv";
  }
  return r;
}

void validate(const RunConfig& c) {
  if (c.n < 1 || c.n > kMaxSupportedRank) {
    throw UsageError("--N must be in [1, " + std::to_string(kMaxSupportedRank) + "], got " + std::to_string(c.n));
  }
  if (c.samples == 0) throw UsageError("--samples must be positive");
  if (!(c.h > 0.0)) throw UsageError("--h must be positive");
  if (c.tol && !(*c.tol > 0.0)) throw UsageError("--tol must be positive");
}

ModelSpec spec_from(const RunConfig& c) {
  const Model model = parse_model(c.model);
  return model == Model::Delta ? ModelSpec::delta(c.c1, c.c2) : ModelSpec::pdp(c.lambda1, c.lambda2);
}

Representation rep_from(const RunConfig& c) {
  if (c.regular) return Representation::regular(c.n);
  return Representation::scalar(c.n, Sector::parse(c.sector));
}

Momenta momenta_from(const RunConfig& c, std::mt19937_64& rng) {
  if (!c.k.empty()) {
    if (c.k.size() != static_cast<std::size_t>(c.n)) {
      throw UsageError("--k has " + std::to_string(c.k.size()) + " entries, expected N=" + std::to_string(c.n));
    }
    return Momenta(c.k);
  }
  std::uniform_real_distribution<double> dist(0.3, 3.0);
  std::vector<double> k;
  while (k.size() < static_cast<std::size_t>(c.n)) {
    const double candidate = dist(rng);
    if (std::all_of(k.begin(), k.end(), [&](double x) { return std::abs(x - candidate) > 0.05; })) {
      k.push_back(candidate);
    }
  }
  return Momenta(std::move(k));
}

std::vector<Complex> initial_from(const Representation& rep, std::mt19937_64& rng) {
  if (rep.is_scalar()) return {Complex{1.0, 0.0}};
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> v(rep.dimension());
  for (auto& z : v) z = {dist(rng), dist(rng)};
  return v;
}

Json inconsistency_json(const InconsistencyError& e, int rank) {
  Json w;
  w["status"] = "inconsistent";
  w["element_index"] = e.element();
  w["element"] = evaluate_word(e.first_word(), rank).to_string();
  w["first_word"] = to_string(e.first_word());
  w["second_word"] = to_string(e.second_word());
  w["residual"] = e.residual();
  return w;
}

CommandResult inconsistency_result(const RunConfig& config, const InconsistencyError& e) {
  Json doc = header(config);
  doc["witness"] = inconsistency_json(e, config.n);
  const std::string csv = "status,element_index,first_word,second_word,residual\ninconsistent," +
                          std::to_string(e.element()) + "," + to_string(e.first_word()) + "," +
                          to_string(e.second_word()) + "," + fmt(e.residual()) + "\n";
  return finish(config, doc, csv, false);
}

Json point_json(std::span<const double> x) { return Json(std::vector<double>(x.begin(), x.end())); }

std::string point_string(std::span<const double> x) {
  std::string s;
  for (std::size_t j = 0; j < x.size(); ++j) s += (j ? ";" : "") + fmt(x[j]);
  return s;
}

// Generic interior points of random wedges, every coordinate gap at least `margin`.
std::vector<std::vector<double>> interior_points(const WeylGroup& group, std::size_t count, std::mt19937_64& rng,
                                                 double margin) {
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  std::uniform_real_distribution<double> gap(0.0, 1.0);
  std::vector<std::vector<double>> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<double> y(static_cast<std::size_t>(group.rank()));
    double position = 0.0;
    for (auto& v : y) v = position += margin + gap(rng);
    out.push_back(apply_to_point(inverse(group.element(pick(rng))), y));
  }
  return out;
}

CommandResult verify_boundary(const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  const auto spec = spec_from(config);
  const auto rep = rep_from(config);
  const auto k = momenta_from(config, rng);
  const auto initial = initial_from(rep, rng);
  const double tol = config.tol.value_or(kBoundaryTolerance);
  const auto coeffs = compute_coefficients(k, initial, spec, rep);

  Json rows = Json::array();
  std::string csv = "kind,wedge,index,point,continuity,jump,error\n";
  double worst = 0.0;
  std::size_t errors = 0;
  auto record = [&](FacetKind kind, const BoundaryProbe& probe) {
    Json row;
    row["kind"] = to_string(kind);
    row["wedge"] = probe.wedge.to_string();
    row["index"] = probe.index;
    row["point"] = point_json(probe.point);
    std::string error;
    BoundaryResidual r;
    try {
      r = kind == FacetKind::PairContact ? check_pair_boundary(coeffs, probe) : check_wall_boundary(coeffs, probe);
      worst = std::max(worst, r.max());
    } catch (const std::domain_error& e) {
      error = e.what();
      ++errors;
    }
    row["continuity"] = r.first;
    row["jump"] = r.second;
    row["error"] = error;
    rows.push_back(row);
    csv += to_string(kind) + "," + probe.wedge.to_string() + "," + std::to_string(probe.index) + "," +
           point_string(probe.point) + "," + fmt(r.first) + "," + fmt(r.second) + "," + error + "\n";
  };
  for (const auto& p : random_probes(coeffs.group(), FacetKind::PairContact, config.probes, config.seed + 1)) {
    record(FacetKind::PairContact, p);
  }
  for (const auto& p : random_probes(coeffs.group(), FacetKind::WallContact, config.probes, config.seed + 2)) {
    record(FacetKind::WallContact, p);
  }

  Json halfline = Json::array();
  if (rep.is_scalar()) {
    for (const auto& x : fundamental_wedge_points(config.n, config.probes, config.seed + 3)) {
      const auto res = check_halfline_reduction(coeffs, x);
      for (double r : res) worst = std::max(worst, r);
      halfline.push_back({{"point", point_json(x)}, {"residuals", res}});
      for (std::size_t j = 0; j < res.size(); ++j) {
        csv += "halfline,I," + std::to_string(j + 1) + "," + point_string(x) + ",0," + fmt(res[j]) + ",\n";
      }
    }
  }

  const bool ok = worst <= tol && errors == 0;
  Json doc = header(config);
  doc["spec"] = spec.describe();
  doc["representation"] = rep.describe();
  doc["momenta"] = std::vector<double>(k.values().begin(), k.values().end());
  doc["tolerance"] = tol;
  doc["probes"] = rows;
  doc["halfline"] = halfline;
  doc["errors"] = errors;
  doc["max_residual"] = worst;
  doc["pass"] = ok;
  return finish(config, doc, csv, ok);
}

CommandResult verify_eigen(const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  const auto spec = spec_from(config);
  const auto rep = rep_from(config);
  const auto k = momenta_from(config, rng);
  const auto initial = initial_from(rep, rng);
  const double tol = config.tol.value_or(1e-6);
  const auto coeffs = compute_coefficients(k, initial, spec, rep);
  const double e = energy(k);

  Json rows = Json::array();
  std::string csv = "point,psi_re,psi_im,residual_h,residual_h2,ratio,normalized,estimated_energy,error\n";
  double worst = 0.0;
  std::size_t errors = 0;
  for (const auto& x : interior_points(coeffs.group(), config.points, rng, 0.1)) {
    Json row;
    row["point"] = point_json(x);
    try {
      const auto at_h = check_eigen(coeffs, x, config.h);
      const auto at_half = check_eigen(coeffs, x, config.h / 2.0);
      const auto q = coeffs.group().index_of(classify_wedge(x));
      double scale = 0.0;
      for (std::size_t p = 0; p < coeffs.size(); ++p) scale += std::abs(coeffs.amplitude(p, q));
      const double normalized = at_h.residual / (e * scale);
      worst = std::max(worst, normalized);
      const double ratio = at_h.residual / at_half.residual;
      row["psi"] = complex_json(at_h.psi);
      row["residual_h"] = at_h.residual;
      row["residual_h2"] = at_half.residual;
      row["ratio"] = ratio;
      row["normalized"] = normalized;
      row["estimated_energy"] = at_h.estimated_energy();
      csv += point_string(x) + "," + fmt(at_h.psi.real()) + "," + fmt(at_h.psi.imag()) + "," + fmt(at_h.residual) +
             "," + fmt(at_half.residual) + "," + fmt(ratio) + "," + fmt(normalized) + "," +
             fmt(at_h.estimated_energy()) + ",\n";
    } catch (const std::domain_error& err) {
      row["error"] = err.what();
      ++errors;
      csv += point_string(x) + ",,,,,,,," + err.what() + "\n";
    }
    rows.push_back(row);
  }
  const bool ok = worst <= tol && errors == 0;
  Json doc = header(config);
  doc["spec"] = spec.describe();
  doc["representation"] = rep.describe();
  doc["momenta"] = std::vector<double>(k.values().begin(), k.values().end());
  doc["energy"] = e;
  doc["h"] = config.h;
  doc["tolerance"] = tol;
  doc["points"] = rows;
  doc["errors"] = errors;
  doc["max_normalized_residual"] = worst;
  doc["pass"] = ok;
  return finish(config, doc, csv, ok);
}

CommandResult verify_duality(const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  const auto k = momenta_from(config, rng);
  const double tol = config.tol.value_or(kIdentityTolerance);
  const auto points = fundamental_wedge_points(config.n, config.points, config.seed + 1);
  const auto pair = build_dual_pair(k, config.c1, config.c2);
  const double table_diff = max_table_difference(pair.delta_boson, pair.pdp_fermion);
  const double psi_diff = duality_compare(k, config.c1, config.c2, points);

  Json rows = Json::array();
  std::string csv = "point,delta_re,delta_im,pdp_re,pdp_im,abs_diff\n";
  for (const auto& x : points) {
    const auto a = evaluate_psi(pair.delta_boson, x).value;
    const auto b = evaluate_psi(pair.pdp_fermion, x).value;
    rows.push_back({{"point", point_json(x)},
                    {"delta_boson", complex_json(a)},
                    {"pdp_fermion", complex_json(b)},
                    {"abs_diff", std::abs(a - b)}});
    csv += point_string(x) + "," + fmt(a.real()) + "," + fmt(a.imag()) + "," + fmt(b.real()) + "," +
           fmt(b.imag()) + "," + fmt(std::abs(a - b)) + "\n";
  }
  const bool ok = table_diff <= tol && psi_diff <= tol;
  Json doc = header(config);
  doc["momenta"] = std::vector<double>(k.values().begin(), k.values().end());
  doc["delta_couplings"] = {config.c1, config.c2};
  doc["pdp_couplings"] = {1.0 / config.c1, 1.0 / config.c2};
  doc["tolerance"] = tol;
  doc["max_table_difference"] = table_diff;
  doc["max_psi_difference"] = psi_diff;
  doc["points"] = rows;
  doc["pass"] = ok;
  return finish(config, doc, csv, ok);
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("grid must be start:stop:count, got '" + text + "'");
  double start = 0.0, stop = 0.0;
  long count = 0;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    count = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw UsageError("cannot parse grid '" + text + "'");
  }
  if (!(start > 0.0) || !(stop > start) || count < 2) {
    throw UsageError("grid needs 0 < start < stop and count >= 2, got '" + text + "'");
  }
  return log_spaced_grid(start, stop, static_cast<std::size_t>(count));
}

std::string output_path(const RunConfig& config, const std::string& extension) {
  if (!config.out.empty()) return config.out;
  if (const char* dir = std::getenv("CNBETHE_OUTPUT_DIR"); dir && *dir) {
    return (std::filesystem::path(dir) / (document_name(config) + "." + extension)).string();
  }
  return {};
}

CommandResult cmd_consistency(const RunConfig& config) {
  const auto spec = spec_from(config);
  const auto rep = rep_from(config);
  const double tol = config.tol.value_or(kIdentityTolerance);
  const auto report = consistency_report(spec, rep, config.samples, config.seed, tol);

  Json rows = Json::array();
  std::string csv = "relation,expectation,outcome,max_residual,worst_u,worst_v,samples,expectation_met\n";
  for (const auto& r : report.relations) {
    rows.push_back({{"relation", r.relation},
                    {"expectation", to_string(r.expectation)},
                    {"outcome", to_string(r.outcome)},
                    {"max_residual", r.max_residual},
                    {"worst_u", r.worst_u},
                    {"worst_v", r.worst_v},
                    {"samples", r.samples},
                    {"expectation_met", r.expectation_met()}});
    csv += r.relation + "," + to_string(r.expectation) + "," + to_string(r.outcome) + "," + fmt(r.max_residual) +
           "," + fmt(r.worst_u) + "," + fmt(r.worst_v) + "," + std::to_string(r.samples) + "," +
           (r.expectation_met() ? "true" : "false") + "\n";
  }
  Json doc = header(config);
  doc["spec"] = report.spec;
  doc["representation"] = report.representation;
  doc["samples"] = report.samples;
  doc["tolerance"] = report.tolerance;
  doc["sample_range"] = report.sample_range;
  doc["relations"] = rows;
  doc["witness"] = {{"u", 1.0},
                    {"v", 1.0},
                    {"lhs", complex_json(report.witness.lhs)},
                    {"rhs", complex_json(report.witness.rhs)},
                    {"residual", report.witness_residual}};
  doc["all_pass"] = report.all_pass();
  doc["expectations_met"] = report.expectations_met();
  return finish(config, doc, csv, report.expectations_met());
}

CommandResult cmd_build(const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  const auto spec = spec_from(config);
  const auto rep = rep_from(config);
  const auto k = momenta_from(config, rng);
  const auto initial = initial_from(rep, rng);
  CoefficientOptions options;
  options.tolerance = config.tol.value_or(kIdentityTolerance);
  try {
    const auto coeffs = compute_coefficients(k, initial, spec, rep, options);
    Json entries = Json::array();
    std::string csv = "index,element,word,component,re,im\n";
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      const auto& g = coeffs.group().element(p);
      const auto word = to_string(word_for(g));
      Json values = Json::array();
      const auto a = coeffs.coefficient(p);
      for (std::size_t q = 0; q < a.size(); ++q) {
        values.push_back(complex_json(a[q]));
        csv += std::to_string(p) + "," + g.to_string() + "," + word + "," + std::to_string(q) + "," +
               fmt(a[q].real()) + "," + fmt(a[q].imag()) + "\n";
      }
      entries.push_back({{"index", p},
                         {"element", g.to_string()},
                         {"word", word},
                         {"k", coeffs.relabelled_momenta()[p]},
                         {"A", values}});
    }
    Json doc = header(config);
    doc["status"] = "consistent";
    doc["spec"] = spec.describe();
    doc["representation"] = rep.describe();
    doc["momenta"] = std::vector<double>(k.values().begin(), k.values().end());
    doc["energy"] = energy(k);
    doc["entry_count"] = coeffs.size();
    doc["cross_checks"] = coeffs.cross_checks();
    doc["max_cross_check_residual"] = coeffs.max_cross_check_residual();
    doc["entries"] = entries;
    return finish(config, doc, csv, true);
  } catch (const InconsistencyError& e) {
    return inconsistency_result(config, e);
  }
}

CommandResult cmd_verify(const RunConfig& config) {
  try {
    if (config.subcommand == "boundary") return verify_boundary(config);
    if (config.subcommand == "eigen") return verify_eigen(config);
    if (config.subcommand == "duality") return verify_duality(config);
  } catch (const InconsistencyError& e) {
    return inconsistency_result(config, e);
  }
  throw UsageError("verify needs one of: boundary, eigen, duality");
}

CommandResult cmd_scatter(const RunConfig& config) {
  const Model model = parse_model(config.model);
  const Parity parity = parse_parity(config.parity);
  if (config.k.size() > 1) throw UsageError("scatter takes a single momentum --k");
  const double k = config.k.empty() ? 1.0 : config.k.front();
  const double coupling = model == Model::Delta ? config.c : config.lambda;
  const auto grid = parse_grid(config.v0);
  const auto sweep = convergence_sweep(model, parity, k, coupling, grid);
  const double tol = config.tol.value_or(kIdentityTolerance);

  Json rows = Json::array();
  std::string csv = "V0,re(B),im(B),abs_dev\n";
  double unimodular = std::abs(std::abs(sweep.limit) - 1.0);
  for (const auto& row : sweep.rows) {
    unimodular = std::max(unimodular, std::abs(std::abs(row.b) - 1.0));
    rows.push_back({{"V0", row.v0}, {"B", complex_json(row.b)}, {"abs_dev", row.deviation}});
    csv += fmt(row.v0) + "," + fmt(row.b.real()) + "," + fmt(row.b.imag()) + "," + fmt(row.deviation) + "\n";
  }
  const bool ok = sweep.monotone && unimodular <= tol;
  Json doc = header(config);
  doc["model"] = to_string(model);
  doc["parity"] = to_string(parity);
  doc["k"] = k;
  doc["coupling"] = coupling;
  doc["limit"] = complex_json(sweep.limit);
  doc["rows"] = rows;
  doc["monotone"] = sweep.monotone;
  doc["slope"] = sweep.slope;
  doc["fit_points"] = sweep.fit_points;
  doc["max_unimodularity_defect"] = unimodular;
  doc["pass"] = ok;
  csv = "# limit=" + fmt(sweep.limit.real()) + "," + fmt(sweep.limit.imag()) + "\n# slope=" + fmt(sweep.slope) +
        "\n# monotone=" + (sweep.monotone ? "true" : "false") + "\n" + csv;
  return finish(config, doc, csv, ok);
}

CommandResult cmd_reps(const RunConfig& config) {
  if (config.n < 1 || config.n > kMaxSumRuleRank) {
    throw UsageError("reps supports N in [1, " + std::to_string(kMaxSumRuleRank) + "]");
  }
  const auto report = dimension_sum_check(config.n);
  Json orbits = Json::array();
  const auto reps = orbit_representatives(config.n);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const int orbit = static_cast<int>(i);
    orbits.push_back({{"orbit", orbit},
                      {"representative", reps[i].values},
                      {"orbit_size", character_orbit(reps[i]).size()},
                      {"stabilizer_order", stabilizer_order(config.n, orbit)},
                      {"sum_of_squares", report.per_orbit[i]}});
  }
  Json irreps_json = Json::array();
  std::string csv = "orbit,lambda,mu,dimension\n";
  for (const auto& d : report.descriptors) {
    irreps_json.push_back({{"orbit", d.orbit},
                           {"lambda", partition_string(d.lambda)},
                           {"mu", partition_string(d.mu)},
                           {"dimension", d.dimension}});
    csv += std::to_string(d.orbit) + ",\"" + partition_string(d.lambda) + "\",\"" + partition_string(d.mu) +
           "\"," + std::to_string(d.dimension) + "\n";
  }
  Json doc = header(config);
  doc["N"] = config.n;
  doc["group_order"] = report.group_order;
  doc["orbits"] = orbits;
  doc["irreps"] = irreps_json;
  doc["sum_of_squares"] = report.sum_of_squares;
  doc["ok"] = report.ok();
  csv = "# group_order=" + std::to_string(report.group_order) +
        "\n# sum_of_squares=" + std::to_string(report.sum_of_squares) + "\n" + csv;
  return finish(config, doc, csv, report.ok());
}

CommandResult run(const RunConfig& config) {
  try {
    validate(config);
    if (config.command == "consistency") return cmd_consistency(config);
    if (config.command == "build") return cmd_build(config);
    if (config.command == "verify") return cmd_verify(config);
    if (config.command == "scatter") return cmd_scatter(config);
    if (config.command == "reps") return cmd_reps(config);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const std::logic_error& e) {
    CommandResult r;
    r.code = ExitCode::Usage;
    r.document = std::string("error: ") + e.what() + "\n";
    r.extension = "txt";
    return r;
  }
}

}  // namespace cnbethe::cli
