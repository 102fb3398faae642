// geovec: geodesic vectors of invariant metrics on homogeneous spaces.
//
// Commands: validate, check, find, exist, classify3d, mcurve.
// Exit codes: 0 success, 1 validation/parse error, 2 numerical
// non-convergence, 3 domain error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "geovec/axis_search.hpp"
#include "geovec/checks.hpp"
#include "geovec/curvature.hpp"
#include "geovec/errors.hpp"
#include "geovec/existence.hpp"
#include "geovec/instance.hpp"
#include "geovec/milnor3d.hpp"
#include "geovec/report.hpp"
#include "geovec/residuals.hpp"
#include "geovec/version.hpp"

using namespace geovec;

namespace {

struct GlobalOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 20000;
  double dedup = 1e-4;
  std::string output;
  std::string format = "json";
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NumericalFailure:
    case ErrorCode::DomainExhausted:
    case ErrorCode::ResidualTooLarge:
      return 2;
    case ErrorCode::OutsideDomain:
    case ErrorCode::ZeroProjection:
      return 3;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseFailure, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseFailure, "cannot open output file: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

Eigen::VectorXd parse_vector_flag(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseFailure, "malformed vector flag entry: " + item);
    }
  }
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<int>(i)) = vals[i];
  return v;
}

ojson report_skeleton(const std::string& command, const std::string& input_path,
                      const std::string& input_bytes, const GlobalOptions& g) {
  ojson doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["input"] = input_path.empty() ? ojson(nullptr) : ojson(input_path);
  doc["input_digest"] =
      input_bytes.empty() ? ojson(nullptr) : ojson(fnv1a_hex(input_bytes));
  doc["options"] = ojson{{"tol", g.tol},
                         {"seed", g.seed},
                         {"samples", g.samples},
                         {"dedup_angle", g.dedup},
                         {"format", g.format}};
  return doc;
}

ojson axis_set_json(const AxisSet& set, const ReductiveSpace& space) {
  ojson axes = ojson::array();
  for (const Axis& a : set.axes) {
    ojson entry;
    entry["direction_m"] = to_json(a.direction);
    entry["direction"] = to_json(space.m_lift(a.direction));
    entry["max_residual"] = a.max_residual;
    axes.push_back(std::move(entry));
  }
  ojson out;
  out["axes"] = std::move(axes);
  out["count"] = static_cast<int>(set.axes.size());
  out["distinct_count"] = set.distinct_count;
  out["manifold"] = set.manifold;
  out["plus_minus_identified"] = set.plus_minus_identified;
  out["converged"] = set.converged;
  out["no_convergence"] = set.failed;
  out["samples"] = set.samples;
  out["seed"] = set.seed;
  out["pairwise_angles"] = to_json(set.pairwise_angles);
  return out;
}

std::string mcurve_csv(const std::vector<MCurveRow>& rows) {
  std::string out = "t,M,domain_flag\n";
  for (const MCurveRow& r : rows) {
    out += format_double(r.t);
    out += ',';
    out += format_double(r.m_value);
    out += ',';
    out += r.domain_flag ? '1' : '0';
    out += '\n';
  }
  return out;
}

int cmd_validate(const std::string& path, const GlobalOptions& g) {
  const std::string bytes = read_file(path);
  ojson doc = report_skeleton("validate", path, bytes, g);
  ojson results;
  ojson errors = ojson::array();
  bool passed = true;

  std::optional<Instance> inst;
  try {
    inst = parse_instance_text(bytes);
  } catch (const InstanceError& e) {
    for (const auto& [key, msg] : e.details())
      errors.push_back(ojson{{"path", key}, {"message", msg}});
    passed = false;
  }

  if (inst) {
    LieAlgebra algebra(inst->dim, inst->basis, inst->brackets);
    const ValidationReport vr = validate(algebra);
    results["jacobi"] = ojson{
        {"passed", vr.passed},
        {"max_violation", vr.max_violation},
        {"worst_triple", {vr.worst_triple[0] + 1, vr.worst_triple[1] + 1,
                          vr.worst_triple[2] + 1}}};
    if (!vr.passed) {
      passed = false;
      errors.push_back(ojson{{"path", "brackets"},
                             {"message", "Jacobi identity violated"}});
    } else {
      try {
        const BuiltInstance built = build_instance(*inst);
        results["reductive"] = ojson{{"dim_h", built.space.dim_h()},
                                     {"dim_m", built.space.dim_m()},
                                     {"passed", true}};
        results["metric"] =
            ojson{{"family", family_name(built.metric.family())},
                  {"passed", true}};
        // regularity of the profile function, sampled on [-b, b]
        const double b = built.metric.inner().norm(built.metric.x());
        PhiExpr phi;
        switch (built.metric.family()) {
          case MetricFamily::Riemannian: phi = PhiExpr::parse("1"); break;
          case MetricFamily::Randers: phi = PhiExpr::parse("1+s"); break;
          case MetricFamily::Kropina: phi = PhiExpr::parse("1/s"); break;
          case MetricFamily::AlphaBeta: phi = built.metric.phi(); break;
        }
        const double b_eff = b > 1e-12 ? b : 1.0;
        const RegularityReport rr = regularity_check(phi, b_eff);
        results["regularity"] =
            ojson{{"b", b_eff},
                  {"regular", rr.regular},
                  {"singular_points", rr.singular_at.size()},
                  {"min_condition_value", rr.min_value}};
      } catch (const Error& e) {
        passed = false;
        errors.push_back(
            ojson{{"path", "(build)"}, {"message", e.what()}});
      }
    }
  }

  results["passed"] = passed;
  results["errors"] = std::move(errors);
  doc["results"] = std::move(results);
  write_output(dump_deterministic(doc), g.output);
  return passed ? 0 : 1;
}

int cmd_check(const std::string& path, const std::string& y_flag,
              const GlobalOptions& g) {
  const std::string bytes = read_file(path);
  const BuiltInstance built = build_instance(parse_instance_text(bytes));
  const Eigen::VectorXd y = parse_vector_flag(y_flag);
  if (y.size() != built.space.dim())
    fail(ErrorCode::DimensionMismatch,
         "--y must have length dim = " + std::to_string(built.space.dim()));
  if (y.cwiseAbs().maxCoeff() == 0.0)
    fail(ErrorCode::ZeroVector, "--y must be nonzero");

  const GeodesicReport rep = check_geodesic(built.space, built.metric, y, g.tol);

  ojson doc = report_skeleton("check", path, bytes, g);
  ojson results;
  results["family"] = family_name(rep.family);
  results["candidate"] = to_json(rep.candidate);
  results["verdict"] = verdict_name(rep.verdict);
  results["residuals"] = to_json(rep.residuals);
  results["max_residual"] = rep.max_residual;
  results["tol"] = rep.tol;
  doc["results"] = std::move(results);
  write_output(dump_deterministic(doc), g.output);
  return rep.status == EvalStatus::NumericalFailure ? 2 : 0;
}

int cmd_find(const std::string& path, const GlobalOptions& g) {
  const std::string bytes = read_file(path);
  const BuiltInstance built = build_instance(parse_instance_text(bytes));
  SearchConfig cfg;
  cfg.samples = g.samples;
  cfg.seed = g.seed;
  cfg.tol = g.tol;
  cfg.dedup_angle = g.dedup;
  const AxisSet set = find_geodesic_vectors(built.space, built.metric, cfg);

  ojson doc = report_skeleton("find", path, bytes, g);
  doc["results"] = axis_set_json(set, built.space);
  write_output(dump_deterministic(doc), g.output);
  return 0;
}

int cmd_exist(const std::string& path, const std::string& mcurve_path,
              const GlobalOptions& g) {
  const std::string bytes = read_file(path);
  const BuiltInstance built = build_instance(parse_instance_text(bytes));
  if (built.metric.family() != MetricFamily::Kropina)
    fail(ErrorCode::InvalidMetric, "exist requires a Kropina instance");

  const ExistenceCertificate cert =
      kropina_existence(built.space, built.ip, built.metric.x());

  ojson doc = report_skeleton("exist", path, bytes, g);
  ojson results;
  results["case"] = existence_case_name(cert.case_tag);
  results["geodesic_vector_m"] = to_json(cert.y_m);
  results["geodesic_vector"] = to_json(built.space.m_lift(cert.y_m));
  results["residual"] = cert.residual;
  results["F_value"] = cert.f_value;
  results["eigenvalues"] = to_json(cert.eigen.eigenvalues);
  results["nonzero_eigenvalue_count"] = cert.eigen.nonzero_count;
  switch (cert.case_tag) {
    case ExistenceCase::RadEqualsM:
      results["case1"] = ojson{{"direction", to_json(cert.case1_direction)},
                               {"path", cert.case1_path}};
      break;
    case ExistenceCase::EigenSplitXEqualsX0:
      results["t0"] = cert.t0;
      results["y_components"] = to_json(cert.y_components);
      break;
    case ExistenceCase::EigenSplitGeneral: {
      results["t0"] = cert.t0;
      results["bracket"] = {cert.bracket_lo, cert.bracket_hi};
      results["y_components"] = to_json(cert.y_components);
      results["bisection_iterations"] = cert.bisection_iterations;
      ojson trace = ojson::array();
      for (const ScanSample& s : cert.scan_trace)
        trace.push_back(ojson{{"t", s.t},
                              {"M", s.m_value},
                              {"domain_ok", s.domain_ok}});
      results["scan_trace"] = std::move(trace);
      break;
    }
  }
  doc["results"] = std::move(results);
  write_output(dump_deterministic(doc), g.output);

  if (cert.case_tag == ExistenceCase::EigenSplitGeneral) {
    std::string csv_path = mcurve_path;
    if (csv_path.empty() && !g.output.empty()) csv_path = g.output + ".mcurve.csv";
    if (!csv_path.empty()) {
      const auto grid = m_curve_default_grid(built.space, built.ip, 201);
      const auto rows = m_curve(built.space, built.ip, built.metric.x(), grid);
      write_output(mcurve_csv(rows), csv_path);
    }
  }
  return 0;
}

int cmd_classify3d(const NonUnimodularParams& params, const std::string& family,
                   const std::string& x_flag, const GlobalOptions& g) {
  MetricFamily fam;
  if (family == "riemannian")
    fam = MetricFamily::Riemannian;
  else if (family == "randers")
    fam = MetricFamily::Randers;
  else
    fail(ErrorCode::ParseFailure, "--metric must be riemannian or randers");

  Eigen::VectorXd x;
  if (!x_flag.empty()) {
    x = parse_vector_flag(x_flag);
    if (x.size() != 3)
      fail(ErrorCode::DimensionMismatch, "--x must have 3 components");
  }
  SearchConfig cfg;
  cfg.samples = g.samples;
  cfg.seed = g.seed;
  cfg.tol = g.tol;
  cfg.dedup_angle = g.dedup;
  const ClassifyReport rep = classify3d(params, fam, x, cfg);

  ojson doc = report_skeleton("classify3d", "", "", g);
  doc["options"]["alpha"] = params.milnor_alpha;
  doc["options"]["beta"] = params.milnor_beta;
  doc["options"]["gamma"] = params.milnor_gamma;
  doc["options"]["delta"] = params.milnor_delta;
  doc["options"]["metric"] = family;
  ojson results;
  results["D"] = rep.predicted.d;
  results["predicted_count"] = rep.predicted.count;
  results["ricci_eigenvalues"] = to_json(Eigen::VectorXd(rep.predicted.ricci));
  results["ricci_distinct"] = rep.predicted.ricci_distinct;
  results["count"] = rep.count;
  results["match"] = rep.match;
  results["prediction_asserted"] = rep.predicted.ricci_distinct;
  results["mutually_orthogonal"] = rep.mutually_orthogonal;
  results["linearly_independent"] = rep.linearly_independent;
  results["has_nonorthogonal_pair"] = rep.has_nonorthogonal_pair;
  results["pairwise_inner_products"] = to_json(rep.inner_products);

  MilnorBuild mb = build(params);
  const ReductiveSpace space = ReductiveSpace::lie_group(std::move(mb.algebra));
  results["axes"] = axis_set_json(rep.axes, space)["axes"];
  doc["results"] = std::move(results);
  write_output(dump_deterministic(doc), g.output);
  return 0;
}

int cmd_mcurve(const std::string& path, double tmin, double tmax, int count,
               bool explicit_range, const GlobalOptions& g) {
  const std::string bytes = read_file(path);
  const BuiltInstance built = build_instance(parse_instance_text(bytes));
  if (built.metric.family() != MetricFamily::Kropina)
    fail(ErrorCode::InvalidMetric, "mcurve requires a Kropina instance");

  std::vector<double> ts;
  if (explicit_range) {
    if (count < 2 || !(tmax > tmin))
      fail(ErrorCode::ParseFailure, "bad --tmin/--tmax/--count range");
    for (int k = 0; k < count; ++k)
      ts.push_back(tmin + (tmax - tmin) * k / (count - 1.0));
  } else {
    ts = m_curve_default_grid(built.space, built.ip, count);
  }
  const auto rows = m_curve(built.space, built.ip, built.metric.x(), ts);

  if (g.format == "csv") {
    write_output(mcurve_csv(rows), g.output);
    return 0;
  }
  ojson doc = report_skeleton("mcurve", path, bytes, g);
  ojson arr = ojson::array();
  for (const MCurveRow& r : rows)
    arr.push_back(ojson{{"t", r.t}, {"M", r.m_value}, {"domain_flag", r.domain_flag}});
  doc["results"] = ojson{{"rows", std::move(arr)}};
  write_output(dump_deterministic(doc), g.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic vectors of invariant metrics on homogeneous spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions g;
  app.add_option("--tol", g.tol, "criterion tolerance");
  app.add_option("--seed", g.seed, "seed for stochastic search paths");
  app.add_option("--samples", g.samples, "sphere samples for the search");
  app.add_option("--dedup", g.dedup, "axis dedup angle (radians)");
  app.add_option("--output", g.output, "write the report to this path");
  app.add_option("--format", g.format, "json|csv (csv: mcurve only)")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string input, y_flag, x_flag = "", mcurve_path, metric_family = "riemannian";
  NonUnimodularParams params;
  double tmin = 0.0, tmax = 0.0;
  int count = 201;

  CLI::App* validate_cmd = app.add_subcommand("validate", "validate an instance file");
  validate_cmd->add_option("file", input)->required();

  CLI::App* check_cmd = app.add_subcommand("check", "geodesic-vector criterion at Y");
  check_cmd->add_option("file", input)->required();
  check_cmd->add_option("--y", y_flag, "candidate vector, comma separated")
      ->required();

  CLI::App* find_cmd = app.add_subcommand("find", "enumerate geodesic axes");
  find_cmd->add_option("file", input)->required();

  CLI::App* exist_cmd =
      app.add_subcommand("exist", "constructive Kropina existence certificate");
  exist_cmd->add_option("file", input)->required();
  exist_cmd->add_option("--mcurve", mcurve_path, "write the M(t) curve CSV here");

  CLI::App* cls_cmd =
      app.add_subcommand("classify3d", "3D non-unimodular classification");
  cls_cmd->add_option("--alpha", params.milnor_alpha)->required();
  cls_cmd->add_option("--beta", params.milnor_beta)->required();
  cls_cmd->add_option("--gamma", params.milnor_gamma)->required();
  cls_cmd->add_option("--delta", params.milnor_delta)->required();
  cls_cmd->add_option("--metric", metric_family, "riemannian|randers");
  cls_cmd->add_option("--x", x_flag, "Randers vector, comma separated");

  CLI::App* mcurve_cmd = app.add_subcommand("mcurve", "sample M(t) = F(Y(t)) - 2");
  mcurve_cmd->add_option("file", input)->required();
  CLI::Option* tmin_opt = mcurve_cmd->add_option("--tmin", tmin);
  mcurve_cmd->add_option("--tmax", tmax)->needs(tmin_opt);
  mcurve_cmd->add_option("--count", count);

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (g.format == "csv" && !mcurve_cmd->parsed())
      fail(ErrorCode::ParseFailure, "--format csv applies to mcurve only");
    if (validate_cmd->parsed())
      rc = cmd_validate(input, g);
    else if (check_cmd->parsed())
      rc = cmd_check(input, y_flag, g);
    else if (find_cmd->parsed())
      rc = cmd_find(input, g);
    else if (exist_cmd->parsed())
      rc = cmd_exist(input, mcurve_path, g);
    else if (cls_cmd->parsed())
      rc = cmd_classify3d(params, metric_family, x_flag, g);
    else if (mcurve_cmd->parsed())
      rc = cmd_mcurve(input, tmin, tmax, count, tmin_opt->count() > 0, g);
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& [key, msg] : e.details())
      std::cerr << "  " << key << ": " << msg << "\n";
    rc = 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = 2;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  // wall time goes to stderr so reports stay byte-identical across runs
  std::cerr << "geovec: completed in " << elapsed.count() << " ms\n";
  return rc;
}
