#include "geovec/instance.hpp"

#include <nlohmann/json.hpp>

namespace geovec {

namespace {

using json = nlohmann::json;
using Details = std::vector<InstanceError::Detail>;

bool get_matrix(const json& j, const std::string& path, int rows_expected,
                int cols_expected, Eigen::MatrixXd* out, Details* errs) {
  if (!j.is_array() || j.empty()) {
    errs->emplace_back(path, "expected a non-empty array of rows");
    return false;
  }
  const int rows = static_cast<int>(j.size());
  if (rows_expected >= 0 && rows != rows_expected) {
    errs->emplace_back(path, "expected " + std::to_string(rows_expected) +
                                 " rows, got " + std::to_string(rows));
    return false;
  }
  int cols = -1;
  for (int r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array()) {
      errs->emplace_back(path + "[" + std::to_string(r) + "]",
                         "expected an array of numbers");
      return false;
    }
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols) {
      errs->emplace_back(path + "[" + std::to_string(r) + "]",
                         "ragged rows");
      return false;
    }
    for (const json& v : row)
      if (!v.is_number()) {
        errs->emplace_back(path + "[" + std::to_string(r) + "]",
                           "non-numeric entry");
        return false;
      }
  }
  if (cols_expected >= 0 && cols != cols_expected) {
    errs->emplace_back(path, "expected " + std::to_string(cols_expected) +
                                 " columns, got " + std::to_string(cols));
    return false;
  }
  out->resize(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      (*out)(r, c) = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                         .get<double>();
  return true;
}

bool get_vector(const json& j, const std::string& path, int len_expected,
                Eigen::VectorXd* out, Details* errs) {
  if (!j.is_array()) {
    errs->emplace_back(path, "expected an array of numbers");
    return false;
  }
  if (len_expected >= 0 && static_cast<int>(j.size()) != len_expected) {
    errs->emplace_back(path, "expected length " + std::to_string(len_expected) +
                                 ", got " + std::to_string(j.size()));
    return false;
  }
  out->resize(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      errs->emplace_back(path + "[" + std::to_string(i) + "]",
                         "non-numeric entry");
      return false;
    }
    (*out)(static_cast<int>(i)) = j[i].get<double>();
  }
  return true;
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  Details errs;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    errs.emplace_back("(document)", e.what());
    throw InstanceError(errs, "instance file is not valid JSON");
  }
  if (!doc.is_object()) {
    errs.emplace_back("(document)", "expected a JSON object");
    throw InstanceError(errs, "instance file is not a JSON object");
  }

  Instance inst;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
      doc["dim"].get<int>() <= 0) {
    errs.emplace_back("dim", "required positive integer");
    throw InstanceError(errs, "invalid instance");
  }
  inst.dim = doc["dim"].get<int>();
  const int n = inst.dim;

  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != n) {
      errs.emplace_back("basis", "expected " + std::to_string(n) + " names");
    } else {
      for (const json& name : b) {
        if (!name.is_string()) {
          errs.emplace_back("basis", "names must be strings");
          break;
        }
        inst.basis.push_back(name.get<std::string>());
      }
    }
  }

  if (doc.contains("brackets")) {
    const json& brs = doc["brackets"];
    if (!brs.is_array()) {
      errs.emplace_back("brackets", "expected an array");
    } else {
      for (std::size_t t = 0; t < brs.size(); ++t) {
        const std::string path = "brackets[" + std::to_string(t) + "]";
        const json& e = brs[t];
        if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
            !e.contains("coeffs")) {
          errs.emplace_back(path, "expected {i, j, coeffs}");
          continue;
        }
        if (!e["i"].is_number_integer() || !e["j"].is_number_integer()) {
          errs.emplace_back(path, "i and j must be integers");
          continue;
        }
        const int i = e["i"].get<int>();
        const int j = e["j"].get<int>();
        if (i < 1 || j < 1 || i > n || j > n) {
          errs.emplace_back(path, "indices are 1-based and must be in [1, dim]");
          continue;
        }
        if (i >= j) {
          errs.emplace_back(path, "store each pair once with i < j");
          continue;
        }
        Eigen::VectorXd coeffs;
        if (!get_vector(e["coeffs"], path + ".coeffs", n, &coeffs, &errs))
          continue;
        for (int k = 0; k < n; ++k)
          if (coeffs(k) != 0.0)
            inst.brackets.push_back({i - 1, j - 1, k, coeffs(k)});
      }
    }
  }

  auto read_rows_as_columns = [&](const char* key,
                                  std::optional<Eigen::MatrixXd>* slot) {
    if (!doc.contains(key)) return;
    Eigen::MatrixXd rows;
    if (get_matrix(doc[key], key, -1, n, &rows, &errs))
      *slot = rows.transpose();
  };
  read_rows_as_columns("h_basis", &inst.h_basis);
  read_rows_as_columns("m_basis", &inst.m_basis);

  const int dim_m =
      inst.m_basis ? static_cast<int>(inst.m_basis->cols())
                   : (inst.h_basis ? n - static_cast<int>(inst.h_basis->cols())
                                   : n);

  if (doc.contains("inner_product")) {
    Eigen::MatrixXd a;
    if (get_matrix(doc["inner_product"], "inner_product", dim_m, dim_m, &a, &errs))
      inst.inner = a;
  }

  if (doc.contains("navigation")) {
    const json& nav = doc["navigation"];
    if (!nav.is_object() || !nav.contains("h") || !nav.contains("W")) {
      errs.emplace_back("navigation", "expected {h, W}");
    } else {
      Eigen::MatrixXd h;
      Eigen::VectorXd w;
      if (get_matrix(nav["h"], "navigation.h", dim_m, dim_m, &h, &errs))
        inst.nav_h = h;
      if (get_vector(nav["W"], "navigation.W", dim_m, &w, &errs)) inst.nav_w = w;
    }
  }

  if (!doc.contains("metric") || !doc["metric"].is_object()) {
    errs.emplace_back("metric", "required object {family, ...}");
  } else {
    const json& met = doc["metric"];
    const std::string fam =
        met.contains("family") && met["family"].is_string()
            ? met["family"].get<std::string>()
            : "";
    if (fam == "riemannian")
      inst.family = MetricFamily::Riemannian;
    else if (fam == "randers")
      inst.family = MetricFamily::Randers;
    else if (fam == "kropina")
      inst.family = MetricFamily::Kropina;
    else if (fam == "alphabeta")
      inst.family = MetricFamily::AlphaBeta;
    else
      errs.emplace_back("metric.family",
                        "one of riemannian|randers|kropina|alphabeta required");

    if (met.contains("X")) {
      Eigen::VectorXd x;
      if (get_vector(met["X"], "metric.X", dim_m, &x, &errs)) inst.x = x;
      if (inst.family == MetricFamily::Riemannian)
        errs.emplace_back("metric.X", "unexpected for the riemannian family");
    } else if (inst.family != MetricFamily::Riemannian && !inst.nav_w) {
      errs.emplace_back("metric.X", "required for this family");
    }

    if (met.contains("phi")) {
      if (!met["phi"].is_string())
        errs.emplace_back("metric.phi", "expected a string expression");
      else
        inst.phi_text = met["phi"].get<std::string>();
      if (inst.family != MetricFamily::AlphaBeta)
        errs.emplace_back("metric.phi", "only the alphabeta family takes phi");
    } else if (inst.family == MetricFamily::AlphaBeta) {
      errs.emplace_back("metric.phi", "required for the alphabeta family");
    }
  }

  if (inst.nav_w && inst.family != MetricFamily::Kropina)
    errs.emplace_back("navigation", "navigation data implies a Kropina metric");
  if (!inst.inner && !inst.nav_h)
    errs.emplace_back("inner_product",
                      "required unless navigation data is given");

  if (!errs.empty()) throw InstanceError(errs, "invalid instance file");
  return inst;
}

BuiltInstance build_instance(const Instance& inst) {
  LieAlgebra algebra(inst.dim, inst.basis, inst.brackets);
  const ValidationReport vr = validate(algebra);
  if (!vr.passed)
    fail(ErrorCode::ConstraintViolation,
         "Jacobi identity violated at triple (" +
             std::to_string(vr.worst_triple[0] + 1) + "," +
             std::to_string(vr.worst_triple[1] + 1) + "," +
             std::to_string(vr.worst_triple[2] + 1) +
             "), violation " + std::to_string(vr.max_violation));

  ReductiveSpace space = [&]() {
    if (inst.m_basis) {
      Eigen::MatrixXd h = inst.h_basis ? *inst.h_basis
                                       : Eigen::MatrixXd(inst.dim, 0);
      return ReductiveSpace::from_bases(algebra, h, *inst.m_basis);
    }
    if (inst.h_basis)
      return ReductiveSpace::reductive_split(algebra, *inst.h_basis,
                                             killing_form(algebra));
    return ReductiveSpace::lie_group(algebra);
  }();

  if (inst.nav_h && inst.nav_w) {
    NavigationData nav{InnerProduct(*inst.nav_h), *inst.nav_w};
    MetricSpec metric = kropina_from_navigation(nav);
    InnerProduct ip = metric.inner();
    return BuiltInstance{std::move(space), std::move(ip), std::move(metric)};
  }

  InnerProduct ip(*inst.inner);
  if (ip.dim() != space.dim_m())
    fail(ErrorCode::DimensionMismatch, "inner_product dimension != dim m");
  MetricSpec metric = [&]() {
    switch (inst.family) {
      case MetricFamily::Riemannian:
        return MetricSpec::riemannian(ip);
      case MetricFamily::Randers:
        return MetricSpec::randers(ip, inst.x);
      case MetricFamily::Kropina:
        return MetricSpec::kropina(ip, inst.x);
      case MetricFamily::AlphaBeta:
        return MetricSpec::alpha_beta(ip, inst.x, PhiExpr::parse(inst.phi_text));
    }
    fail(ErrorCode::InvalidArgument, "unknown metric family");
  }();
  return BuiltInstance{std::move(space), std::move(ip), std::move(metric)};
}

}  // namespace geovec
