#include "papm/manifold.hpp"

#include <cmath>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "papm/errors.hpp"

namespace papm {

namespace {

using nlohmann::json;

std::string cell(const char* field, int i, int j) {
  return std::string(field) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

std::vector<std::vector<ExprPtr>> parse_matrix(const json& m, const char* field,
                                               int n,
                                               const std::vector<std::string>& coords) {
  if (!m.is_array() || static_cast<int>(m.size()) != n)
    throw FormatError(std::string(field) + " must be a " + std::to_string(n) +
                      "x" + std::to_string(n) + " matrix of strings");
  std::vector<std::vector<ExprPtr>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const json& row = m[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw FormatError(std::string(field) + " row " + std::to_string(i) +
                        " must have " + std::to_string(n) + " entries");
    std::vector<ExprPtr> r;
    r.reserve(n);
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_string())
        throw FormatError(cell(field, i, j) + " must be a string expression");
      try {
        r.push_back(parse_expression(row[j].get<std::string>(), coords));
      } catch (const ParseError& e) {
        throw FormatError(cell(field, i, j) + ": " + e.what());
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Value-only evaluation of a component matrix at a point.
DenseTensor eval_matrix(const std::vector<std::vector<ExprPtr>>& m,
                        const std::vector<double>& point,
                        std::vector<Variance> var) {
  int n = static_cast<int>(m.size());
  DenseTensor t(n, std::move(var));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = m[i][j]->evaluate_value(point);
  return t;
}

} // namespace

ManifoldSpec load_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("top level must be a JSON object");

  ManifoldSpec spec;
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw FormatError("missing integer field \"dimension\"");
  spec.dimension = doc["dimension"].get<int>();
  if (spec.dimension < 1) throw FormatError("dimension must be positive");
  if (spec.dimension % 2 != 0) throw OddDimensionError(spec.dimension);
  int n = spec.dimension;

  if (!doc.contains("coordinates") || !doc["coordinates"].is_array() ||
      static_cast<int>(doc["coordinates"].size()) != n)
    throw FormatError("\"coordinates\" must list exactly " + std::to_string(n) +
                      " names");
  std::set<std::string> seen;
  for (const auto& c : doc["coordinates"]) {
    if (!c.is_string()) throw FormatError("coordinate names must be strings");
    std::string name = c.get<std::string>();
    if (name.empty() || !seen.insert(name).second)
      throw FormatError("coordinate names must be distinct and non-empty");
    spec.coordinates.push_back(std::move(name));
  }

  if (!doc.contains("metric"))
    throw FormatError("missing field \"metric\"");
  spec.metric = parse_matrix(doc["metric"], "metric", n, spec.coordinates);
  if (!doc.contains("structure"))
    throw FormatError("missing field \"structure\"");
  spec.structure = parse_matrix(doc["structure"], "structure", n, spec.coordinates);

  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
    throw FormatError("\"points\" must be a non-empty list of sample points");
  for (const auto& p : doc["points"]) {
    if (!p.is_array() || static_cast<int>(p.size()) != n)
      throw FormatError("each sample point must have " + std::to_string(n) +
                        " coordinates");
    std::vector<double> pt;
    for (const auto& x : p) {
      if (!x.is_number()) throw FormatError("sample point entries must be numbers");
      pt.push_back(x.get<double>());
    }
    spec.sample_points.push_back(std::move(pt));
  }

  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number())
      throw FormatError("\"tolerance\" must be a number");
    spec.tolerance = doc["tolerance"].get<double>();
    if (!(spec.tolerance > 0.0)) throw FormatError("\"tolerance\" must be positive");
  }
  return spec;
}

ValidationReport validate_structure(const ManifoldSpec& spec,
                                    const std::vector<double>& point,
                                    double tol) {
  int n = spec.dimension;
  DenseTensor g = eval_matrix(spec.metric, point,
                              {Variance::Lower, Variance::Lower});
  DenseTensor P = eval_matrix(spec.structure, point,
                              {Variance::Upper, Variance::Lower});

  ValidationReport rep;
  rep.tol = tol;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double p2 = 0.0;
      for (int s = 0; s < n; ++s) p2 += P.at(i, s) * P.at(s, j);
      rep.p_squared = std::max(rep.p_squared,
                               std::fabs(p2 - (i == j ? 1.0 : 0.0)));
      rep.metric_symmetry =
          std::max(rep.metric_symmetry, std::fabs(g.at(i, j) - g.at(j, i)));
      double gpp = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gpp += P.at(a, i) * g.at(a, b) * P.at(b, j);
      rep.compatibility =
          std::max(rep.compatibility, std::fabs(gpp - g.at(i, j)));
    }

  double tr = 0.0;
  for (int i = 0; i < n; ++i) tr += P.at(i, i);
  rep.trace = std::fabs(tr);

  rep.min_eigenvalue = sym_eigenvalues(g).front();

  rep.pass = rep.p_squared <= tol && rep.metric_symmetry <= tol &&
             rep.compatibility <= tol && rep.trace <= tol &&
             rep.min_eigenvalue > tol;
  return rep;
}

PointFrame evaluate_frame(const ManifoldSpec& spec,
                          const std::vector<double>& point) {
  int n = spec.dimension;
  PointFrame f;
  f.point = point;
  f.n = n;

  DenseTensor g(n, {Variance::Lower, Variance::Lower});
  f.dg = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower});
  f.ddg = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Lower,
                          Variance::Lower});
  f.P = DenseTensor(n, {Variance::Upper, Variance::Lower});
  f.dP = DenseTensor(n, {Variance::Lower, Variance::Upper, Variance::Lower});
  f.ddP = DenseTensor(n, {Variance::Lower, Variance::Lower, Variance::Upper,
                          Variance::Lower});

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet2 jg = spec.metric[i][j]->evaluate_jet2(point);
      g.at(i, j) = jg.value;
      for (int a = 0; a < n; ++a) {
        f.dg.at(a, i, j) = jg.grad[a];
        for (int b = 0; b < n; ++b) f.ddg.at(a, b, i, j) = jg.hess_at(a, b);
      }
      Jet2 jp = spec.structure[i][j]->evaluate_jet2(point);
      f.P.at(i, j) = jp.value;
      for (int a = 0; a < n; ++a) {
        f.dP.at(a, i, j) = jp.grad[a];
        for (int b = 0; b < n; ++b) f.ddP.at(a, b, i, j) = jp.hess_at(a, b);
      }
    }

  f.metric = MetricPair(g);
  f.P_lower = DenseTensor(n, {Variance::Lower, Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += f.metric.g.at(i, k) * f.P.at(k, j);
      f.P_lower.at(i, j) = v;
    }
  return f;
}

} // namespace papm
