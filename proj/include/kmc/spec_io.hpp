#pragma once

#include <kmc/lie_frame.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace kmc {

/// One sparse structure constant [e_i, e_j] has e_k-coefficient `value`,
/// 1-based as in the input documents.
struct ConstantEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

struct ManifoldSpec {
  std::string label;
  std::size_t dim = 0;
  std::vector<ConstantEntry> structure_constants;
  std::optional<Matrix> metric;  // nullopt means the identity
  std::size_t xi_index = 1;      // 1-based

  /// Completes the sparse entries by antisymmetry and validates the
  /// result. Raises IndexOutOfRange, AntisymmetryViolation,
  /// ConflictingEntry or JacobiViolation.
  LieFrame lie_frame() const {
    if (dim < 3 || dim % 2 == 0)
      throw Error(ErrorCode::DimensionMismatch, "field 'dim': must be odd and >= 3, got " + std::to_string(dim));
    std::vector<Rational> c(dim * dim * dim);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> seen;
    for (std::size_t n = 0; n < structure_constants.size(); ++n) {
      const auto& e = structure_constants[n];
      const std::string where = "field 'structure_constants[" + std::to_string(n) + "]'";
      for (auto idx : {e.i, e.j, e.k}) {
        if (idx < 1 || idx > dim)
          throw Error(ErrorCode::IndexOutOfRange, where + ": index " + std::to_string(idx) + " outside 1.." +
                                                      std::to_string(dim));
      }
      if (e.i == e.j) {
        if (!e.value.is_zero())
          throw Error(ErrorCode::AntisymmetryViolation,
                      where + ": [e" + std::to_string(e.i) + ", e" + std::to_string(e.i) + "] must vanish");
        continue;
      }
      // store under the ordered pair so [e_j, e_i] entries are compared with sign flipped
      const bool flip = e.i > e.j;
      const auto key = std::make_tuple(std::min(e.i, e.j), std::max(e.i, e.j), e.k);
      const Rational v = flip ? -e.value : e.value;
      if (auto it = seen.find(key); it != seen.end()) {
        if (it->second != v) throw Error(ErrorCode::ConflictingEntry, where + ": contradicts an earlier entry");
        continue;
      }
      seen.emplace(key, v);
      LieFrame::set_bracket(c, dim, std::get<0>(key) - 1, std::get<1>(key) - 1, std::get<2>(key) - 1, v);
    }
    return LieFrame(dim, std::move(c));
  }

  MetricFrame metric_frame() const {
    auto frame = lie_frame();
    return MetricFrame(std::move(frame), metric ? *metric : Matrix::identity(dim));
  }
};

namespace detail {

inline Rational json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(ErrorCode::MalformedRational, where + ": expected a rational string such as \"-5/2\"");
}

inline std::size_t json_index(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, where + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < 0) throw Error(ErrorCode::IndexOutOfRange, where + ": negative index");
  return static_cast<std::size_t>(x);
}

}  // namespace detail

/// Parses and validates a manifold document:
///   {"label": str, "dim": int, "structure_constants": [[i,j,k,"p/q"],...],
///    "metric": "identity" | [[...]], "xi_index": int}
inline ManifoldSpec parse_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");

  ManifoldSpec spec;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw Error(ErrorCode::ParseError, "field 'label': expected a string");
    spec.label = doc["label"].get<std::string>();
  }
  if (!doc.contains("dim")) throw Error(ErrorCode::ParseError, "field 'dim': missing");
  spec.dim = detail::json_index(doc["dim"], "field 'dim'");

  if (!doc.contains("structure_constants") || !doc["structure_constants"].is_array())
    throw Error(ErrorCode::ParseError, "field 'structure_constants': expected an array");
  const auto& sc = doc["structure_constants"];
  for (std::size_t n = 0; n < sc.size(); ++n) {
    const std::string where = "field 'structure_constants[" + std::to_string(n) + "]'";
    const auto& row = sc[n];
    if (!row.is_array() || row.size() != 4) throw Error(ErrorCode::ParseError, where + ": expected [i, j, k, value]");
    spec.structure_constants.push_back({detail::json_index(row[0], where), detail::json_index(row[1], where),
                                        detail::json_index(row[2], where), detail::json_rational(row[3], where)});
  }

  if (doc.contains("metric")) {
    const auto& m = doc["metric"];
    if (m.is_string()) {
      if (m.get<std::string>() != "identity")
        throw Error(ErrorCode::ParseError, "field 'metric': only \"identity\" or a matrix is accepted");
    } else if (m.is_array()) {
      if (m.size() != spec.dim) throw Error(ErrorCode::InvalidMetric, "field 'metric': expected dim rows");
      std::vector<std::vector<Rational>> rows;
      for (std::size_t a = 0; a < m.size(); ++a) {
        if (!m[a].is_array() || m[a].size() != spec.dim)
          throw Error(ErrorCode::InvalidMetric, "field 'metric[" + std::to_string(a) + "]': expected dim entries");
        std::vector<Rational> row;
        for (std::size_t b = 0; b < m[a].size(); ++b)
          row.push_back(detail::json_rational(m[a][b], "field 'metric[" + std::to_string(a) + "][" +
                                                           std::to_string(b) + "]'"));
        rows.push_back(std::move(row));
      }
      spec.metric = Matrix::from_rows(rows);
    } else {
      throw Error(ErrorCode::ParseError, "field 'metric': expected \"identity\" or a matrix");
    }
  }

  if (!doc.contains("xi_index")) throw Error(ErrorCode::ParseError, "field 'xi_index': missing");
  spec.xi_index = detail::json_index(doc["xi_index"], "field 'xi_index'");
  if (spec.xi_index < 1 || spec.xi_index > spec.dim)
    throw Error(ErrorCode::IndexOutOfRange, "field 'xi_index': outside 1.." + std::to_string(spec.dim));

  // full validation up front so a bad document never reaches the pipeline
  (void)spec.metric_frame();
  return spec;
}

/// The three-dimensional family [e2,e3] = c1 e1, [e3,e1] = c2 e2,
/// [e1,e2] = c3 e3 with orthonormal frame and xi = e1.
inline ManifoldSpec family_spec(const Rational& c1, const Rational& c2, const Rational& c3, std::string label) {
  ManifoldSpec s;
  s.label = std::move(label);
  s.dim = 3;
  s.structure_constants = {{2, 3, 1, c1}, {3, 1, 2, c2}, {1, 2, 3, c3}};
  s.xi_index = 1;
  return s;
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"paper-sasakian", "paper-family", "kappa-minus-mu", "n-kappa-flatcase"};
  return names;
}

/// Named example catalog. Only "paper-family" takes (c2, c3); its default
/// is (0, 1).
inline ManifoldSpec preset_spec(const std::string& name, const std::optional<Rational>& c2 = std::nullopt,
                                const std::optional<Rational>& c3 = std::nullopt) {
  if (name != "paper-family" && (c2 || c3))
    throw Error(ErrorCode::PreconditionViolation, "preset '" + name + "' takes no --c2/--c3");
  if (name == "paper-sasakian") return family_spec(2, 1, 1, name);
  if (name == "kappa-minus-mu") return family_spec(2, Rational(-5, 2), Rational(3, 2), name);
  if (name == "n-kappa-flatcase") return family_spec(2, 0, 2, name);
  if (name == "paper-family") {
    const Rational a = c2.value_or(0);
    const Rational b = c3.value_or(1);
    return family_spec(2, a, b, name + "(2," + a.str() + "," + b.str() + ")");
  }
  throw Error(ErrorCode::UnknownPreset, "'" + name + "'");
}

}  // namespace kmc
