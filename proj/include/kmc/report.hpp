#pragma once

#include <kmc/kappa_mu.hpp>
#include <kmc/spec_io.hpp>

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kmc {

struct AnalysisOptions {
  /// Adds `delta` to S(i, j) (0-based) right after the Ricci tensor is
  /// computed; everything downstream sees the corrupted tensor.
  struct RicciPerturbation {
    std::size_t i = 0;
    std::size_t j = 0;
    Rational delta;
  };
  std::optional<RicciPerturbation> perturb_ricci;
};

struct Certification {
  std::string name;
  CheckStatus status = CheckStatus::Certified;
  std::string detail;
};

struct StageStatus {
  bool ok = false;
  std::string error;  // typed failure message when !ok
};

struct RgpsPairCheck {
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<Rational> L;
  std::size_t pairs = 0;
  Rational max_residual;
};

/// Everything run_analysis learns about one manifold. Optional members are
/// empty when an earlier stage reported a typed failure.
struct AnalysisReport {
  ManifoldSpec spec;
  MetricFrame metric;
  Tensor gamma;
  Tensor curvature;
  Tensor ricci;
  Rational scalar_curvature;
  std::optional<Rational> constant_curvature;
  Rational torsion_defect;
  Rational metric_defect;
  Rational bianchi_defect;

  StageStatus contact_stage;
  std::optional<ContactMetricStructure> contact;
  bool sasakian = false;
  Rational nabla_xi_residual;

  StageStatus kappa_mu_stage;
  std::optional<KappaMuParameters> params;

  StageStatus eigen_stage;
  std::optional<EigenDistributions> eigen;

  SymmetryReport symmetry;
  std::optional<IdentitySuite> identities;
  std::vector<SpectrumEntry> spectrum;
  RgpsPairCheck rgps_pairs;
  std::optional<Corollary11Verdict> corollary;

  std::vector<Certification> certifications;
  double elapsed_seconds = 0;

  bool all_certified() const {
    for (const auto& c : certifications) {
      if (c.status == CheckStatus::Failed) return false;
    }
    return true;
  }
};

namespace detail {

inline Certification certify(std::string name, const Rational& residual, std::string detail = {}) {
  return {std::move(name), residual.is_zero() ? CheckStatus::Certified : CheckStatus::Failed, std::move(detail)};
}

}  // namespace detail

/// Runs connection, curvature, contact structure, (kappa, mu) detection,
/// symmetry classification and the identity suites. Only construction
/// errors of the frame itself propagate; later typed failures are recorded
/// in the report and the remaining stages run on what is available.
inline AnalysisReport run_analysis(const ManifoldSpec& spec, const AnalysisOptions& options = {}) {
  AnalysisReport rep;
  rep.spec = spec;
  rep.metric = spec.metric_frame();
  const auto& m = rep.metric;
  const std::size_t d = m.dim();

  rep.gamma = levi_civita_connection(m);
  rep.curvature = riemann_curvature(m, rep.gamma);
  rep.ricci = ricci_tensor(m, rep.curvature);
  if (options.perturb_ricci) {
    const auto& p = *options.perturb_ricci;
    if (p.i >= d || p.j >= d) throw Error(ErrorCode::IndexOutOfRange, "Ricci perturbation index");
    rep.ricci(p.i, p.j) += p.delta;
  }
  rep.scalar_curvature = scalar_curvature(m, rep.ricci);
  rep.constant_curvature = constant_curvature(m, rep.curvature);
  rep.torsion_defect = torsion_defect(m, rep.gamma);
  rep.metric_defect = metric_compatibility_defect(m, rep.gamma);
  rep.bianchi_defect = first_bianchi_defect(rep.curvature);

  auto& certs = rep.certifications;
  certs.push_back(detail::certify("levi_civita", rep.torsion_defect + rep.metric_defect));
  certs.push_back(detail::certify("first_bianchi", rep.bianchi_defect));

  rep.symmetry = classify_symmetry(m, rep.curvature, rep.ricci);

  try {
    rep.contact = build_contact_structure(m, spec.xi_index - 1);
    rep.contact_stage.ok = true;
  } catch (const Error& e) {
    rep.contact_stage.error = e.what();
  }
  if (!rep.contact) {
    certs.push_back({"contact_structure", CheckStatus::Failed, rep.contact_stage.error});
    return rep;
  }
  const auto& s = *rep.contact;
  certs.push_back({"contact_structure", CheckStatus::Certified, {}});
  rep.sasakian = is_sasakian(s, rep.gamma);
  rep.nabla_xi_residual = verify_nabla_xi(s, rep.gamma).max_abs();
  certs.push_back(detail::certify("nabla_xi", rep.nabla_xi_residual));

  try {
    rep.params = detect_kappa_mu(s, rep.curvature);
    rep.kappa_mu_stage.ok = true;
  } catch (const Error& e) {
    rep.kappa_mu_stage.error = e.what();
  }
  if (!rep.params) {
    certs.push_back({"kappa_mu_nullity", CheckStatus::Failed, rep.kappa_mu_stage.error});
    return rep;
  }
  const auto& p = *rep.params;
  certs.push_back({"kappa_mu_nullity", CheckStatus::Certified, {}});

  try {
    rep.eigen = h_eigenstructure(s);
    rep.eigen_stage.ok = true;
  } catch (const Error& e) {
    rep.eigen_stage.error = e.what();
  }

  rep.identities = verify_ricci_identities(s, rep.curvature, rep.ricci, p);
  for (const auto& e : rep.identities->entries) certs.push_back({"identity " + e.name, e.status, e.note});

  if (rep.eigen && !rep.eigen->lambda.is_zero()) {
    rep.spectrum = sectional_spectrum_check(s, rep.curvature, p, *rep.eigen);
    Rational worst = 0;
    for (const auto& e : rep.spectrum) worst = std::max(worst, e.residual().abs());
    certs.push_back(detail::certify("sectional_spectrum", worst));
  } else {
    certs.push_back({"sectional_spectrum", CheckStatus::NotApplicable,
                     rep.eigen ? "lambda = 0" : rep.eigen_stage.error});
  }

  // The pairwise identity is only meaningful once an operator-level L exists.
  if (rep.symmetry.rgps.kind == Proportionality::Kind::Proportional) {
    auto& chk = rep.rgps_pairs;
    chk.L = rep.symmetry.rgps.factor;
    const auto pairs = admissible_pairs(s, rep.eigen ? &*rep.eigen : nullptr);
    chk.pairs = pairs.size();
    for (const auto& [x, y] : pairs)
      chk.max_residual = std::max(chk.max_residual, rgps_residual(s, rep.curvature, rep.ricci, p, *chk.L, x, y).abs());
    chk.status = chk.max_residual.is_zero() ? CheckStatus::Certified : CheckStatus::Failed;
    certs.push_back({"rgps_pairwise", chk.status, "L = " + chk.L->str()});
  } else {
    certs.push_back({"rgps_pairwise", CheckStatus::NotApplicable,
                     std::string("R.R vs Q(S,R): ") + std::string(to_string(rep.symmetry.rgps.kind))});
  }

  if (d == 3) {
    rep.corollary = corollary11_check(s, rep.curvature, p, rep.symmetry);
    certs.push_back({"rgps_classification_agreement",
                     rep.corollary->agree() ? CheckStatus::Certified : CheckStatus::Failed,
                     std::string("predicted ") + (rep.corollary->predicted_rgps ? "RGPS" : "not RGPS") +
                         ", operator " + (rep.corollary->operator_rgps ? "RGPS" : "not RGPS")});
  }
  return rep;
}

/// 0 when every certification passed, 2 otherwise.
inline int exit_code(const AnalysisReport& rep) { return rep.all_certified() ? 0 : 2; }

// ---------------------------------------------------------------------------
// audit

struct AuditRow {
  std::size_t n = 2;
  std::array<RgpsSolution, 2> solutions;
  std::array<Rational, 2> classification_residuals;
  std::array<Rational, 2> mu_L_residuals;
  std::array<Rational, 2> combination_defects;  // r2 - r3 - r1 minus the classification residual
  BranchAudit branch;

  bool certified() const {
    for (std::size_t i = 0; i < 2; ++i) {
      if (!classification_residuals[i].is_zero() || !mu_L_residuals[i].is_zero() ||
          !combination_defects[i].is_zero())
        return false;
    }
    return branch.certified();
  }
};

struct AuditTable {
  std::vector<AuditRow> rows;
  bool all_certified() const {
    for (const auto& r : rows) {
      if (!r.certified()) return false;
    }
    return true;
  }
};

inline AuditRow audit_row(std::size_t n) {
  AuditRow row;
  row.n = n;
  row.solutions = theorem56_solutions(n);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& s = row.solutions[i];
    row.classification_residuals[i] = classification_residual(n, s.kappa, s.mu);
    row.mu_L_residuals[i] = mu_L_relation_residual(n, s.mu, s.L);
    row.combination_defects[i] =
        prop52_combination(prop52_system_residuals(n, s.kappa, s.mu)) - classification_residual(n, s.kappa, s.mu);
  }
  row.branch = branch_audit(n);
  return row;
}

inline AuditTable run_audit(long long n_lo, long long n_hi) {
  if (n_lo < 2) throw Error(ErrorCode::OutOfTheoremRange, "audit needs n >= 2, got " + std::to_string(n_lo));
  if (n_hi < n_lo) throw Error(ErrorCode::RangeError, "empty range " + std::to_string(n_lo) + ".." + std::to_string(n_hi));
  AuditTable table;
  for (long long n = n_lo; n <= n_hi; ++n) table.rows.push_back(audit_row(static_cast<std::size_t>(n)));
  return table;
}

// ---------------------------------------------------------------------------
// rendering

using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline OrderedJson q(const Rational& r) { return r.fraction_str(); }

inline OrderedJson q(const std::optional<Rational>& r) { return r ? q(*r) : OrderedJson(nullptr); }

inline OrderedJson vector_json(const Vector& v) {
  OrderedJson a = OrderedJson::array();
  for (const auto& x : v) a.push_back(q(x));
  return a;
}

inline OrderedJson matrix_json(const Matrix& m) {
  OrderedJson a = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(q(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

inline OrderedJson proportionality_json(const Proportionality& p) {
  OrderedJson o;
  o["kind"] = std::string(to_string(p.kind));
  o["factor"] = q(p.factor);
  return o;
}

inline std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

}  // namespace detail

inline OrderedJson report_json(const AnalysisReport& rep) {
  using detail::q;
  const std::size_t d = rep.metric.dim();
  OrderedJson doc;

  OrderedJson spec;
  spec["label"] = rep.spec.label;
  spec["dim"] = d;
  OrderedJson sc = OrderedJson::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& c = rep.metric.frame().constant(i, j, k);
        if (!c.is_zero()) sc.push_back({i + 1, j + 1, k + 1, q(c)});
      }
  spec["structure_constants"] = std::move(sc);
  spec["metric"] = rep.spec.metric ? detail::matrix_json(*rep.spec.metric) : OrderedJson("identity");
  spec["xi_index"] = rep.spec.xi_index;
  doc["spec"] = std::move(spec);

  // nabla_{e_i} e_j = sum_k value e_k, 1-based
  OrderedJson conn = OrderedJson::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!rep.gamma(k, i, j).is_zero()) conn.push_back({i + 1, j + 1, k + 1, q(rep.gamma(k, i, j))});
  doc["connection"] = std::move(conn);

  OrderedJson curv;
  curv["ricci"] = detail::matrix_json(rep.ricci.to_matrix());
  curv["scalar_curvature"] = q(rep.scalar_curvature);
  OrderedJson sec = OrderedJson::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      sec.push_back({i + 1, j + 1,
                     q(sectional_curvature(rep.metric, rep.curvature, basis_vector(d, i), basis_vector(d, j)))});
  curv["frame_sectional_curvatures"] = std::move(sec);
  curv["constant_curvature"] = q(rep.constant_curvature);
  curv["torsion_defect"] = q(rep.torsion_defect);
  curv["metric_defect"] = q(rep.metric_defect);
  curv["bianchi_defect"] = q(rep.bianchi_defect);
  doc["curvature"] = std::move(curv);

  OrderedJson contact;
  contact["valid"] = rep.contact_stage.ok;
  if (rep.contact) {
    contact["xi"] = detail::vector_json(rep.contact->xi);
    contact["eta"] = detail::vector_json(rep.contact->eta);
    contact["phi"] = detail::matrix_json(rep.contact->phi);
    contact["h"] = detail::matrix_json(rep.contact->h);
    contact["sasakian"] = rep.sasakian;
    contact["nabla_xi_residual"] = q(rep.nabla_xi_residual);
  } else {
    contact["error"] = rep.contact_stage.error;
  }
  doc["contact"] = std::move(contact);

  OrderedJson km;
  km["detected"] = rep.kappa_mu_stage.ok;
  if (rep.params) {
    const auto& p = *rep.params;
    km["n"] = p.n;
    km["kappa"] = q(p.kappa);
    km["mu"] = q(p.mu);
    km["mu_indeterminate"] = p.mu_indeterminate;
    km["lambda_squared"] = q(p.lambda_squared);
    km["lambda"] = q(p.lambda);
  } else if (rep.contact) {
    km["error"] = rep.kappa_mu_stage.error;
  }
  if (rep.eigen) {
    OrderedJson eig;
    eig["lambda"] = q(rep.eigen->lambda);
    auto basis = [](const std::vector<Vector>& b) {
      OrderedJson a = OrderedJson::array();
      for (const auto& v : b) a.push_back(detail::vector_json(v));
      return a;
    };
    eig["D(0)"] = basis(rep.eigen->basis_zero);
    eig["D(+lambda)"] = basis(rep.eigen->basis_plus);
    eig["D(-lambda)"] = basis(rep.eigen->basis_minus);
    km["eigen"] = std::move(eig);
  } else if (rep.params) {
    km["eigen_error"] = rep.eigen_stage.error;
  }
  doc["kappa_mu"] = std::move(km);

  OrderedJson sym;
  sym["semisymmetric"] = rep.symmetry.semisymmetric;
  sym["q_g_r_zero"] = rep.symmetry.q_g_zero;
  sym["q_s_r_zero"] = rep.symmetry.q_s_zero;
  sym["pseudosymmetry"] = detail::proportionality_json(rep.symmetry.pseudosymmetry);
  sym["rgps"] = detail::proportionality_json(rep.symmetry.rgps);
  sym["rgps_vector_form"] = detail::proportionality_json(rep.symmetry.rgps_vector_form);
  sym["is_rgps"] = rep.symmetry.is_rgps();
  doc["symmetry"] = std::move(sym);

  OrderedJson ids = OrderedJson::array();
  if (rep.identities) {
    for (const auto& e : rep.identities->entries) {
      OrderedJson o;
      o["name"] = e.name;
      o["max_residual"] = q(e.max_residual);
      o["status"] = std::string(to_string(e.status));
      if (!e.note.empty()) o["note"] = e.note;
      ids.push_back(std::move(o));
    }
  }
  doc["identities"] = std::move(ids);

  OrderedJson spec_rows = OrderedJson::array();
  for (const auto& e : rep.spectrum) {
    OrderedJson o;
    o["case"] = e.case_name;
    o["x"] = detail::vector_json(e.x);
    o["y"] = detail::vector_json(e.y);
    o["value"] = q(e.value);
    o["expected"] = q(e.expected);
    spec_rows.push_back(std::move(o));
  }
  doc["sectional_spectrum"] = std::move(spec_rows);

  OrderedJson pairs;
  pairs["status"] = std::string(to_string(rep.rgps_pairs.status));
  pairs["L"] = q(rep.rgps_pairs.L);
  pairs["pairs_checked"] = rep.rgps_pairs.pairs;
  pairs["max_residual"] = q(rep.rgps_pairs.max_residual);
  doc["rgps_pairwise"] = std::move(pairs);

  if (rep.corollary) {
    const auto& c = *rep.corollary;
    OrderedJson o;
    o["sasakian"] = c.sasakian;
    o["constant_curvature_one"] = c.constant_curvature_one;
    o["kappa_equals_minus_mu"] = c.kappa_equals_minus_mu;
    o["predicted_rgps"] = c.predicted_rgps;
    o["operator_rgps"] = c.operator_rgps;
    o["agree"] = c.agree();
    doc["three_dim_classification"] = std::move(o);
  }

  OrderedJson certs = OrderedJson::array();
  for (const auto& c : rep.certifications) {
    OrderedJson o;
    o["name"] = c.name;
    o["status"] = std::string(to_string(c.status));
    if (!c.detail.empty()) o["detail"] = c.detail;
    certs.push_back(std::move(o));
  }
  doc["certifications"] = std::move(certs);
  doc["all_certified"] = rep.all_certified();
  return doc;
}

inline std::string report_text(const AnalysisReport& rep) {
  std::ostringstream os;
  const std::size_t d = rep.metric.dim();
  os << "manifold " << (rep.spec.label.empty() ? "(unnamed)" : rep.spec.label) << ", dim " << d << ", xi = e"
     << rep.spec.xi_index << "\n";
  os << "connection (nabla_{e_i} e_j):\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::string terms;
      for (std::size_t k = 0; k < d; ++k) {
        const auto& v = rep.gamma(k, i, j);
        if (!v.is_zero()) terms += (terms.empty() ? "" : " + ") + v.str() + " e" + std::to_string(k + 1);
      }
      if (!terms.empty()) os << "  nabla_e" << i + 1 << " e" << j + 1 << " = " << terms << "\n";
    }
  os << "ricci:\n";
  for (std::size_t i = 0; i < d; ++i) {
    os << "  ";
    for (std::size_t j = 0; j < d; ++j) os << (j ? " " : "") << rep.ricci(i, j).str();
    os << "\n";
  }
  os << "scalar curvature: " << rep.scalar_curvature << "\n";
  os << "constant curvature: " << (rep.constant_curvature ? rep.constant_curvature->str() : "no") << "\n";

  if (rep.contact) {
    os << "contact structure: valid" << (rep.sasakian ? ", Sasakian" : "") << "\n";
  } else {
    os << "contact structure: " << rep.contact_stage.error << "\n";
  }
  if (rep.params) {
    const auto& p = *rep.params;
    os << "kappa = " << p.kappa << ", mu = " << p.mu << (p.mu_indeterminate ? " (indeterminate, h = 0)" : "")
       << ", lambda^2 = " << p.lambda_squared << "\n";
  } else if (rep.contact) {
    os << "kappa-mu: " << rep.kappa_mu_stage.error << "\n";
  }
  if (rep.eigen) {
    os << "h eigenvalue lambda = " << rep.eigen->lambda;
    for (const auto& v : rep.eigen->basis_plus) os << ", D(+) " << detail::vector_text(v);
    for (const auto& v : rep.eigen->basis_minus) os << ", D(-) " << detail::vector_text(v);
    os << "\n";
  }

  const auto& sym = rep.symmetry;
  auto fit = [](const Proportionality& p) {
    return std::string(to_string(p.kind)) + (p.factor ? " L = " + p.factor->str() : "");
  };
  os << "semisymmetric (R.R = 0): " << (sym.semisymmetric ? "yes" : "no") << "\n";
  os << "R.R vs Q(g,R): " << fit(sym.pseudosymmetry) << "\n";
  os << "R.R vs Q(S,R): " << fit(sym.rgps) << " -> " << (sym.is_rgps() ? "RGPS" : "not RGPS") << "\n";
  os << "R.R vs Q(S,R), vector-valued: " << fit(sym.rgps_vector_form) << "\n";

  for (const auto& e : rep.spectrum)
    os << "  K" << detail::vector_text(e.x) << "," << detail::vector_text(e.y) << " = " << e.value << " [" << e.case_name
       << ", expected " << e.expected << "]\n";

  os << "certifications:\n";
  for (const auto& c : rep.certifications)
    os << "  " << to_string(c.status) << "  " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  os << (rep.all_certified() ? "ALL CERTIFIED" : "CERTIFICATION FAILED") << "\n";
  os << "elapsed: " << rep.elapsed_seconds << " s\n";
  return os.str();
}

inline OrderedJson audit_json(const AuditTable& table) {
  using detail::q;
  OrderedJson rows = OrderedJson::array();
  for (const auto& r : table.rows) {
    OrderedJson row;
    row["n"] = r.n;
    OrderedJson sols = OrderedJson::array();
    for (std::size_t i = 0; i < 2; ++i) {
      OrderedJson s;
      s["kappa"] = q(r.solutions[i].kappa);
      s["mu"] = q(r.solutions[i].mu);
      s["L"] = q(r.solutions[i].L);
      s["classification_residual"] = q(r.classification_residuals[i]);
      s["mu_L_residual"] = q(r.mu_L_residuals[i]);
      s["system_combination_defect"] = q(r.combination_defects[i]);
      s["kappa_from_branch_constants_residual"] = q(r.branch.kappa_ab_residual[i]);
      s["branch_mu_relation_residual"] = q(r.branch.mu_relation_residual[i]);
      sols.push_back(std::move(s));
    }
    row["solutions"] = std::move(sols);
    OrderedJson b;
    b["cubic_factor_positive_roots"] = r.branch.system2_positive_roots;
    b["cubic_factor_discriminant"] = q(r.branch.system2_discriminant);
    b["L_quadratic_real_roots"] = r.branch.l_real_roots;
    b["L_roots"] = {q(r.branch.l_roots[0]), q(r.branch.l_roots[1])};
    b["L_roots_verified"] = r.branch.l_roots_verified;
    b["lambda_one_B_residual"] = q(r.branch.lambda_one_b_residual);
    b["system12_resultant"] = q(r.branch.system12_resultant);
    b["system24_resultant"] = q(r.branch.system24_resultant);
    b["second_quadratic_positive_roots"] = r.branch.system3_positive_roots;
    row["branch"] = std::move(b);
    row["certified"] = r.certified();
    rows.push_back(std::move(row));
  }
  OrderedJson doc;
  doc["rows"] = std::move(rows);
  doc["all_certified"] = table.all_certified();
  return doc;
}

inline std::string audit_text(const AuditTable& table) {
  std::ostringstream os;
  for (const auto& r : table.rows) {
    os << "n=" << r.n;
    for (const auto& s : r.solutions) os << "  (" << s.kappa << ", " << s.mu << ", " << s.L << ")";
    os << "  pos.roots=" << r.branch.system2_positive_roots << "  L-roots={" << r.branch.l_roots[0] << ", "
       << r.branch.l_roots[1] << "}  res12=" << r.branch.system12_resultant << "  res24=" << r.branch.system24_resultant
       << "  " << (r.certified() ? "certified" : "FAILED") << "\n";
  }
  os << (table.all_certified() ? "ALL CERTIFIED" : "CERTIFICATION FAILED") << "\n";
  return os.str();
}

}  // namespace kmc
