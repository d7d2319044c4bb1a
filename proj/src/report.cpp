#include "meridian/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace meridian {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* const kColumns[] = {"u",       "v",          "E",         "F",
                                "G",       "K",          "K_N",       "H_norm",
                                "umb_dev", "iso_dev",    "hH2_minus_3K", "sp_residual",
                                "gauss_res", "ricci_res", "codazzi_res"};
constexpr int kNumColumns = 15;

struct Row {
  double value[kNumColumns];
};

}  // namespace

AnalyzeResult run_analyze(const AnalysisConfig& config, const std::string& format) {
  if (format != "csv" && format != "json")
    throw ConfigError("format must be 'csv' or 'json'");

  std::vector<int> selected;
  if (config.columns.empty()) {
    for (int i = 0; i < kNumColumns; ++i) selected.push_back(i);
  } else {
    for (const std::string& name : config.columns) {
      int idx = -1;
      for (int i = 0; i < kNumColumns; ++i)
        if (name == kColumns[i]) idx = i;
      if (idx < 0) throw ConfigError("unknown output column '" + name + "'");
      selected.push_back(idx);
    }
  }

  AnalyzeResult result;
  std::vector<Row> rows;
  double max_sp = 0, max_gauss = 0, max_ricci = 0, max_codazzi = 0;

  for (double u : config.grid.u_samples()) {
    for (double v : config.grid.v_samples()) {
      Row row{};
      try {
        const Jet2 jet = config.surface.jet(u, v, config.policy);
        const AdaptedFrame frame = config.surface.frame(u, v, config.policy);
        const FirstFundamentalForm ff = first_form(jet, config.policy);
        const SecondFundamentalForm sff = second_form(jet, frame);
        const CurvatureReport rep = curvature_report(sff);
        const SemiParallelTensor sp = semiparallel_tensor(config.surface, u, v, config.policy);
        const StructuralResiduals sr = structural_residuals(config.surface, u, v, config.policy);
        const double vals[kNumColumns] = {
            u,          v,          ff.E,      ff.F,
            ff.G,       rep.K,      rep.K_N,   rep.H_norm,
            rep.umbilicity_deviation, rep.isotropy_deviation, rep.hH2_minus_3K,
            sp.residual_norm, sr.gauss, sr.ricci, sr.codazzi};
        for (int i = 0; i < kNumColumns; ++i) row.value[i] = vals[i];
        max_sp = std::max(max_sp, sp.residual_norm);
        max_gauss = std::max(max_gauss, sr.gauss);
        max_ricci = std::max(max_ricci, sr.ricci);
        max_codazzi = std::max(max_codazzi, sr.codazzi);
      } catch (const ProfileDomainError&) {
        ++result.rows_skipped;
        continue;
      }
      rows.push_back(row);
      ++result.rows_emitted;
    }
  }

  std::string classification;
  if (config.surface.is_meridian()) {
    const ClassificationResult cr = classify_meridian(config.surface, config.grid, config.policy);
    std::ostringstream os;
    os << "case=" << to_string(cr.surface_case) << " branch=" << to_string(cr.theorem2_branch)
       << " semi_parallel=" << (cr.theorem2_branch != TheoremBranch::NotSemiParallel &&
                                        cr.theorem2_branch != TheoremBranch::Inconsistent
                                    ? "true"
                                    : "false")
       << " ode_residual_max=" << fmt(cr.ode_residual_max);
    classification = os.str();
  }

  if (format == "csv") {
    std::ostringstream os;
    for (size_t i = 0; i < selected.size(); ++i)
      os << (i ? "," : "") << kColumns[selected[i]];
    os << "\n";
    for (const Row& row : rows) {
      for (size_t i = 0; i < selected.size(); ++i)
        os << (i ? "," : "") << fmt(row.value[selected[i]]);
      os << "\n";
    }
    os << "# rows_emitted=" << result.rows_emitted << " rows_skipped=" << result.rows_skipped
       << "\n";
    os << "# max_sp_residual=" << fmt(max_sp) << " max_gauss_res=" << fmt(max_gauss)
       << " max_ricci_res=" << fmt(max_ricci) << " max_codazzi_res=" << fmt(max_codazzi) << "\n";
    if (!classification.empty()) os << "# classification: " << classification << "\n";
    result.bytes = os.str();
  } else {
    nlohmann::ordered_json doc;
    for (int i : selected) doc["columns"].push_back(kColumns[i]);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (int i : selected) r.push_back(row.value[i]);
      doc["rows"].push_back(r);
    }
    doc["summary"]["rows_emitted"] = result.rows_emitted;
    doc["summary"]["rows_skipped"] = result.rows_skipped;
    doc["summary"]["max_sp_residual"] = max_sp;
    doc["summary"]["max_gauss_res"] = max_gauss;
    doc["summary"]["max_ricci_res"] = max_ricci;
    doc["summary"]["max_codazzi_res"] = max_codazzi;
    if (!classification.empty()) doc["summary"]["classification"] = classification;
    result.bytes = doc.dump(2);
    result.bytes += "\n";
  }
  return result;
}

std::string run_classify(const AnalysisConfig& config) {
  const ClassificationResult cr =
      classify_meridian(config.surface, config.grid, config.policy);
  nlohmann::ordered_json doc;
  doc["case"] = to_string(cr.surface_case);
  doc["kappa_is_zero"] = cr.kappa_is_zero;
  doc["kappa_alpha_is_zero"] = cr.kappa_alpha_is_zero;
  doc["kappa_constant"] = cr.kappa_constant;
  doc["theorem2_branch"] = to_string(cr.theorem2_branch);
  doc["semi_parallel"] = cr.theorem2_branch == TheoremBranch::CaseI ||
                         cr.theorem2_branch == TheoremBranch::CaseII;
  doc["ode_residual_max"] = cr.ode_residual_max;
  doc["semiparallel_residual_max"] = cr.semiparallel_residual_max;
  doc["normal_span_rank"] = cr.normal_span_rank;
  doc["hyperplanar"] = cr.hyperplanar;
  doc["K_min"] = cr.K_min;
  doc["K_max"] = cr.K_max;
  return doc.dump(2) + "\n";
}

}  // namespace meridian
