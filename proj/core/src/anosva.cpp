#include "exsplice/anosva.hpp"

#include <algorithm>
#include <cmath>

#include "exsplice/design.hpp"
#include "exsplice/distributions.hpp"
#include "exsplice/errors.hpp"

namespace exsplice {

const char* test_method_name(TestMethod m) {
  switch (m) {
    case TestMethod::anosva_probe: return "anosva_probe";
    case TestMethod::anosva_probeset: return "anosva_probeset";
    case TestMethod::de: return "de";
    case TestMethod::firma: return "firma";
  }
  return "?";
}

namespace {

// Shared fitting path for the two ANOSVA variants. Rows carry a probeset
// label; the factor levels keep first-appearance order.
GeneTestResult anosva_fit(const std::string& cluster_id, TestMethod method,
                          const Matrix& values, const std::vector<std::string>& row_probesets,
                          const SampleSheet& sheet) {
  if (values.rows() != row_probesets.size())
    fail(Errc::LengthMismatch, "row labels do not match value rows");
  if (values.cols() != sheet.samples.size())
    fail(Errc::LengthMismatch, "value columns do not match sample sheet");

  DesignSpec spec;
  spec.model =
      method == TestMethod::anosva_probe ? ModelKind::anosva_probe : ModelKind::anosva_probeset;
  spec.treatment_labels = sheet.treatments();
  spec.replicate_labels = sheet.replicates();
  spec.n_treatments = static_cast<int>(spec.treatment_labels.size());
  spec.n_replicates = static_cast<int>(spec.replicate_labels.size());

  std::vector<int> row_level(values.rows());
  for (std::size_t r = 0; r < values.rows(); ++r) {
    const auto& ps = row_probesets[r];
    auto it = std::find(spec.probeset_labels.begin(), spec.probeset_labels.end(), ps);
    if (it == spec.probeset_labels.end()) {
      spec.probeset_labels.push_back(ps);
      row_level[r] = static_cast<int>(spec.probeset_labels.size()) - 1;
    } else {
      row_level[r] = static_cast<int>(it - spec.probeset_labels.begin());
    }
  }
  spec.n_probesets = static_cast<int>(spec.probeset_labels.size());

  std::vector<int> sample_treatment(sheet.samples.size());
  std::vector<int> sample_replicate(sheet.samples.size());
  for (std::size_t s = 0; s < sheet.samples.size(); ++s) {
    const auto& info = sheet.samples[s];
    sample_treatment[s] = static_cast<int>(
        std::find(spec.treatment_labels.begin(), spec.treatment_labels.end(), info.treatment) -
        spec.treatment_labels.begin());
    sample_replicate[s] = static_cast<int>(
        std::find(spec.replicate_labels.begin(), spec.replicate_labels.end(), info.replicate) -
        spec.replicate_labels.begin());
  }

  std::vector<double> y;
  y.reserve(values.rows() * values.cols());
  for (std::size_t r = 0; r < values.rows(); ++r) {
    for (std::size_t s = 0; s < values.cols(); ++s) {
      spec.observations.push_back({row_level[r], sample_treatment[s], sample_replicate[s]});
      y.push_back(values(r, s));
    }
  }

  const Design design = build_design(spec);
  const LinearFit fit = solve_least_squares(design.X, y, design.labels);
  if (fit.residual_df < 1)
    fail(Errc::NonPositiveDf, "cluster '" + cluster_id + "': saturated design");

  GeneTestResult result;
  result.cluster_id = cluster_id;
  result.method = method;
  double min_p = 1.0;
  double max_abs_t = 0.0;
  for (std::size_t c = 0; c < design.labels.size(); ++c) {
    if (design.labels[c].term != ColumnLabel::Term::interaction) continue;
    const double se = fit.standard_errors[c];
    const double t = se > 0.0 ? fit.coefficients[c] / se : 0.0;
    const double p = 2.0 * (1.0 - t_cdf(std::fabs(t), fit.residual_df));
    result.detail.push_back({design.labels[c].text, fit.coefficients[c], se, t, p});
    min_p = std::min(min_p, p);
    max_abs_t = std::max(max_abs_t, std::fabs(t));
  }
  result.statistic = max_abs_t;
  result.p_value = min_p;
  return result;
}

}  // namespace

GeneTestResult anosva_probe(const std::string& cluster_id, const Matrix& log2_probe_by_sample,
                            const std::vector<std::string>& row_probesets,
                            const SampleSheet& sheet) {
  return anosva_fit(cluster_id, TestMethod::anosva_probe, log2_probe_by_sample, row_probesets,
                    sheet);
}

GeneTestResult anosva_probeset(const std::string& cluster_id, const Matrix& probeset_by_sample,
                               const std::vector<std::string>& probeset_ids,
                               const SampleSheet& sheet) {
  return anosva_fit(cluster_id, TestMethod::anosva_probeset, probeset_by_sample, probeset_ids,
                    sheet);
}

}  // namespace exsplice
