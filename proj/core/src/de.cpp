#include "exsplice/de.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exsplice/design.hpp"
#include "exsplice/distributions.hpp"
#include "exsplice/errors.hpp"

namespace exsplice {

GeneTestResult de_anova(const std::string& cluster_id, const Matrix& log2_probe_by_sample,
                        const std::vector<std::string>& row_probesets, const SampleSheet& sheet,
                        DeDenominator denominator) {
  if (log2_probe_by_sample.rows() != row_probesets.size())
    fail(Errc::LengthMismatch, "row labels do not match value rows");
  if (log2_probe_by_sample.cols() != sheet.samples.size())
    fail(Errc::LengthMismatch, "value columns do not match sample sheet");

  DesignSpec spec;
  spec.model = ModelKind::de_probe;
  spec.treatment_labels = sheet.treatments();
  spec.replicate_labels = sheet.replicates();
  spec.n_treatments = static_cast<int>(spec.treatment_labels.size());
  spec.n_replicates = static_cast<int>(spec.replicate_labels.size());
  if (spec.n_treatments < 2)
    fail(Errc::EmptyUnit, "differential expression needs >= 2 treatment groups");

  std::vector<int> row_level(log2_probe_by_sample.rows());
  for (std::size_t r = 0; r < log2_probe_by_sample.rows(); ++r) {
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
  y.reserve(log2_probe_by_sample.rows() * log2_probe_by_sample.cols());
  for (std::size_t r = 0; r < log2_probe_by_sample.rows(); ++r)
    for (std::size_t s = 0; s < log2_probe_by_sample.cols(); ++s) {
      spec.observations.push_back({row_level[r], sample_treatment[s], sample_replicate[s]});
      y.push_back(log2_probe_by_sample(r, s));
    }

  const Design design = build_design(spec);
  const LinearFit fit = solve_least_squares(design.X, y, design.labels);

  // Sequential (Type I) sums of squares from Q^T y in the fixed column order.
  double ss_treatment = 0.0;
  int df_treatment = 0;
  double ss_rep_treat = 0.0;
  int df_rep_treat = 0;
  for (std::size_t c = 0; c < design.labels.size(); ++c) {
    if (design.labels[c].term == ColumnLabel::Term::treatment) {
      ss_treatment += fit.qty[c] * fit.qty[c];
      ++df_treatment;
    } else if (design.labels[c].term == ColumnLabel::Term::rep_treat) {
      ss_rep_treat += fit.qty[c] * fit.qty[c];
      ++df_rep_treat;
    }
  }

  double ms_denom = 0.0;
  int df_denom = 0;
  if (denominator == DeDenominator::interaction) {
    df_denom = df_rep_treat;
    ms_denom = df_denom > 0 ? ss_rep_treat / df_denom : 0.0;
  } else {
    df_denom = fit.residual_df;
    ms_denom = fit.sigma2;
  }
  if (df_denom < 1)
    fail(Errc::NonPositiveDf, "cluster '" + cluster_id + "': no denominator stratum");

  const double ms_treatment = ss_treatment / df_treatment;

  GeneTestResult result;
  result.cluster_id = cluster_id;
  result.method = TestMethod::de;
  if (ms_denom <= 0.0) {
    result.flagged = true;
    result.p_value = ss_treatment > 0.0 ? 0.0 : 1.0;
    result.statistic = ss_treatment > 0.0 ? std::numeric_limits<double>::max() : 0.0;
    result.detail.push_back({"treatment (zero denominator MS)", ms_treatment, ms_denom,
                             result.statistic, *result.p_value});
    return result;
  }

  const double f = ms_treatment / ms_denom;
  result.statistic = f;
  result.p_value = 1.0 - f_cdf(f, df_treatment, df_denom);
  result.detail.push_back({"treatment", ms_treatment, ms_denom, f, *result.p_value});
  return result;
}

}  // namespace exsplice
