#include "exsplice/design.hpp"

#include "exsplice/errors.hpp"

namespace exsplice {

Design build_design(const DesignSpec& spec) {
  const int ne = spec.n_probesets;
  const int T = spec.n_treatments;
  const int R = spec.n_replicates;
  const bool anosva = spec.model != ModelKind::de_probe;
  if (anosva && ne < 2)
    fail(Errc::SingleProbesetForAnosva,
         "interaction model needs >= 2 probesets, got " + std::to_string(ne));
  if (ne < 1 || T < 1 || R < 1) fail(Errc::EmptyUnit, "empty factor in design");

  auto label_of = [&](const std::vector<std::string>& names, int idx,
                      const char* prefix) -> std::string {
    if (idx < static_cast<int>(names.size())) return names[idx];
    return std::string(prefix) + std::to_string(idx + 1);
  };

  std::vector<ColumnLabel> labels;
  labels.push_back({ColumnLabel::Term::intercept, 0, 0, "(Intercept)"});
  for (int j = 0; j < ne - 1; ++j)
    labels.push_back({ColumnLabel::Term::probeset, j + 1, 0,
                      "probeset[" + label_of(spec.probeset_labels, j, "e") + "]"});
  for (int j = 0; j < T - 1; ++j)
    labels.push_back({ColumnLabel::Term::treatment, j + 1, 0,
                      "treatment[" + label_of(spec.treatment_labels, j, "t") + "]"});
  if (anosva) {
    for (int je = 0; je < ne - 1; ++je)
      for (int jt = 0; jt < T - 1; ++jt)
        labels.push_back({ColumnLabel::Term::interaction, je + 1, jt + 1,
                          "probeset[" + label_of(spec.probeset_labels, je, "e") +
                              "]:treatment[" + label_of(spec.treatment_labels, jt, "t") + "]"});
  }
  for (int j = 0; j < R - 1; ++j)
    labels.push_back({ColumnLabel::Term::replicate, j + 1, 0,
                      "replicate[" + label_of(spec.replicate_labels, j, "r") + "]"});
  for (int jr = 0; jr < R - 1; ++jr)
    for (int jt = 0; jt < T - 1; ++jt)
      labels.push_back({ColumnLabel::Term::rep_treat, jr + 1, jt + 1,
                        "replicate[" + label_of(spec.replicate_labels, jr, "r") +
                            "]:treatment[" + label_of(spec.treatment_labels, jt, "t") + "]"});

  Design design;
  design.labels = labels;
  design.X = Matrix(spec.observations.size(), labels.size());
  for (std::size_t r = 0; r < spec.observations.size(); ++r) {
    const Observation& obs = spec.observations[r];
    std::size_t c = 0;
    design.X(r, c++) = 1.0;
    for (int j = 0; j < ne - 1; ++j) design.X(r, c++) = sum_contrast(obs.probeset, j, ne);
    for (int j = 0; j < T - 1; ++j) design.X(r, c++) = sum_contrast(obs.treatment, j, T);
    if (anosva) {
      for (int je = 0; je < ne - 1; ++je)
        for (int jt = 0; jt < T - 1; ++jt)
          design.X(r, c++) =
              sum_contrast(obs.probeset, je, ne) * sum_contrast(obs.treatment, jt, T);
    }
    for (int j = 0; j < R - 1; ++j) design.X(r, c++) = sum_contrast(obs.replicate, j, R);
    for (int jr = 0; jr < R - 1; ++jr)
      for (int jt = 0; jt < T - 1; ++jt)
        design.X(r, c++) =
            sum_contrast(obs.replicate, jr, R) * sum_contrast(obs.treatment, jt, T);
  }
  return design;
}

}  // namespace exsplice
