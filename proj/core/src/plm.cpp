#include "exsplice/plm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/mathutil.hpp"
#include "exsplice/median_polish.hpp"
#include "exsplice/text.hpp"

namespace exsplice {

const char* unit_level_name(UnitLevel level) {
  return level == UnitLevel::cluster ? "cluster" : "probeset";
}

namespace {

constexpr double kLog2Floor = 1e-8;

double to_log2(double v) { return std::log2(std::max(v, kLog2Floor)); }

PlmFit fit_unit(const std::string& unit_id, UnitLevel level,
                const std::vector<std::size_t>& probe_rows, const IntensityMatrix& normalized,
                const ChipLayout& layout) {
  if (probe_rows.empty()) fail(Errc::EmptyUnit, "unit '" + unit_id + "' has no probes");
  const std::size_t n_samples = normalized.values.cols();
  Matrix log2_values(probe_rows.size(), n_samples);
  for (std::size_t r = 0; r < probe_rows.size(); ++r)
    for (std::size_t s = 0; s < n_samples; ++s)
      log2_values(r, s) = to_log2(normalized.values(probe_rows[r], s));

  const MedianPolishResult polish = median_polish(log2_values);

  PlmFit fit;
  fit.unit_id = unit_id;
  fit.level = level;
  fit.probe_affinities = polish.row_effects;
  fit.chip_effects.resize(n_samples);
  for (std::size_t s = 0; s < n_samples; ++s)
    fit.chip_effects[s] = polish.overall + polish.col_effects[s];
  fit.residuals = polish.residuals;
  fit.residual_scale = mad_scaled(polish.residuals.data());
  fit.probe_ids.reserve(probe_rows.size());
  fit.row_probesets.reserve(probe_rows.size());
  for (std::size_t row : probe_rows) {
    fit.probe_ids.push_back(layout.probes[row].probe_id);
    fit.row_probesets.push_back(layout.probes[row].probeset_id);
  }
  return fit;
}

}  // namespace

std::vector<PlmFit> fit_plm(const IntensityMatrix& normalized, const ChipLayout& layout,
                            UnitLevel level, int threads) {
  require_layout(normalized, layout);
  if (normalized.stage != Stage::normalized)
    fail(Errc::WrongStage,
         std::string("PLM expects normalized input, got ") + stage_name(normalized.stage));

  // unit_id-sorted work list; each unit owns its layout probe rows
  std::vector<std::pair<std::string, std::vector<std::size_t>>> units;
  if (level == UnitLevel::probeset) {
    for (const auto& [probeset, rows] : layout.probeset_probes) units.emplace_back(probeset, rows);
  } else {
    for (const auto& [cluster, probesets] : layout.cluster_probesets) {
      std::vector<std::size_t> rows;
      for (const auto& probeset : probesets) {
        const auto& pr = layout.probeset_probes.at(probeset);
        rows.insert(rows.end(), pr.begin(), pr.end());
      }
      std::sort(rows.begin(), rows.end());
      units.emplace_back(cluster, std::move(rows));
    }
  }

  std::vector<PlmFit> fits(units.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      fits[i] = fit_unit(units[i].first, level, units[i].second, normalized, layout);
  };
  const int n_threads =
      std::max(1, std::min<int>(threads, static_cast<int>(units.size() ? units.size() : 1)));
  if (n_threads == 1) {
    work(0, units.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (units.size() + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(units.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return fits;
}

ExpressionMatrix extract_expression(const std::vector<PlmFit>& fits) {
  ExpressionMatrix expr;
  if (fits.empty()) return expr;
  expr.level = fits.front().level;
  const std::size_t n_samples = fits.front().chip_effects.size();
  for (const auto& fit : fits) {
    if (fit.level != expr.level) fail(Errc::MixedLevels, "fit '" + fit.unit_id + "'");
    if (fit.chip_effects.size() != n_samples)
      fail(Errc::MixedLevels, "fit '" + fit.unit_id + "' has a different sample count");
  }

  std::vector<std::size_t> order(fits.size());
  for (std::size_t i = 0; i < fits.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return fits[a].unit_id < fits[b].unit_id; });

  expr.values = Matrix(fits.size(), n_samples);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& fit = fits[order[r]];
    expr.unit_ids.push_back(fit.unit_id);
    for (std::size_t s = 0; s < n_samples; ++s) expr.values(r, s) = fit.chip_effects[s];
  }
  return expr;
}

std::map<std::string, UnitIntensities> unit_probe_intensities(const IntensityMatrix& normalized,
                                                              const ChipLayout& layout) {
  require_layout(normalized, layout);
  if (normalized.stage != Stage::normalized)
    fail(Errc::WrongStage, std::string("expected normalized input, got ") +
                               stage_name(normalized.stage));

  std::map<std::string, UnitIntensities> out;
  const std::size_t n_samples = normalized.values.cols();
  for (const auto& [cluster, probesets] : layout.cluster_probesets) {
    std::vector<std::size_t> rows;
    for (const auto& probeset : probesets) {
      const auto& pr = layout.probeset_probes.at(probeset);
      rows.insert(rows.end(), pr.begin(), pr.end());
    }
    std::sort(rows.begin(), rows.end());

    UnitIntensities unit;
    unit.log2_values = Matrix(rows.size(), n_samples);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      unit.probe_ids.push_back(layout.probes[rows[r]].probe_id);
      unit.row_probesets.push_back(layout.probes[rows[r]].probeset_id);
      for (std::size_t s = 0; s < n_samples; ++s)
        unit.log2_values(r, s) = to_log2(normalized.values(rows[r], s));
    }
    out.emplace(cluster, std::move(unit));
  }
  return out;
}

void write_expression_tsv(const ExpressionMatrix& expr, const std::string& path) {
  std::string out = "unit_id";
  for (const auto& name : expr.sample_names) out += "\t" + name;
  out += "\n";
  char buf[64];
  for (std::size_t r = 0; r < expr.unit_ids.size(); ++r) {
    out += expr.unit_ids[r];
    for (std::size_t s = 0; s < expr.values.cols(); ++s) {
      std::snprintf(buf, sizeof buf, "%.6g", expr.values(r, s));
      out += "\t";
      out += buf;
    }
    out += "\n";
  }
  write_file_bytes(path, out);
}

ExpressionMatrix read_expression_tsv(const std::string& path, UnitLevel level) {
  const std::string text = read_file_bytes(path);
  auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::EmptyBody, path);
  auto header = split(lines[0], '\t');
  if (header.empty() || trim(header[0]) != "unit_id")
    fail(Errc::MissingHeader, path + ": expected unit_id header");

  ExpressionMatrix expr;
  expr.level = level;
  for (std::size_t i = 1; i < header.size(); ++i) expr.sample_names.emplace_back(trim(header[i]));
  const std::size_t n_samples = expr.sample_names.size();

  std::vector<std::vector<double>> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    auto fields = split(lines[li], '\t');
    if (fields.size() != n_samples + 1)
      fail(Errc::MissingColumn, path + ": line " + std::to_string(li + 1));
    expr.unit_ids.emplace_back(trim(fields[0]));
    std::vector<double> row(n_samples);
    for (std::size_t s = 0; s < n_samples; ++s) row[s] = std::stod(std::string(fields[s + 1]));
    rows.push_back(std::move(row));
  }
  expr.values = Matrix(rows.size(), n_samples);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < n_samples; ++s) expr.values(r, s) = rows[r][s];
  return expr;
}

}  // namespace exsplice
