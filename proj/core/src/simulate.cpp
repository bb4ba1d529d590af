#include "exsplice/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include "exsplice/errors.hpp"
#include "exsplice/io.hpp"
#include "exsplice/layout.hpp"
#include "exsplice/rng.hpp"
#include "exsplice/sample_sheet.hpp"
#include "exsplice/text.hpp"
#include "exsplice/xarr.hpp"

namespace exsplice {

namespace {

std::string cluster_name(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c%06d", i + 1);
  return buf;
}

std::string probeset_name(const std::string& cluster, int j) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_ps%02d", j + 1);
  return cluster + buf;
}

std::string probe_name(const std::string& probeset, int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_p%02d", k + 1);
  return probeset + buf;
}

std::string gene_name(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "G%06d", i + 1);
  return buf;
}

void validate(const SimSpec& spec) {
  if (spec.n_clusters < 1) fail(Errc::EmptyUnit, "n_clusters must be >= 1");
  if (spec.probesets_per_cluster_min < 1 ||
      spec.probesets_per_cluster_max < spec.probesets_per_cluster_min)
    fail(Errc::EmptyUnit, "bad probesets_per_cluster range");
  if (spec.probes_per_probeset < 1) fail(Errc::EmptyUnit, "probes_per_probeset must be >= 1");
  if (spec.treatments.empty() || spec.n_replicates < 1)
    fail(Errc::EmptyUnit, "need >= 1 treatment and replicate");
  if (spec.n_splicing_events + spec.n_de_events > spec.n_clusters)
    fail(Errc::LengthMismatch, "more planted events than clusters");
  if ((spec.n_splicing_events > 0 || spec.n_de_events > 0) && spec.treatments.size() < 2)
    fail(Errc::EmptyUnit, "planted events need >= 2 treatment groups");
  if (spec.noise_sd <= 0.0 || spec.affinity_sd < 0.0)
    fail(Errc::NonFiniteInput, "bad noise/affinity sd");
  if (spec.splicing_delta < 0.0 || spec.de_delta < 0.0)
    fail(Errc::NonFiniteInput, "negative event delta");
}

}  // namespace

GroundTruth simulate_dataset(const SimSpec& spec, const std::string& out_dir) {
  validate(spec);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (!std::filesystem::exists(out_dir)) fail(Errc::WriteFailure, out_dir);

  SplitMix64 rng(spec.seed);
  const int T = static_cast<int>(spec.treatments.size());
  const int R = spec.n_replicates;

  // 1. probeset counts
  std::vector<int> n_probesets(spec.n_clusters, spec.probesets_per_cluster_min);
  if (spec.probesets_per_cluster_max > spec.probesets_per_cluster_min) {
    const std::uint64_t span =
        spec.probesets_per_cluster_max - spec.probesets_per_cluster_min + 1;
    for (int i = 0; i < spec.n_clusters; ++i)
      n_probesets[i] = spec.probesets_per_cluster_min + static_cast<int>(rng.next_below(span));
  }

  // 2. event placement
  GroundTruth truth;
  std::vector<int> splice_cluster, de_cluster;
  if (spec.n_splicing_events > 0 || spec.n_de_events > 0) {
    std::vector<int> shuffled(spec.n_clusters);
    std::iota(shuffled.begin(), shuffled.end(), 0);
    for (int i = spec.n_clusters - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(shuffled[i], shuffled[j]);
    }
    splice_cluster.assign(shuffled.begin(), shuffled.begin() + spec.n_splicing_events);
    de_cluster.assign(shuffled.begin() + spec.n_splicing_events,
                      shuffled.begin() + spec.n_splicing_events + spec.n_de_events);
    std::sort(splice_cluster.begin(), splice_cluster.end());
    std::sort(de_cluster.begin(), de_cluster.end());
  }
  const std::string affected_group = T >= 2 ? spec.treatments[1] : spec.treatments[0];

  // 3. per-splice-event probeset pick
  std::map<int, int> splice_probeset;
  for (int c : splice_cluster)
    splice_probeset[c] = static_cast<int>(rng.next_below(n_probesets[c]));

  for (int c : splice_cluster)
    truth.spliced_clusters[cluster_name(c)] =
        SpliceEvent{probeset_name(cluster_name(c), splice_probeset[c]), spec.splicing_delta,
                    affected_group};
  for (int c : de_cluster)
    truth.de_clusters[cluster_name(c)] = DeEvent{spec.de_delta, affected_group};

  // 4./5. random effects
  std::vector<double> rep_effect(R);
  for (int r = 0; r < R; ++r) rep_effect[r] = 0.1 * rng.next_normal();
  std::vector<double> chip_effect(T * R);
  for (int t = 0; t < T; ++t)
    for (int r = 0; r < R; ++r) chip_effect[t * R + r] = 0.1 * rng.next_normal();

  // sample sheet: treatment-major, replicate inner
  std::string sheet_text = "celFile\treplicate\ttreatment\n";
  struct SampleKey {
    int treatment, replicate;
    std::string cel;
  };
  std::vector<SampleKey> samples;
  for (int t = 0; t < T; ++t) {
    for (int r = 0; r < R; ++r) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "_r%02d", r + 1);
      const std::string cel = spec.treatments[t] + buf;
      sheet_text += cel + "\tr" + std::to_string(r + 1) + "\t" + spec.treatments[t] + "\n";
      samples.push_back({t, r, cel});
    }
  }
  const std::size_t n_samples = samples.size();

  // layout text + per-cluster files
  std::string layout_text = "probe_id\tprobeset_id\ttranscript_cluster_id\n";
  std::string transcript_csv = "# synthetic annotation\ntranscript_cluster_id,gene_assignment\n";
  std::string probeset_csv = "# synthetic annotation\nprobeset_id,crosshyb_type\n";
  std::string models_tsv = "gene_symbol\ttranscript_id\tchrom\tstrand\texon_start\texon_stop\n";

  std::size_t total_probes = 0;
  for (int c = 0; c < spec.n_clusters; ++c)
    total_probes += static_cast<std::size_t>(n_probesets[c]) * spec.probes_per_probeset;

  // log2 signal per probe x sample
  std::vector<std::vector<double>> log2_signal(total_probes,
                                               std::vector<double>(n_samples, 0.0));
  std::size_t probe_row = 0;
  for (int c = 0; c < spec.n_clusters; ++c) {
    const std::string cluster = cluster_name(c);
    const std::string gene = gene_name(c);
    transcript_csv +=
        cluster + ",\"NM_" + std::to_string(c + 1) + " // " + gene + " // synthetic locus\"\n";
    const char strand = (c % 2 == 0) ? '+' : '-';
    const bool is_de = truth.de_clusters.count(cluster) > 0;
    const auto splice_it = truth.spliced_clusters.find(cluster);

    // 6. affinities, then 7. noise, probe-major
    std::vector<double> affinities(static_cast<std::size_t>(n_probesets[c]) *
                                   spec.probes_per_probeset);
    for (double& a : affinities) a = spec.affinity_sd * rng.next_normal();

    std::size_t local = 0;
    for (int e = 0; e < n_probesets[c]; ++e) {
      const std::string probeset = probeset_name(cluster, e);
      probeset_csv += probeset + ",1\n";
      const long exon_start = 1000L * (e + 1);
      models_tsv += gene + "\tT" + std::to_string(c + 1) + "\tchr1\t" + strand + "\t" +
                    std::to_string(exon_start) + "\t" + std::to_string(exon_start + 600) + "\n";
      const bool spliced_here =
          splice_it != truth.spliced_clusters.end() && splice_probeset[c] == e;
      for (int k = 0; k < spec.probes_per_probeset; ++k) {
        layout_text += probe_name(probeset, k) + "\t" + probeset + "\t" + cluster + "\n";
        const double alpha = affinities[local++];
        for (std::size_t s = 0; s < n_samples; ++s) {
          const auto& key = samples[s];
          double v = spec.baseline_log2 + alpha + rep_effect[key.replicate] +
                     chip_effect[key.treatment * R + key.replicate] +
                     spec.noise_sd * rng.next_normal();
          const bool affected = spec.treatments[key.treatment] == affected_group;
          if (affected && spliced_here) v += splice_it->second.delta;
          if (affected && is_de) v += truth.de_clusters[cluster].delta;
          log2_signal[probe_row + static_cast<std::size_t>(e) * spec.probes_per_probeset + k]
                     [s] = v;
        }
      }
    }
    probe_row += static_cast<std::size_t>(n_probesets[c]) * spec.probes_per_probeset;
  }

  write_file_bytes(out_dir + "/layout.cdl", layout_text);
  write_file_bytes(out_dir + "/SampleInformation.txt", sheet_text);
  write_file_bytes(out_dir + "/annotation_transcript.csv", transcript_csv);
  write_file_bytes(out_dir + "/annotation_probeset.csv", probeset_csv);
  write_file_bytes(out_dir + "/transcript_models.tsv", models_tsv);

  const ChipLayout layout = parse_chip_layout_text(layout_text);

  // 8. background, per sample in sheet order, probe order within
  for (std::size_t s = 0; s < n_samples; ++s) {
    std::vector<double> column(total_probes);
    for (std::size_t p = 0; p < total_probes; ++p) {
      const double bg =
          std::max(0.0, spec.background.mu + spec.background.sigma * rng.next_normal());
      column[p] = std::exp2(log2_signal[p][s]) + bg;
    }
    write_xarr(column, layout, out_dir + "/" + samples[s].cel + ".xarr", "stage=raw");
  }

  write_ground_truth_tsv(truth, out_dir + "/ground_truth.tsv");
  return truth;
}

void write_ground_truth_tsv(const GroundTruth& truth, const std::string& path) {
  std::string out = "cluster_id\tevent_type\tprobeset_id\tdelta\tgroup\n";
  char buf[64];
  // std::map iteration keeps rows sorted by cluster id within each section
  for (const auto& [cluster, event] : truth.spliced_clusters) {
    std::snprintf(buf, sizeof buf, "%.6g", event.delta);
    out += cluster + "\tsplice\t" + event.probeset_id + "\t" + buf + "\t" + event.group + "\n";
  }
  for (const auto& [cluster, event] : truth.de_clusters) {
    std::snprintf(buf, sizeof buf, "%.6g", event.delta);
    out += cluster + "\tde\t-\t" + buf + "\t" + event.group + "\n";
  }
  write_file_bytes(path, out);
}

GroundTruth read_ground_truth_tsv(const std::string& path) {
  GroundTruth truth;
  const std::string text = read_file_bytes(path);
  auto lines = split_lines(text);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto fields = split(lines[li], '\t');
    if (fields.size() != 5) fail(Errc::MissingColumn, path + ": line " + std::to_string(li + 1));
    const std::string cluster(trim(fields[0]));
    const std::string kind(trim(fields[1]));
    const double delta = std::stod(std::string(fields[3]));
    const std::string group(trim(fields[4]));
    if (kind == "splice")
      truth.spliced_clusters[cluster] = SpliceEvent{std::string(trim(fields[2])), delta, group};
    else if (kind == "de")
      truth.de_clusters[cluster] = DeEvent{delta, group};
  }
  return truth;
}

}  // namespace exsplice
