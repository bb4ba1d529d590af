#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exsplice/background.hpp"

namespace exsplice {

/// Synthetic dataset description. The generative model in log2 units is
///   y = baseline + alpha_p + gamma (planted) + I_r + C_tr + eps,
/// with alpha_p ~ N(0, affinity_sd^2), I_r ~ N(0, 0.1^2), C_tr ~ N(0, 0.1^2)
/// and eps ~ N(0, noise_sd^2). The linear-scale signal 2^y then receives
/// additive background noise N(mu, sigma^2) clamped at 0.
struct SimSpec {
  int n_clusters = 0;
  int probesets_per_cluster_min = 4;
  int probesets_per_cluster_max = 4;
  int probes_per_probeset = 4;
  std::vector<std::string> treatments = {"normal", "tumour"};
  int n_replicates = 5;
  double noise_sd = 0.2;
  double affinity_sd = 0.5;
  double baseline_log2 = 8.0;
  int n_splicing_events = 0;
  double splicing_delta = 1.0;
  int n_de_events = 0;
  double de_delta = 1.0;
  BgParams background{50.0, 10.0, 0.02};
  std::uint64_t seed = 1;
};

struct SpliceEvent {
  std::string probeset_id;
  double delta = 0.0;
  std::string group;
};

struct DeEvent {
  double delta = 0.0;
  std::string group;
};

struct GroundTruth {
  std::map<std::string, SpliceEvent> spliced_clusters;
  std::map<std::string, DeEvent> de_clusters;
};

/// Writes layout.cdl, SampleInformation.txt, one XARR per sample, transcript
/// and probeset annotation CSVs, transcript_models.tsv and ground_truth.tsv
/// into out_dir. Fully deterministic for a given spec (see rng.hpp for the
/// stream definition); the draw order is: probeset counts per cluster, event
/// cluster shuffle, per-splice-event probeset pick, replicate effects, chip
/// effects, probe affinities per cluster, noise per cluster (probe-major,
/// then sample), background per sample (probe order). Planted events affect
/// the second treatment group.
GroundTruth simulate_dataset(const SimSpec& spec, const std::string& out_dir);

void write_ground_truth_tsv(const GroundTruth& truth, const std::string& path);
GroundTruth read_ground_truth_tsv(const std::string& path);

}  // namespace exsplice
