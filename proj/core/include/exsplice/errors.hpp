#pragma once

#include <stdexcept>
#include <string>

namespace exsplice {

enum class Errc {
  // ingest
  MissingHeader,
  DuplicateProbeId,
  EmptyFile,
  InconsistentHierarchy,
  BadMagic,
  UnsupportedVersion,
  ProbeCountMismatch,
  ChecksumMismatch,
  TruncatedFile,
  LengthMismatch,
  NonFiniteValue,
  MissingColumn,
  DuplicateReplicateTreatmentPair,
  EmptyBody,
  FileNotFound,
  MalformedQuoting,
  BadCrosshybValue,
  BadStrand,
  InvertedExon,
  OverlappingExons,
  // preprocessing
  TooFewProbes,
  DegenerateColumn,
  EmptyMatrix,
  WrongStage,
  // summarization
  NonFiniteInput,
  EmptyUnit,
  MixedLevels,
  // statistics
  SingleProbesetForAnosva,
  RankDeficient,
  NonPositiveDf,
  OutOfRangeP,
  UnpairedDesign,
  // reporting
  GeneNotInModels,
  ClusterNotMapped,
  WriteFailure,
  // cli
  UnknownSubcommand,
  ConfigMissingKey,
};

const char* errc_name(Errc e);

// True for failures of numeric routines (as opposed to input validation).
bool errc_is_numeric(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace exsplice
