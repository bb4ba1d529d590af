#include "exsplice/errors.hpp"

namespace exsplice {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::MissingHeader: return "MissingHeader";
    case Errc::DuplicateProbeId: return "DuplicateProbeId";
    case Errc::EmptyFile: return "EmptyFile";
    case Errc::InconsistentHierarchy: return "InconsistentHierarchy";
    case Errc::BadMagic: return "BadMagic";
    case Errc::UnsupportedVersion: return "UnsupportedVersion";
    case Errc::ProbeCountMismatch: return "ProbeCountMismatch";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::TruncatedFile: return "TruncatedFile";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::DuplicateReplicateTreatmentPair: return "DuplicateReplicateTreatmentPair";
    case Errc::EmptyBody: return "EmptyBody";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::MalformedQuoting: return "MalformedQuoting";
    case Errc::BadCrosshybValue: return "BadCrosshybValue";
    case Errc::BadStrand: return "BadStrand";
    case Errc::InvertedExon: return "InvertedExon";
    case Errc::OverlappingExons: return "OverlappingExons";
    case Errc::TooFewProbes: return "TooFewProbes";
    case Errc::DegenerateColumn: return "DegenerateColumn";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::WrongStage: return "WrongStage";
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::EmptyUnit: return "EmptyUnit";
    case Errc::MixedLevels: return "MixedLevels";
    case Errc::SingleProbesetForAnosva: return "SingleProbesetForAnosva";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NonPositiveDf: return "NonPositiveDf";
    case Errc::OutOfRangeP: return "OutOfRangeP";
    case Errc::UnpairedDesign: return "UnpairedDesign";
    case Errc::GeneNotInModels: return "GeneNotInModels";
    case Errc::ClusterNotMapped: return "ClusterNotMapped";
    case Errc::WriteFailure: return "WriteFailure";
    case Errc::UnknownSubcommand: return "UnknownSubcommand";
    case Errc::ConfigMissingKey: return "ConfigMissingKey";
  }
  return "UnknownError";
}

bool errc_is_numeric(Errc e) {
  switch (e) {
    case Errc::NonFiniteValue:
    case Errc::NonFiniteInput:
    case Errc::DegenerateColumn:
    case Errc::RankDeficient:
    case Errc::NonPositiveDf:
    case Errc::OutOfRangeP:
      return true;
    default:
      return false;
  }
}

}  // namespace exsplice
