#pragma once

#include <stdexcept>
#include <string>

namespace u2u {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// audio_io
struct IoError : Error { using Error::Error; };
struct NotWav : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };
struct WrongSampleRate : Error {
  int found_rate = 0;
  explicit WrongSampleRate(const std::string& msg, int found)
      : Error(msg), found_rate(found) {}
};

// dsp_features
struct DegenerateFilter : Error { using Error::Error; };

// unit_quantizer
struct TooFewFrames : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct UnitOutOfRange : Error { using Error::Error; };
struct BadMagic : Error { using Error::Error; };
struct VersionUnsupported : Error { using Error::Error; };
struct TruncatedFile : Error { using Error::Error; };

// seqprep
struct MissingUnits : Error { using Error::Error; };
struct ManifestError : Error { using Error::Error; };

// transformer_core
struct ShapeMismatch : Error { using Error::Error; };
struct OddDim : Error { using Error::Error; };
struct MissingCache : Error { using Error::Error; };

// trainer
struct CorruptCheckpoint : Error { using Error::Error; };
struct Interrupted : Error { using Error::Error; };

// translate_eval
struct EmptyCorpus : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct EmptyReference : Error { using Error::Error; };
struct LineCountMismatch : Error { using Error::Error; };

// synth_task
struct BadFractions : Error { using Error::Error; };

// cli / config
struct ConfigError : Error { using Error::Error; };

}  // namespace u2u
