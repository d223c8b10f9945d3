#pragma once

#include <string>
#include <vector>

namespace u2u {

/// Every pipeline-internal buffer is mono at this rate.
constexpr int kPipelineSampleRate = 16000;

struct AudioBuffer {
  std::vector<float> samples;  // amplitudes in [-1, 1]
  int sample_rate = kPipelineSampleRate;

  double duration_s() const {
    return sample_rate > 0 ? double(samples.size()) / sample_rate : 0.0;
  }
};

/// Reads a RIFF/WAVE file. Accepts PCM 16-bit mono at 16 kHz only; unknown
/// chunks are skipped. Samples are mapped to float as s / 32768.
/// Throws NotWav, UnsupportedFormat, WrongSampleRate, IoError.
AudioBuffer read_wav(const std::string& path);

/// Writes PCM16 mono little-endian. Round trip preserves each sample to
/// within 1/32768.
void write_wav(const AudioBuffer& buffer, const std::string& path);

}  // namespace u2u
