#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cwk/report.hpp"

namespace cwk::verify {

struct VerifyOptions {
  std::uint64_t seed = 2020;
  std::optional<std::string> ftable_path;  // 512-entry f-value table
  std::optional<std::string> corpus_path;  // 100000-matrix corpus
  std::optional<std::string> task1_dir;    // <i>.message record files, shared-IV crib
  bool quick = false;                      // trim the slow sweeps
};

// Runs every published-answer check in one pass; data-gated checks are
// SKIPPED when their files are absent.
report::RunReport verify_paper_answers(const VerifyOptions& options);

// The printed challenge S-box.
extern const int kChallengeSBox[64];

// Published GHASH keys recovered in the two tampering tasks (power sums).
extern const char* const kTask2HashKey;
extern const char* const kTask3HashKey;

// Second-preimage constants: f(0), the target message, and the expected
// prepended preimage (hex).
extern const char* const kFZeroHex;
extern const char* const kTargetMessageHex;
extern const char* const kExpectedPreimageHex;

// The worked 8x8 matrix in zigzag order and its 91-bit encoding.
extern const long long kWorkedZigzag[64];
extern const char* const kWorkedBits;

inline constexpr std::uint64_t kCorpusBaselineBits = 6694303;

}  // namespace cwk::verify
