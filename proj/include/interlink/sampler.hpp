#pragma once

// Simulated coincidence runs drawn from an exact JointTable.
//
// Generator: std::mt19937_64 (period 2^19937 - 1, output sequence fixed by the
// C++ standard) seeded with the 64-bit seed. Each shot consumes one 64-bit
// word w; u = (w >> 11) * 2^-53 in [0, 1). The cell is the first row-major
// support cell whose cumulative mass exceeds u * total. Cells at or below the
// support threshold are not in the CDF, so they can never be drawn.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "interlink/correlations.hpp"

namespace interlink {

struct ShotRecord {
  std::size_t shot;
  std::size_t left;
  std::size_t right;
  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

struct EmpiricalReport {
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::vector<double>> frequencies;
  double max_abs_deviation = 0.0;
  std::uint64_t total_shots = 0;
  std::uint64_t seed = 0;
};

std::vector<ShotRecord> sample(const JointTable& t, std::size_t n, std::uint64_t seed,
                               double support_threshold = kSupportThreshold);

// splitmix64 finalizer applied to seed + (i + 1) * 0x9E3779B97F4A7C15.
std::uint64_t batch_seed(std::uint64_t seed, std::size_t batch);

// Splits n shots into `batches` contiguous batches (sizes differ by at most
// one, larger batches first). Batch i is drawn with batch_seed(seed, i) on its
// own thread; records are concatenated in batch order and renumbered. The
// stream depends on (seed, batches) only. batches == 1 equals sample().
std::vector<ShotRecord> sample_batched(const JointTable& t, std::size_t n, std::uint64_t seed,
                                       std::size_t batches,
                                       double support_threshold = kSupportThreshold);

// Throws ShapeMismatch when a record addresses a cell outside t.
EmpiricalReport empirical_report(const std::vector<ShotRecord>& records, const JointTable& t,
                                 std::uint64_t seed);

// CSV with header shot,left_slot,left_eigenvalue,right_slot,right_eigenvalue.
void write_shots_csv(std::ostream& os, const std::vector<ShotRecord>& records, const JointTable& t);

}  // namespace interlink
