#include "interlink/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <thread>

#include "interlink/errors.hpp"

namespace interlink {

namespace {

struct Cdf {
  std::vector<Cell> cells;
  std::vector<double> cumulative;
  double total = 0.0;
};

Cdf build_cdf(const JointTable& t, double support_threshold) {
  Cdf cdf;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double p = t(i, j);
      if (p <= support_threshold) continue;
      cdf.total += p;
      cdf.cells.push_back({i, j});
      cdf.cumulative.push_back(cdf.total);
    }
  return cdf;
}

void draw(const Cdf& cdf, std::size_t n, std::uint64_t seed, std::size_t first_index,
          std::vector<ShotRecord>& out) {
  std::mt19937_64 gen(seed);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double target = u * cdf.total;
    auto it = std::upper_bound(cdf.cumulative.begin(), cdf.cumulative.end(), target);
    if (it == cdf.cumulative.end()) --it;
    const Cell c = cdf.cells[static_cast<std::size_t>(it - cdf.cumulative.begin())];
    out.push_back({first_index + k, c.left, c.right});
  }
}

}  // namespace

std::vector<ShotRecord> sample(const JointTable& t, std::size_t n, std::uint64_t seed,
                               double support_threshold) {
  std::vector<ShotRecord> out;
  if (n == 0) return out;
  const Cdf cdf = build_cdf(t, support_threshold);
  if (cdf.cells.empty()) throw ValidationError("joint table has no cell above the support threshold");
  out.reserve(n);
  draw(cdf, n, seed, 0, out);
  return out;
}

std::uint64_t batch_seed(std::uint64_t seed, std::size_t batch) {
  std::uint64_t z = seed + (static_cast<std::uint64_t>(batch) + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<ShotRecord> sample_batched(const JointTable& t, std::size_t n, std::uint64_t seed,
                                       std::size_t batches, double support_threshold) {
  if (batches <= 1) return sample(t, n, seed, support_threshold);
  std::vector<ShotRecord> out;
  if (n == 0) return out;
  const Cdf cdf = build_cdf(t, support_threshold);
  if (cdf.cells.empty()) throw ValidationError("joint table has no cell above the support threshold");

  std::vector<std::vector<ShotRecord>> parts(batches);
  std::vector<std::size_t> offset(batches + 1, 0);
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t size = n / batches + (b < n % batches ? 1 : 0);
    offset[b + 1] = offset[b] + size;
  }
  {
    std::vector<std::jthread> workers;
    for (std::size_t b = 0; b < batches; ++b) {
      workers.emplace_back([&, b] {
        parts[b].reserve(offset[b + 1] - offset[b]);
        draw(cdf, offset[b + 1] - offset[b], batch_seed(seed, b), offset[b], parts[b]);
      });
    }
  }
  out.reserve(n);
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

EmpiricalReport empirical_report(const std::vector<ShotRecord>& records, const JointTable& t,
                                 std::uint64_t seed) {
  EmpiricalReport r;
  r.seed = seed;
  r.total_shots = records.size();
  r.counts.assign(t.rows(), std::vector<std::uint64_t>(t.cols(), 0));
  for (const auto& rec : records) {
    if (rec.left >= t.rows() || rec.right >= t.cols()) {
      throw ShapeMismatch("shot " + std::to_string(rec.shot) + " addresses a cell outside the table");
    }
    ++r.counts[rec.left][rec.right];
  }
  r.frequencies.assign(t.rows(), std::vector<double>(t.cols(), 0.0));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (r.total_shots > 0) {
        r.frequencies[i][j] = static_cast<double>(r.counts[i][j]) / static_cast<double>(r.total_shots);
      }
      r.max_abs_deviation = std::max(r.max_abs_deviation, std::abs(r.frequencies[i][j] - t(i, j)));
    }
  return r;
}

void write_shots_csv(std::ostream& os, const std::vector<ShotRecord>& records, const JointTable& t) {
  os << "shot,left_slot,left_eigenvalue,right_slot,right_eigenvalue\n";
  char lv[32], rv[32];
  for (const auto& rec : records) {
    std::snprintf(lv, sizeof lv, "%.15g", t.left_labels()[rec.left].eigenvalue);
    std::snprintf(rv, sizeof rv, "%.15g", t.right_labels()[rec.right].eigenvalue);
    os << rec.shot << ',' << rec.left << ',' << lv << ',' << rec.right << ',' << rv << '\n';
  }
}

}  // namespace interlink
