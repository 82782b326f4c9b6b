#pragma once

#include <cstdint>
#include <random>

namespace supermult {

/// Deterministic random source addressed by (master_seed, stream_id).
///
/// Equal (master_seed, stream_id) pairs produce bitwise identical output;
/// distinct stream ids give independent streams, so concurrent tasks each
/// derive their own stream instead of sharing a generator.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t master_seed, std::uint64_t stream_id = 0);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Same master seed, different stream.
  SeededRng stream(std::uint64_t stream_id) const;

  /// Fresh generator for a nested scope (multistart run, experiment cell).
  /// The child's master seed mixes (master_seed, stream_id, tag).
  SeededRng child(std::uint64_t tag) const;

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal deviate. Box-Muller on top of next_u64(), so the
  /// sequence is fixed by the engine and does not depend on the C++
  /// standard library's unspecified distribution algorithms.
  double gaussian();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace supermult
