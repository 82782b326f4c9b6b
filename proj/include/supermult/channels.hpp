#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supermult/linalg.hpp"

namespace supermult {

/// Completely positive trace-preserving map in Kraus form.
/// All operators are dim_out x dim_in and sum_k K_k^dagger K_k = I within 1e-9.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops);

  Eigen::Index dim_in() const { return dim_in_; }
  Eigen::Index dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus_ops() const { return ops_; }
  std::size_t num_kraus() const { return ops_.size(); }
  bool square() const { return dim_in_ == dim_out_; }

 private:
  std::vector<ComplexMatrix> ops_;
  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
};

/// rho -> (1/n) sum_i V_i rho V_i^dagger with uniform weight 1/n.
class RandomUnitaryChannel {
 public:
  explicit RandomUnitaryChannel(std::vector<ComplexMatrix> unitaries);

  Eigen::Index dim() const { return dim_; }
  std::size_t n() const { return unitaries_.size(); }
  double weight() const { return 1.0 / static_cast<double>(n()); }
  const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }

  /// Kraus form with K_i = V_i / sqrt(n).
  KrausChannel to_kraus() const;

 private:
  std::vector<ComplexMatrix> unitaries_;
  Eigen::Index dim_;
};

enum class ChannelKind {
  random_unitary_haar,
  weyl,
  werner_holevo,
  identity,
  explicit_kraus,
};

std::string to_string(ChannelKind kind);

/// Serializable recipe for a channel. n is required iff the kind is
/// random_unitary_haar. CLI syntax: kind:dim[:n[:seed]].
struct ChannelDescriptor {
  ChannelKind kind = ChannelKind::identity;
  Eigen::Index dim = 1;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;

  static ChannelDescriptor parse(const std::string& text);
  std::string to_string() const;
  void validate() const;
};

// ---------------------------------------------------------------------------
// Channel algebra

/// sum_k K_k rho K_k^dagger; the result satisfies the DensityOperator
/// invariants.
DensityOperator apply(const KrausChannel& c, const DensityOperator& rho);
DensityOperator apply(const RandomUnitaryChannel& c, const DensityOperator& rho);

/// Unvalidated action on a raw matrix (hot path for optimizers).
ComplexMatrix apply_matrix(const KrausChannel& c, const ComplexMatrix& m);

/// Heisenberg-picture map sum_k K_k^dagger X K_k. Unital for any
/// trace-preserving channel.
ComplexMatrix adjoint_apply(const KrausChannel& c, const ComplexMatrix& x);

/// Channel with each unitary (or Kraus operator) entrywise conjugated.
RandomUnitaryChannel conjugate(const RandomUnitaryChannel& c);
KrausChannel conjugate(const KrausChannel& c);

/// Kraus list of all pairwise Kronecker products {K (x) L}. Materialized
/// eagerly; guarded at total dimension 256.
KrausChannel tensor(const KrausChannel& a, const KrausChannel& b);
RandomUnitaryChannel tensor(const RandomUnitaryChannel& a,
                            const RandomUnitaryChannel& b);

// ---------------------------------------------------------------------------
// Named constructors

KrausChannel identity_channel(Eigen::Index d);

/// n independent Haar unitaries from streams 0..n-1 of `seed`;
/// deterministic given the seed.
RandomUnitaryChannel random_unitary_channel(Eigen::Index d, std::size_t n,
                                            std::uint64_t seed);

/// The n = d^2 discrete Weyl (generalized Pauli) unitaries X^a Z^b.
/// Sends every input to I/d, so it is exactly 0-randomizing.
RandomUnitaryChannel weyl_channel(Eigen::Index d);

/// Transpose-depolarizing channel rho -> (tr(rho) I - rho^T)/(d-1) realized
/// by the d(d-1)/2 antisymmetric Kraus operators (|i><j| - |j><i|)/sqrt(d-1).
/// The constructor cross-checks the Kraus action against the closed form on
/// a full matrix basis within 1e-10.
KrausChannel werner_holevo(Eigen::Index d);

/// Builds the channel a descriptor names, in Kraus form.
KrausChannel build_channel(const ChannelDescriptor& desc);
/// Same, keeping the random-unitary structure; empty for werner_holevo and
/// explicit_kraus.
std::optional<RandomUnitaryChannel> build_random_unitary(
    const ChannelDescriptor& desc);

// ---------------------------------------------------------------------------
// Diagnostics

struct ChannelDiagnostics {
  double trace_preservation_residual = 0.0;  // || sum K^dag K - I ||_max
  std::vector<double> unitarity_residuals;   // per unitary, if applicable
  bool pass = false;                         // all residuals <= 1e-9
};

ChannelDiagnostics validate(const KrausChannel& c);
ChannelDiagnostics validate(const RandomUnitaryChannel& c);

// ---------------------------------------------------------------------------

/// Repeated-application view of a square channel. For many Kraus operators
/// it caches the dense superoperator (d^2 x d^2), which turns each apply
/// into one matrix-vector product; otherwise it loops over the Kraus list.
class ChannelEvaluator {
 public:
  explicit ChannelEvaluator(const KrausChannel& c);

  Eigen::Index dim_in() const { return channel_->dim_in(); }
  Eigen::Index dim_out() const { return channel_->dim_out(); }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  ComplexMatrix adjoint_apply(const ComplexMatrix& x) const;

 private:
  const KrausChannel* channel_;  // not owned; must outlive the evaluator
  ComplexMatrix superop_;        // empty when the direct path is cheaper
};

}  // namespace supermult
