#pragma once

#include <cstdint>
#include <vector>

#include "supermult/channels.hpp"

namespace supermult {

struct OptimizerConfig {
  int num_starts = 20;
  int max_iters = 5000;
  double step_init = 0.1;
  double objective_tol = 1e-12;
  double grad_tol = 1e-9;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct OptResult {
  double best_value = 0.0;
  PureState best_state{ComplexVector::Ones(1)};
  int best_start = 0;
  std::vector<double> per_start_values;
  std::vector<int> iterations_used;
  std::vector<char> converged_flags;

  bool best_converged() const {
    return converged_flags[static_cast<std::size_t>(best_start)] != 0;
  }
  bool any_converged() const;
};

/// || N(|psi><psi|) ||_p for p > 1 or p = infinity.
double output_pnorm_objective(const KrausChannel& c, double p,
                              const PureState& psi);

/// Unconstrained Wirtinger gradient g = p * N^dagger(sigma^(p-1)) psi of
/// tr(sigma^p) with sigma = N(|psi><psi|). Callers project to the sphere
/// tangent space as g - <psi, g> psi. Finite p only; the infinity-norm
/// ascent uses the top-eigenvector direction inside maximize_output_pnorm.
ComplexVector gradient_output_pnorm(const KrausChannel& c, double p,
                                    const PureState& psi);

/// Multistart projected gradient ascent on the unit sphere for the output
/// p-norm. best_value is an exactly evaluated lower bound on nu_p reported
/// as the estimate nu_hat, not a proof of the maximum.
OptResult maximize_output_pnorm(const KrausChannel& c, double p,
                                const OptimizerConfig& cfg);
OptResult maximize_output_pnorm(const RandomUnitaryChannel& c, double p,
                                const OptimizerConfig& cfg);

/// Exhaustive (theta, phi) Bloch-sphere grid for dim-2 channels,
/// psi = (cos(theta/2), e^{i phi} sin(theta/2)). Returns the grid maximum,
/// which trails the true maximum by at most L * (covering radius) with the
/// conservative Lipschitz constant L = 2p (the objective is in fact
/// 2-Lipschitz in psi for every p > 1).
double brute_force_pnorm_d2(const KrausChannel& c, double p, int resolution);

/// d * || N(|psi><psi|) - I/d ||_infinity; the contribution of a single
/// witness to the epsilon certificate.
double deviation_value(const ChannelEvaluator& ev, const ComplexVector& psi);
double deviation_value(const KrausChannel& c, const PureState& psi);

struct EpsilonCertificate {
  double eps_hat = 0.0;  // certified lower bound on the true epsilon
  PureState witness{ComplexVector::Ones(1)};
};

/// eps_hat = d * max over optimized pure states of || N(psi) - I/d ||_inf,
/// ascending on both lambda_max(N(psi) - I/d) and lambda_max(I/d - N(psi)).
/// Restriction to pure states is exact (the objective is convex in rho).
/// "epsilon-randomizing at level eps0" is claimed only as not refuted:
/// eps_hat <= eps0.
EpsilonCertificate certify_epsilon(const KrausChannel& c,
                                   const OptimizerConfig& cfg);
EpsilonCertificate certify_epsilon(const RandomUnitaryChannel& c,
                                   const OptimizerConfig& cfg);

struct EpsnetResult {
  double eps_lower = 0.0;  // best grid value
  double eps_upper = 0.0;  // eps_lower + 2d * covering radius
};

/// Two-sided certificate from an exhaustive pure-state grid, dim 2 or 3
/// only. The deviation objective is 2-Lipschitz in psi (scaled by d), so
/// eps_upper = eps_lower + 2d * delta with delta the grid covering radius
/// in Euclidean state norm.
EpsnetResult epsnet_certify_upper(const KrausChannel& c, int resolution);

}  // namespace supermult
