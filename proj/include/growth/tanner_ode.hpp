#ifndef GROWTH_TANNER_ODE_HPP
#define GROWTH_TANNER_ODE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "growth/degree_distribution.hpp"

namespace growth {

/** Normalized state of the residual Tanner graph during peeling.
 *
 *  v[i] (i >= 1) is the fraction of source symbols that are unrecovered and
 *  carry i edges; v[0] accumulates the decoded fraction and is the recovery
 *  probability.  Source symbols never referenced by any packet (the Poisson
 *  zero class) can never decode and are tracked apart in `untouched`.
 *  c[i] is the number of residual check nodes of degree i per source symbol.
 */
struct TannerState {
  double tau = 0.0;
  std::vector<double> v;  // index 0..d_v_max
  std::vector<double> c;  // index 0..d_c_max ([0] unused)
  double untouched = 0.0;
  std::uint32_t d_v_max = 0;
  std::uint32_t d_c_max = 0;

  double decoded() const { return v.empty() ? 0.0 : v[0]; }
  double edges_variable_side() const;
  double edges_check_side() const;
};

enum class HaltReason : std::uint8_t {
  RippleExhausted,  ///< c_1 hit the halt tolerance: no degree-1 check remains
  AllEdgesRemoved,  ///< every reachable symbol was recovered
  MaxSteps,
};

std::string to_string(HaltReason reason);

struct OdeOptions {
  double step = 1e-3;
  std::uint64_t max_steps = 4'000'000;
  double halt_tolerance = 1e-7;
  /** Use the check-side edge-removal expectation instead of the validated
   *  variable-side one. Kept for comparison; see README for the divergence. */
  bool as_printed = false;
  std::uint32_t sample_stride = 16;
};

struct TrajectorySample {
  double tau;
  double v0;
  std::vector<double> c;
};

struct OdeTrajectory {
  std::vector<TrajectorySample> samples;
  HaltReason halt_reason = HaltReason::MaxSteps;
  double final_pd = 0.0;
  std::uint64_t negative_clamps = 0;
};

/** Initial conditions at reception rate eta: c_i = eta * Omega_i check nodes
 *  per source symbol, variable degrees Poisson with mean eta * Omega'(1).
 */
TannerState initial_state(const DegreeDistribution& dist, double eta);

/** Integrates the peeling system with a classical fixed-step 4th-order
 *  scheme until the ripple empties, all edges are gone, or max_steps.
 */
OdeTrajectory integrate(TannerState state, const OdeOptions& options = {});

struct RecoveryCurve {
  enum class Source : std::uint8_t { Ode, MonteCarlo, Model };
  std::vector<std::pair<double, double>> points;  // (eta, P_d), eta increasing
  Source source = Source::Ode;
};

std::string to_string(RecoveryCurve::Source source);

/** P_d(eta) with a fixed degree distribution across the grid. */
RecoveryCurve recovery_curve(const DegreeDistribution& dist,
                             std::span<const double> eta_grid,
                             const OdeOptions& options = {});

/** P_d(eta) for the Growth code of k symbols: each grid point uses the
 *  distribution scaled to ceil(eta * k) receptions.
 */
RecoveryCurve growth_recovery_curve(std::uint32_t k, std::span<const double> eta_grid,
                                    const OdeOptions& options = {});

}  // namespace growth

#endif
