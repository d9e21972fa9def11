#ifndef GROWTH_EXPONENTIAL_MODEL_HPP
#define GROWTH_EXPONENTIAL_MODEL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "growth/tanner_ode.hpp"

namespace growth {

/** Two-parameter recovery model P_d(eta) = 1 - lambda * exp(-mu * eta^2).
 *  Immutable; all evaluations clamp to valid probabilities.
 */
struct ExponentialModel {
  double lambda = 0.0;
  double mu = 0.0;
  std::string label;
  double rms_residual = 0.0;          ///< RMS of log-space fit residuals
  std::uint64_t source_curve_hash = 0;
};

/** Reference Growth-code model constants. */
ExponentialModel growth_reference();
/** LT/R-Soliton constants exactly as published; explodes under the decay
 *  convention and clamps to P_l = 1 for every eta.
 */
ExponentialModel r_soliton_as_printed();
/** Same constants with the sign flipped into the decay convention, giving the
 *  expected waterfall.  Both readings are shipped; neither is guessed away.
 */
ExponentialModel r_soliton_signfix();

/** Symbol recovery probability at reception rate eta (clamped to [0,1]). */
double eval_pd(const ExponentialModel& model, double eta);
/** Residual decoding-failure probability; eval_pd + eval_pl == 1 exactly. */
double eval_pl(const ExponentialModel& model, double eta);

/** Log-linear least squares: ln P_l = ln lambda - mu * eta^2 over curve
 *  points with P_l inside [1e-6, 1-1e-6].  Needs >= 3 usable points.
 */
ExponentialModel fit_exponential(const RecoveryCurve& curve, const std::string& label);

struct OverheadResult {
  double epsilon = 0.0;
  bool met_at_zero = false;  ///< target already satisfied with no overhead
};

/** Overhead epsilon such that eval_pl(1 + epsilon) == target_pl, clamped at
 *  zero when the target is already met.  Requires mu > 0.
 */
OverheadResult required_overhead(const ExponentialModel& model, double target_pl);

/** Key-value text record: label, lambda, mu, rms_residual, source_curve_hash. */
void write_model(std::ostream& out, const ExponentialModel& model);
ExponentialModel read_model(std::istream& in);

}  // namespace growth

#endif
