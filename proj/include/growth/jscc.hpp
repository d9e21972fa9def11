#ifndef GROWTH_JSCC_HPP
#define GROWTH_JSCC_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "growth/exponential_model.hpp"

namespace growth {

/** Video distortion model parameters.
 *
 *  Source distortion alpha * R^-beta (R in bits/s, distortion in MSE on 8-bit
 *  samples); loss distortion b * (1 + R / (2 a n_s l_p_bits)) * P_l where
 *  l_p is the packet size in bytes and enters the denominator in bits.
 */
struct VideoModelParams {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double n_s = 0.0;       ///< average video slices per second
  double b = 0.0;
  std::uint32_t l_p = 0;  ///< packet size, bytes
  std::string label;
};

/** Default calibration for a Foreman-CIF-like sequence.  These are
 *  implementation calibration values chosen to land PSNR in a plausible
 *  30-42 dB band, not measurements.
 */
VideoModelParams foreman_cif_default();

/** Flat key=value parameter file (alpha, beta, a, b, n_s, l_p, label). */
VideoModelParams read_params(std::istream& in);
void write_params(std::ostream& out, const VideoModelParams& params);

struct ChannelConfig {
  double capacity_b = 0.0;    ///< channel capacity B, bits/s
  double target_pl = 0.0;     ///< acceptable residual decoding-failure rate
  double actual_loss_pi = 0;  ///< actual channel packet loss, for mismatch runs
};

struct AllocationResult {
  double target_pl = 0.0;
  double epsilon = 0.0;  ///< overhead needed to hit target_pl
  double eta = 0.0;      ///< operating reception rate B / r_star
  double r_star = 0.0;   ///< source rate, bits/s
  double d_star = 0.0;   ///< end-to-end distortion at r_star and target_pl
  double psnr = 0.0;
  bool constrained = false;  ///< bandwidth bound active
};

double source_distortion(const VideoModelParams& params, double rate);
double loss_distortion(const VideoModelParams& params, double rate, double pl);
double end_to_end_distortion(const VideoModelParams& params, double rate, double pl);

/** Stationary point of the end-to-end distortion (closed form). pl > 0. */
double optimal_rate_unconstrained(const VideoModelParams& params, double pl);

double psnr_from_mse(double mse);

/** Joint source/channel allocation: overhead from the model at target_pl,
 *  rate clamped to the capacity budget, channel driven at full capacity.
 */
AllocationResult allocate(const VideoModelParams& params, const ExponentialModel& model,
                          const ChannelConfig& channel);

struct MismatchPoint {
  double pi = 0.0;
  double realized_pl = 0.0;
  double distortion = 0.0;
  double psnr = 0.0;
};

/** Re-evaluates a plan under actual channel loss pi: losses thin the received
 *  symbols to eta * (1 - pi).
 */
MismatchPoint mismatch_eval(const VideoModelParams& params, const ExponentialModel& model,
                            const AllocationResult& planned, double pi);

struct DistortionPoint {
  double eta = 0.0;
  double pl = 0.0;
  double rate = 0.0;
  double psnr = 0.0;
};

/** Residual loss as a function of eta; lets the ideal code (pl = max(0,1-eta))
 *  share the sweep machinery with exponential models.
 */
using LossFunction = std::function<double(double)>;

LossFunction loss_from_model(const ExponentialModel& model);
double ideal_loss(double eta);

/** PSNR across an eta grid with the rate re-optimized per point (capped at
 *  the capacity when the unconstrained optimum exceeds it).
 */
std::vector<DistortionPoint> distortion_curve(const VideoModelParams& params,
                                              const LossFunction& pl_of_eta,
                                              std::span<const double> eta_grid,
                                              double capacity_b);

}  // namespace growth

#endif
