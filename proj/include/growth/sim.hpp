#ifndef GROWTH_SIM_HPP
#define GROWTH_SIM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "growth/decoder.hpp"
#include "growth/degree_distribution.hpp"
#include "growth/packet.hpp"
#include "growth/tanner_ode.hpp"

namespace growth {

/** i.i.d. Bernoulli erasure channel, deterministic given its seed. */
struct ChannelModel {
  double loss_pi = 0.0;
  std::uint64_t seed = 0;
};

/** Drops each packet independently with probability loss_pi; order kept. */
std::vector<EncodedPacket> erase(const ChannelModel& channel,
                                 std::span<const EncodedPacket> packets);

struct TrialReport {
  std::uint32_t k = 0;
  double eta = 0.0;
  std::uint32_t trials = 0;
  double mean_pd = 0.0;
  double std_pd = 0.0;  ///< sample standard deviation of per-trial recovery
  double full_recovery_rate = 0.0;
  DecoderMode mode = DecoderMode::D;
  std::uint64_t seed = 0;
};

/** `trials` independent encode/decode experiments with ceil(eta * k) packets
 *  each.  Per-trial streams derive from the master seed (see docs/cli.md), so
 *  identical inputs reproduce identical reports.
 */
TrialReport monte_carlo_point(const DegreeDistribution& dist, double eta,
                              std::uint32_t trials, DecoderMode mode,
                              std::uint64_t seed);

/** Sweep with a fixed distribution; reports per point if requested. */
RecoveryCurve monte_carlo_curve(const DegreeDistribution& dist,
                                std::span<const double> eta_grid, std::uint32_t trials,
                                DecoderMode mode, std::uint64_t seed,
                                std::vector<TrialReport>* reports = nullptr);

/** Growth-code sweep: each grid point uses the distribution scaled to
 *  ceil(eta * k) receptions, matching the analysis module.
 */
RecoveryCurve growth_monte_carlo_curve(std::uint32_t k, std::span<const double> eta_grid,
                                       std::uint32_t trials, DecoderMode mode,
                                       std::uint64_t seed,
                                       std::vector<TrialReport>* reports = nullptr);

/** Maximum-likelihood erasure decoding by elimination over GF(2): the number
 *  of source symbols uniquely determined by the given neighbor sets.  Test
 *  oracle; k <= 64.
 */
std::size_t oracle_decode(std::uint32_t k,
                          std::span<const std::vector<std::uint32_t>> packets);

/** Convenience overload regenerating neighbor sets from packet ESIs. */
std::size_t oracle_decode(const DegreeDistribution& dist,
                          std::span<const EncodedPacket> packets);

}  // namespace growth

#endif
