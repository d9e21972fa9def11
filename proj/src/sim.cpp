#include "growth/sim.hpp"

#include <cmath>

#include "growth/errors.hpp"
#include "growth/prng.hpp"

namespace growth {

std::vector<EncodedPacket> erase(const ChannelModel& channel,
                                 std::span<const EncodedPacket> packets) {
  if (channel.loss_pi < 0.0 || channel.loss_pi >= 1.0)
    throw InvalidArgument("erase: loss_pi must be in [0,1)");
  SplitMix64 rng(channel.seed);
  std::vector<EncodedPacket> survivors;
  survivors.reserve(packets.size());
  for (const EncodedPacket& p : packets) {
    if (rng.next_double() >= channel.loss_pi) survivors.push_back(p);
  }
  return survivors;
}

TrialReport monte_carlo_point(const DegreeDistribution& dist, double eta,
                              std::uint32_t trials, DecoderMode mode,
                              std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("monte_carlo_point: trials must be >= 1");
  if (!(eta > 0.0)) throw InvalidArgument("monte_carlo_point: eta must be > 0");
  const std::uint32_t k = dist.k();
  const auto packet_count =
      static_cast<std::uint64_t>(std::ceil(eta * static_cast<double>(k)));
  constexpr std::uint32_t kSymbolSize = 8;

  double sum = 0.0, sumsq = 0.0;
  std::uint32_t full = 0;
  for (std::uint32_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_stream_seed(seed, t);
    SplitMix64 rng(trial_seed);
    std::vector<std::uint8_t> data(static_cast<std::size_t>(k) * kSymbolSize);
    for (auto& byte : data) byte = static_cast<std::uint8_t>(rng.next() & 0xFF);
    SourceBlock block(k, kSymbolSize, std::move(data));

    DecoderState decoder(dist, kSymbolSize, mode);
    for (std::uint64_t j = 0; j < packet_count; ++j)
      decoder.push(encode(block, dist, derive_stream_seed(trial_seed, j)));

    const double fraction =
        static_cast<double>(decoder.recovered_count()) / static_cast<double>(k);
    sum += fraction;
    sumsq += fraction * fraction;
    if (decoder.complete()) ++full;
  }

  TrialReport report;
  report.k = k;
  report.eta = eta;
  report.trials = trials;
  report.mode = mode;
  report.seed = seed;
  report.mean_pd = sum / trials;
  const double var = trials > 1
      ? std::max(0.0, (sumsq - sum * sum / trials) / (trials - 1.0))
      : 0.0;
  report.std_pd = std::sqrt(var);
  report.full_recovery_rate = static_cast<double>(full) / trials;
  return report;
}

namespace {

RecoveryCurve sweep(std::span<const double> eta_grid, std::uint32_t trials,
                    DecoderMode mode, std::uint64_t seed,
                    std::vector<TrialReport>* reports,
                    const std::function<DegreeDistribution(double)>& dist_at) {
  if (eta_grid.empty()) throw InvalidArgument("monte_carlo_curve: empty eta grid");
  RecoveryCurve curve;
  curve.source = RecoveryCurve::Source::MonteCarlo;
  double prev = 0.0;
  std::uint64_t point_index = 0;
  for (double eta : eta_grid) {
    if (!(eta > 0.0) || eta <= prev)
      throw InvalidArgument("monte_carlo_curve: eta grid must be positive and increasing");
    prev = eta;
    const TrialReport report = monte_carlo_point(
        dist_at(eta), eta, trials, mode, derive_stream_seed(seed, point_index++));
    curve.points.emplace_back(eta, report.mean_pd);
    if (reports) reports->push_back(report);
  }
  return curve;
}

}  // namespace

RecoveryCurve monte_carlo_curve(const DegreeDistribution& dist,
                                std::span<const double> eta_grid, std::uint32_t trials,
                                DecoderMode mode, std::uint64_t seed,
                                std::vector<TrialReport>* reports) {
  return sweep(eta_grid, trials, mode, seed, reports,
               [&dist](double) { return dist; });
}

RecoveryCurve growth_monte_carlo_curve(std::uint32_t k, std::span<const double> eta_grid,
                                       std::uint32_t trials, DecoderMode mode,
                                       std::uint64_t seed,
                                       std::vector<TrialReport>* reports) {
  return sweep(eta_grid, trials, mode, seed, reports, [k](double eta) {
    const auto received =
        static_cast<std::uint64_t>(std::ceil(eta * static_cast<double>(k)));
    return growth_distribution(k, std::max<std::uint64_t>(1, received));
  });
}

std::size_t oracle_decode(std::uint32_t k,
                          std::span<const std::vector<std::uint32_t>> packets) {
  if (k == 0 || k > 64) throw InvalidArgument("oracle_decode: k must be in [1,64]");

  std::vector<std::uint64_t> rows;
  rows.reserve(packets.size());
  for (const auto& neighbors : packets) {
    std::uint64_t row = 0;
    for (std::uint32_t idx : neighbors) {
      if (idx >= k) throw InvalidArgument("oracle_decode: neighbor index out of range");
      row |= (1ULL << idx);
    }
    if (row != 0) rows.push_back(row);
  }

  // Gauss-Jordan to reduced row-echelon form.
  std::vector<std::uint64_t> basis;  // one row per pivot, descending pivot order
  for (std::uint64_t row : rows) {
    for (std::uint64_t b : basis) {
      const auto pivot = static_cast<std::uint64_t>(63 - __builtin_clzll(b));
      if (row & (1ULL << pivot)) row ^= b;
    }
    if (row == 0) continue;
    const auto pivot = static_cast<std::uint64_t>(63 - __builtin_clzll(row));
    for (std::uint64_t& b : basis) {
      if (b & (1ULL << pivot)) b ^= row;
    }
    basis.push_back(row);
  }

  std::size_t determined = 0;
  for (std::uint64_t b : basis) {
    if (__builtin_popcountll(b) == 1) ++determined;
  }
  return determined;
}

std::size_t oracle_decode(const DegreeDistribution& dist,
                          std::span<const EncodedPacket> packets) {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(packets.size());
  for (const EncodedPacket& p : packets) {
    if (p.k != dist.k()) throw CorruptPacket("oracle_decode: packet k mismatch");
    rows.push_back(regenerate_neighbors(dist, p.esi));
  }
  return oracle_decode(dist.k(), rows);
}

}  // namespace growth
