#include "growth/degree_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "growth/errors.hpp"

namespace growth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_choose(std::uint64_t n, std::uint64_t r) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(r) + 1.0) -
         std::lgamma(static_cast<double>(n - r) + 1.0);
}

// floor(R_j) with R_j = (j*k - 1) / (j + 1), exact in integer arithmetic.
std::uint64_t floor_r(std::uint64_t j, std::uint64_t k) {
  return (j * k - 1) / (j + 1);
}

}  // namespace

DegreeDistribution::DegreeDistribution(std::uint32_t k, std::vector<double> probs)
    : k_(k), probs_(std::move(probs)) {
  if (k == 0) throw InvalidArgument("degree distribution: k must be >= 1");
  if (probs_.size() < 2 || probs_[0] != 0.0)
    throw InvalidArgument("degree distribution: probs must start at degree 1");
  if (probs_.size() - 1 > k_)
    throw InvalidArgument("degree distribution: d_max exceeds k");
  double sum = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw InvalidArgument("degree distribution: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidArgument("degree distribution: probabilities do not sum to 1");
  cdf_.resize(probs_.size());
  double acc = 0.0;
  mean_degree_ = 0.0;
  for (std::size_t d = 0; d < probs_.size(); ++d) {
    acc += probs_[d];
    cdf_[d] = acc;
    mean_degree_ += static_cast<double>(d) * probs_[d];
  }
  cdf_.back() = 1.0;
}

double DegreeDistribution::derivative_at(double x) const {
  double sum = 0.0;
  double xp = 1.0;  // x^(d-1)
  for (std::size_t d = 1; d < probs_.size(); ++d) {
    sum += static_cast<double>(d) * probs_[d] * xp;
    xp *= x;
  }
  return sum;
}

std::uint32_t DegreeDistribution::sample_degree(double u) const {
  auto it = std::upper_bound(cdf_.begin() + 1, cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<std::uint32_t>(it - cdf_.begin());
}

void DegreeDistribution::set_tables(std::vector<double> k_table, std::vector<double> r_table) {
  k_table_ = std::move(k_table);
  r_table_ = std::move(r_table);
}

DegreeDistribution growth_distribution(std::uint32_t k) {
  return growth_distribution(k, k);
}

DegreeDistribution growth_distribution(std::uint32_t k, std::uint64_t received) {
  if (k == 0) throw InvalidArgument("growth_distribution: k must be >= 1");
  if (received == 0) throw InvalidArgument("growth_distribution: received count must be >= 1");
  const double n = static_cast<double>(received);

  std::vector<double> probs{0.0};
  std::vector<double> k_table;
  std::vector<double> r_table;
  double prev_k = 0.0;  // K_{j-1}
  double mass = 0.0;

  for (std::uint64_t j = 1; j <= k; ++j) {
    r_table.push_back((static_cast<double>(j) * k - 1.0) / (static_cast<double>(j) + 1.0));

    // K_j = K_{j-1} + sum over decoded counts i in [floor(R_{j-1}), floor(R_j))
    // of 1 / P(a degree-j symbol is immediately useful at i decoded).
    const std::uint64_t lo = (j == 1) ? 0 : floor_r(j - 1, k);
    const std::uint64_t hi = floor_r(j, k);  // exclusive
    double kj = prev_k;
    const double lck = log_choose(k, j);
    double comp = 0.0;  // Kahan carry
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i < j - 1) {  // degree-j symbols can never be useful this early
        kj = kInf;
        break;
      }
      const double term =
          std::exp(lck - log_choose(i, j - 1) - std::log(static_cast<double>(k - i)));
      const double y = term - comp;
      const double t = kj + y;
      comp = (t - kj) - y;
      kj = t;
    }
    k_table.push_back(kj);

    double w;
    if (kj == kInf) {
      w = std::max(0.0, (n - prev_k) / n);
    } else {
      w = std::max(0.0, std::min((kj - prev_k) / n, (n - prev_k) / n));
    }
    probs.push_back(w);
    mass += w;
    if (kj >= n) break;
    prev_k = kj;
  }

  // Degenerate blocks (k = 1, or received beyond every finite K_j) leave a
  // deficit that belongs to the highest degree.
  if (mass < 1.0 - 1e-12 && probs.size() == static_cast<std::size_t>(k) + 1) {
    probs[k] += 1.0 - mass;
    mass = 1.0;
  }

  while (probs.size() > 2 && probs.back() == 0.0) probs.pop_back();

  if (std::abs(mass - 1.0) > 1e-12) {
    for (double& p : probs) p /= mass;
  }

  DegreeDistribution dist(k, std::move(probs));
  dist.set_tables(std::move(k_table), std::move(r_table));
  return dist;
}

double symbol_decoding_probability(std::uint32_t k, std::uint32_t r, std::uint32_t d) {
  if (k == 0 || r < 1 || r > k || d < 1)
    throw InvalidArgument("symbol_decoding_probability: need k >= 1, 1 <= r <= k, d >= 1");
  if (d > r) return 0.0;
  if (d == 1) return static_cast<double>(k - r + 1) / static_cast<double>(k);
  const double lp = std::log(static_cast<double>(k - r + 1)) +
                    log_choose(r - 1, d - 1) - log_choose(k, d);
  return std::exp(lp);
}

}  // namespace growth
