#ifndef GROWTH_DEGREE_DISTRIBUTION_HPP
#define GROWTH_DEGREE_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

namespace growth {

/** Probability mass over encoded-symbol degrees 1..d_max for a block of k
 *  source symbols.  Immutable after construction and safe to share across
 *  threads.
 *
 *  For Growth distributions the intermediate tables are retained: K[j] is the
 *  expected number of received symbols needed to recover R[j] source symbols,
 *  and the degree-j probability is the (clipped) increment (K[j]-K[j-1])/n
 *  where n is the normalizing reception count.
 */
class DegreeDistribution {
public:
  /** probs[d] = probability of degree d; probs[0] must be 0. */
  DegreeDistribution(std::uint32_t k, std::vector<double> probs);

  std::uint32_t k() const { return k_; }
  std::uint32_t d_max() const { return static_cast<std::uint32_t>(probs_.size()) - 1; }

  double prob(std::uint32_t d) const { return d < probs_.size() ? probs_[d] : 0.0; }
  const std::vector<double>& probs() const { return probs_; }

  /** Mean degree Omega'(1). */
  double mean_degree() const { return mean_degree_; }

  /** Omega'(x) = sum_d d * Omega_d * x^(d-1). */
  double derivative_at(double x) const;

  /** Inverse-CDF sample: smallest d with u < CDF(d), for u in [0,1). */
  std::uint32_t sample_degree(double u) const;

  /** Expected receptions K_j, j = 1..; +inf marks an unreachable phase. */
  const std::vector<double>& expected_receptions() const { return k_table_; }
  /** Recoverable-symbol thresholds R_j = (jk-1)/(j+1). */
  const std::vector<double>& recoverable() const { return r_table_; }

  void set_tables(std::vector<double> k_table, std::vector<double> r_table);

private:
  std::uint32_t k_;
  std::vector<double> probs_;  // index by degree, [0] = 0
  std::vector<double> cdf_;    // cdf_[d] = P(degree <= d)
  double mean_degree_;
  std::vector<double> k_table_;
  std::vector<double> r_table_;
};

/** Growth degree distribution for k source symbols, normalized over the first
 *  k received symbols (the static reading of the construction).
 */
DegreeDistribution growth_distribution(std::uint32_t k);

/** Growth degree distribution normalized over the first `received` symbols of
 *  the transmission schedule.  The degree mix a receiver sees depends on how
 *  deep into the schedule it listens, so analysis and simulation at reception
 *  rate eta use received = ceil(eta * k).
 */
DegreeDistribution growth_distribution(std::uint32_t k, std::uint64_t received);

/** Probability that a newly received symbol of degree d is immediately
 *  decodable when r symbols have already been received, for a block of k
 *  source symbols.  Three-case closed form; overflow-safe via log-gamma.
 */
double symbol_decoding_probability(std::uint32_t k, std::uint32_t r, std::uint32_t d);

}  // namespace growth

#endif
