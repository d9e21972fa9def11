#include "growth/jscc.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>

#include "growth/csv.hpp"
#include "growth/errors.hpp"

namespace growth {

namespace {

void check_params(const VideoModelParams& p) {
  if (!(p.alpha > 0) || !(p.beta > 0) || !(p.a > 0) || !(p.b > 0) || !(p.n_s > 0) ||
      p.l_p == 0)
    throw InvalidArgument("video model: all parameters must be strictly positive");
}

double packet_bits(const VideoModelParams& p) { return 8.0 * p.l_p; }

}  // namespace

VideoModelParams foreman_cif_default() {
  VideoModelParams p;
  p.alpha = 4.0e6;
  p.beta = 0.9;
  p.a = 1.0;
  p.n_s = 540.0;
  p.b = 22.0;
  p.l_p = 1024;
  p.label = "foreman-cif-default";
  return p;
}

VideoModelParams read_params(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw MalformedInput("params: expected key=value, got '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  VideoModelParams p;
  try {
    for (const char* key : {"alpha", "beta", "a", "b", "n_s", "l_p"})
      if (!kv.count(key))
        throw MalformedInput(std::string("params: missing key '") + key + "'");
    p.alpha = std::stod(kv["alpha"]);
    p.beta = std::stod(kv["beta"]);
    p.a = std::stod(kv["a"]);
    p.b = std::stod(kv["b"]);
    p.n_s = std::stod(kv["n_s"]);
    p.l_p = static_cast<std::uint32_t>(std::stoul(kv["l_p"]));
    if (kv.count("label")) p.label = kv["label"];
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::exception&) {
    throw MalformedInput("params: unparsable numeric field");
  }
  check_params(p);
  return p;
}

void write_params(std::ostream& out, const VideoModelParams& p) {
  out << "label=" << p.label << '\n';
  out << "alpha=" << format_g17(p.alpha) << '\n';
  out << "beta=" << format_g17(p.beta) << '\n';
  out << "a=" << format_g17(p.a) << '\n';
  out << "b=" << format_g17(p.b) << '\n';
  out << "n_s=" << format_g17(p.n_s) << '\n';
  out << "l_p=" << p.l_p << '\n';
}

double source_distortion(const VideoModelParams& params, double rate) {
  check_params(params);
  if (!(rate > 0)) throw InvalidArgument("source_distortion: rate must be > 0");
  return params.alpha * std::pow(rate, -params.beta);
}

double loss_distortion(const VideoModelParams& params, double rate, double pl) {
  check_params(params);
  if (!(rate > 0)) throw InvalidArgument("loss_distortion: rate must be > 0");
  if (pl < 0.0 || pl > 1.0) throw InvalidArgument("loss_distortion: pl must be in [0,1]");
  return params.b * (1.0 + rate / (2.0 * params.a * params.n_s * packet_bits(params))) * pl;
}

double end_to_end_distortion(const VideoModelParams& params, double rate, double pl) {
  return source_distortion(params, rate) + loss_distortion(params, rate, pl);
}

double optimal_rate_unconstrained(const VideoModelParams& params, double pl) {
  check_params(params);
  if (!(pl > 0))
    throw InvalidArgument("optimal_rate_unconstrained: no interior minimum at pl = 0");
  const double numerator =
      2.0 * params.a * params.alpha * params.beta * params.n_s * packet_bits(params);
  return std::pow(numerator / (params.b * pl), 1.0 / (1.0 + params.beta));
}

double psnr_from_mse(double mse) {
  return 10.0 * std::log10(255.0 * 255.0 / std::max(mse, 1e-9));
}

AllocationResult allocate(const VideoModelParams& params, const ExponentialModel& model,
                          const ChannelConfig& channel) {
  check_params(params);
  if (!(channel.capacity_b > 0)) throw InvalidArgument("allocate: capacity must be > 0");
  if (!(channel.target_pl > 0) || !(channel.target_pl < 1))
    throw InvalidArgument("allocate: target_pl must be in (0,1)");

  AllocationResult result;
  result.target_pl = channel.target_pl;
  result.epsilon = required_overhead(model, channel.target_pl).epsilon;

  const double unconstrained = optimal_rate_unconstrained(params, channel.target_pl);
  const double budget = channel.capacity_b / (1.0 + result.epsilon);
  result.constrained = unconstrained > budget;
  result.r_star = result.constrained ? budget : unconstrained;
  result.eta = channel.capacity_b / result.r_star;
  result.d_star = end_to_end_distortion(params, result.r_star, channel.target_pl);
  result.psnr = psnr_from_mse(result.d_star);
  return result;
}

MismatchPoint mismatch_eval(const VideoModelParams& params, const ExponentialModel& model,
                            const AllocationResult& planned, double pi) {
  if (pi < 0.0 || pi >= 1.0) throw InvalidArgument("mismatch_eval: pi must be in [0,1)");
  MismatchPoint point;
  point.pi = pi;
  point.realized_pl = eval_pl(model, planned.eta * (1.0 - pi));
  point.distortion = end_to_end_distortion(params, planned.r_star, point.realized_pl);
  point.psnr = psnr_from_mse(point.distortion);
  return point;
}

LossFunction loss_from_model(const ExponentialModel& model) {
  return [model](double eta) { return eval_pl(model, eta); };
}

double ideal_loss(double eta) { return std::max(0.0, 1.0 - eta); }

std::vector<DistortionPoint> distortion_curve(const VideoModelParams& params,
                                              const LossFunction& pl_of_eta,
                                              std::span<const double> eta_grid,
                                              double capacity_b) {
  check_params(params);
  if (!(capacity_b > 0)) throw InvalidArgument("distortion_curve: capacity must be > 0");
  std::vector<DistortionPoint> points;
  points.reserve(eta_grid.size());
  double prev = -1.0;
  for (double eta : eta_grid) {
    if (eta <= prev) throw InvalidArgument("distortion_curve: eta grid must be increasing");
    prev = eta;
    DistortionPoint point;
    point.eta = eta;
    point.pl = pl_of_eta(eta);
    point.rate = point.pl < 1e-12
                     ? capacity_b
                     : std::min(optimal_rate_unconstrained(params, point.pl), capacity_b);
    point.psnr = psnr_from_mse(end_to_end_distortion(params, point.rate, point.pl));
    points.push_back(point);
  }
  return points;
}

}  // namespace growth
