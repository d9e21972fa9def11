#include "growth/exponential_model.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "growth/csv.hpp"
#include "growth/errors.hpp"

namespace growth {

ExponentialModel growth_reference() { return {0.926854, 1.39361, "growth", 0.0, 0}; }
ExponentialModel r_soliton_as_printed() { return {5e8, -20.0, "r-soliton-as-printed", 0.0, 0}; }
ExponentialModel r_soliton_signfix() { return {5e8, 20.0, "r-soliton-signfix", 0.0, 0}; }

namespace {
double clamped_pl(const ExponentialModel& m, double eta) {
  const double raw = m.lambda * std::exp(-m.mu * eta * eta);
  if (raw < 0.0) return 0.0;
  if (raw > 1.0) return 1.0;
  return raw;
}
}  // namespace

double eval_pl(const ExponentialModel& model, double eta) {
  if (eta < 0.0) throw InvalidArgument("eval_pl: eta must be >= 0");
  return clamped_pl(model, eta);
}

double eval_pd(const ExponentialModel& model, double eta) {
  if (eta < 0.0) throw InvalidArgument("eval_pd: eta must be >= 0");
  return 1.0 - clamped_pl(model, eta);
}

ExponentialModel fit_exponential(const RecoveryCurve& curve, const std::string& label) {
  std::vector<double> xs, ys;
  for (const auto& [eta, pd] : curve.points) {
    const double pl = 1.0 - pd;
    if (pl >= 1e-6 && pl <= 1.0 - 1e-6) {
      xs.push_back(eta * eta);
      ys.push_back(std::log(pl));
    }
  }
  if (xs.size() < 3)
    throw InsufficientData("fit_exponential: need >= 3 points with P_l in (0,1)");

  const double n = static_cast<double>(xs.size());
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xm += xs[i];
    ym += ys[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xm) * (xs[i] - xm);
    sxy += (xs[i] - xm) * (ys[i] - ym);
  }
  if (sxx <= 0.0)
    throw InsufficientData("fit_exponential: eta values are degenerate");

  const double slope = sxy / sxx;
  const double intercept = ym - slope * xm;

  ExponentialModel model;
  model.lambda = std::exp(intercept);
  model.mu = -slope;
  model.label = label;

  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss += r * r;
  }
  model.rms_residual = std::sqrt(ss / n);
  model.source_curve_hash = hash_curve(curve);
  return model;
}

OverheadResult required_overhead(const ExponentialModel& model, double target_pl) {
  if (!(target_pl > 0.0) || !(target_pl < 1.0))
    throw InvalidArgument("required_overhead: target_pl must be in (0,1)");
  if (!(model.mu > 0.0))
    throw UnsupportedModel("required_overhead: model mu must be > 0");
  if (target_pl >= model.lambda) return {0.0, true};
  const double eta = std::sqrt(std::log(model.lambda / target_pl) / model.mu);
  return {std::max(0.0, eta - 1.0), eta <= 1.0};
}

void write_model(std::ostream& out, const ExponentialModel& model) {
  out << "label=" << model.label << '\n';
  out << "lambda=" << format_g17(model.lambda) << '\n';
  out << "mu=" << format_g17(model.mu) << '\n';
  out << "rms_residual=" << format_g17(model.rms_residual) << '\n';
  out << "source_curve_hash=" << model.source_curve_hash << '\n';
}

ExponentialModel read_model(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw MalformedInput("model record: expected key=value, got '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (const char* key : {"label", "lambda", "mu"}) {
    if (!kv.count(key))
      throw MalformedInput(std::string("model record: missing key '") + key + "'");
  }
  ExponentialModel model;
  try {
    model.label = kv["label"];
    model.lambda = std::stod(kv["lambda"]);
    model.mu = std::stod(kv["mu"]);
    if (kv.count("rms_residual")) model.rms_residual = std::stod(kv["rms_residual"]);
    if (kv.count("source_curve_hash"))
      model.source_curve_hash = std::stoull(kv["source_curve_hash"]);
  } catch (const std::exception&) {
    throw MalformedInput("model record: unparsable numeric field");
  }
  if (!(model.lambda > 0.0))
    throw MalformedInput("model record: lambda must be > 0");
  return model;
}

}  // namespace growth
