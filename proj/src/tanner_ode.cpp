#include "growth/tanner_ode.hpp"

#include <cmath>
#include <sstream>

#include "growth/errors.hpp"

namespace growth {

namespace {

constexpr double kNegativeSlack = 1e-9;
constexpr double kDivergenceBound = 10.0;

struct Derivatives {
  std::vector<double> dv;
  std::vector<double> dc;
  bool exhausted = false;  // variable-side edges effectively gone
};

double edge_sum(const std::vector<double>& v) {
  double e = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) e += static_cast<double>(i) * v[i];
  return e;
}

Derivatives rhs(const TannerState& s, const OdeOptions& opt) {
  Derivatives d;
  d.dv.assign(s.v.size(), 0.0);
  d.dc.assign(s.c.size(), 0.0);

  const double eb = edge_sum(s.v);
  if (eb <= 1e-12) {
    d.exhausted = true;
    return d;
  }

  // Expected number of additional edges removed when one symbol is recovered:
  // the recovered symbol is reached through a uniform edge, so its degree is
  // size-biased; the paper's printed equations take this expectation on the
  // check side instead.
  double w2 = 0.0;
  if (opt.as_printed) {
    double ec = 0.0;
    for (std::size_t i = 1; i < s.c.size(); ++i) {
      ec += static_cast<double>(i) * s.c[i];
      w2 += static_cast<double>(i) * static_cast<double>(i - 1) * s.c[i];
    }
    w2 = (ec > 1e-12) ? w2 / ec * eb : 0.0;
  } else {
    for (std::size_t i = 1; i < s.v.size(); ++i)
      w2 += static_cast<double>(i) * static_cast<double>(i - 1) * s.v[i];
  }
  const double a = w2 / eb;

  d.dv[0] = 1.0;  // one symbol recovered per unit time
  for (std::size_t i = 1; i < s.v.size(); ++i)
    d.dv[i] = -static_cast<double>(i) * s.v[i] / eb;

  if (s.c.size() > 1) {
    const double c2 = s.c.size() > 2 ? s.c[2] : 0.0;
    d.dc[1] = -1.0 + a * (2.0 * c2 - s.c[1]) / eb;
    for (std::size_t i = 2; i < s.c.size(); ++i) {
      const double up = (i + 1 < s.c.size()) ? s.c[i + 1] : 0.0;
      d.dc[i] = a * (static_cast<double>(i + 1) * up - static_cast<double>(i) * s.c[i]) / eb;
    }
  }
  return d;
}

void axpy(std::vector<double>& out, const std::vector<double>& x, double h,
          const std::vector<double>& dx) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + h * dx[i];
}

}  // namespace

double TannerState::edges_variable_side() const { return edge_sum(v); }

double TannerState::edges_check_side() const {
  double e = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) e += static_cast<double>(i) * c[i];
  return e;
}

std::string to_string(HaltReason reason) {
  switch (reason) {
    case HaltReason::RippleExhausted: return "ripple-exhausted";
    case HaltReason::AllEdgesRemoved: return "all-edges-removed";
    case HaltReason::MaxSteps: return "max-steps";
  }
  return "unknown";
}

std::string to_string(RecoveryCurve::Source source) {
  switch (source) {
    case RecoveryCurve::Source::Ode: return "ode";
    case RecoveryCurve::Source::MonteCarlo: return "monte-carlo";
    case RecoveryCurve::Source::Model: return "model";
  }
  return "unknown";
}

TannerState initial_state(const DegreeDistribution& dist, double eta) {
  if (!(eta > 0.0)) throw InvalidArgument("initial_state: eta must be > 0");

  TannerState s;
  s.d_c_max = dist.d_max();
  s.c.assign(s.d_c_max + 1, 0.0);
  for (std::uint32_t d = 1; d <= s.d_c_max; ++d) s.c[d] = eta * dist.prob(d);

  const double m = eta * dist.mean_degree();
  s.untouched = std::exp(-m);

  // Poisson(m) masses until the tail drops below 1e-12.
  std::vector<double> pmf{0.0};  // v[0] holds the decoded fraction, initially 0
  double term = std::exp(-m);    // P(X = 0)
  double cum = term;
  std::uint32_t i = 0;
  while (cum < 1.0 - 1e-12 && i < 4096) {
    ++i;
    term *= m / static_cast<double>(i);
    pmf.push_back(term);
    cum += term;
  }
  s.v = std::move(pmf);
  s.d_v_max = i;
  return s;
}

OdeTrajectory integrate(TannerState state, const OdeOptions& options) {
  if (!(options.step > 0.0)) throw InvalidArgument("integrate: step must be > 0");
  const double h = options.step;
  const double tol = options.halt_tolerance;

  OdeTrajectory out;
  auto record = [&](const TannerState& s) {
    out.samples.push_back({s.tau, s.decoded(), s.c});
  };
  record(state);

  auto residual_mass = [](const TannerState& s) {
    double r = 0.0;
    for (std::size_t i = 1; i < s.v.size(); ++i) r += s.v[i];
    return r;
  };

  std::vector<double> v2(state.v.size()), v3(state.v.size()), v4(state.v.size());
  std::vector<double> c2(state.c.size()), c3(state.c.size()), c4(state.c.size());
  TannerState stage = state;

  if (state.c.size() <= 1 || state.c[1] <= tol) {
    out.halt_reason = HaltReason::RippleExhausted;
    out.final_pd = state.decoded();
    return out;
  }

  for (std::uint64_t step = 0; step < options.max_steps; ++step) {
    const double c1_prev = state.c[1];
    const double v0_prev = state.decoded();

    const Derivatives k1 = rhs(state, options);
    if (k1.exhausted) {
      out.halt_reason = HaltReason::AllEdgesRemoved;
      out.final_pd = state.decoded() + residual_mass(state);
      record(state);
      return out;
    }
    axpy(v2, state.v, 0.5 * h, k1.dv);
    axpy(c2, state.c, 0.5 * h, k1.dc);
    stage.v = v2; stage.c = c2;
    const Derivatives k2 = rhs(stage, options);
    axpy(v3, state.v, 0.5 * h, k2.dv);
    axpy(c3, state.c, 0.5 * h, k2.dc);
    stage.v = v3; stage.c = c3;
    const Derivatives k3 = rhs(stage, options);
    axpy(v4, state.v, h, k3.dv);
    axpy(c4, state.c, h, k3.dc);
    stage.v = v4; stage.c = c4;
    const Derivatives k4 = rhs(stage, options);
    if (k2.exhausted || k3.exhausted || k4.exhausted) {
      out.halt_reason = HaltReason::AllEdgesRemoved;
      out.final_pd = state.decoded() + residual_mass(state);
      record(state);
      return out;
    }

    for (std::size_t i = 0; i < state.v.size(); ++i) {
      state.v[i] += h / 6.0 * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
      if (state.v[i] < 0.0) {
        if (state.v[i] < -kNegativeSlack) ++out.negative_clamps;
        state.v[i] = 0.0;
      }
    }
    for (std::size_t i = 2; i < state.c.size(); ++i) {
      state.c[i] += h / 6.0 * (k1.dc[i] + 2.0 * k2.dc[i] + 2.0 * k3.dc[i] + k4.dc[i]);
      if (state.c[i] < 0.0) {
        if (state.c[i] < -kNegativeSlack) ++out.negative_clamps;
        state.c[i] = 0.0;
      }
    }
    state.c[1] += h / 6.0 * (k1.dc[1] + 2.0 * k2.dc[1] + 2.0 * k3.dc[1] + k4.dc[1]);
    state.tau += h;

    for (double x : state.v)
      if (!(std::abs(x) <= kDivergenceBound)) {
        std::ostringstream msg;
        msg << "integrate: variable-side divergence at tau=" << state.tau;
        throw NumericalError(msg.str());
      }
    for (double x : state.c)
      if (!(std::abs(x) <= kDivergenceBound)) {
        std::ostringstream msg;
        msg << "integrate: check-side divergence at tau=" << state.tau;
        throw NumericalError(msg.str());
      }

    if (state.c[1] <= tol) {
      // Interpolate the crossing; the ripple drains transversally.
      const double frac = (c1_prev - tol) / std::max(1e-300, c1_prev - state.c[1]);
      out.halt_reason = HaltReason::RippleExhausted;
      out.final_pd = v0_prev + frac * h;
      state.tau = state.tau - h + frac * h;
      state.v[0] = out.final_pd;
      record(state);
      return out;
    }
    if (edge_sum(state.v) <= tol) {
      out.halt_reason = HaltReason::AllEdgesRemoved;
      out.final_pd = state.decoded() + residual_mass(state);
      record(state);
      return out;
    }

    if ((step + 1) % options.sample_stride == 0) record(state);
  }

  out.halt_reason = HaltReason::MaxSteps;
  out.final_pd = state.decoded();
  record(state);
  return out;
}

RecoveryCurve recovery_curve(const DegreeDistribution& dist,
                             std::span<const double> eta_grid,
                             const OdeOptions& options) {
  if (eta_grid.empty()) throw InvalidArgument("recovery_curve: empty eta grid");
  RecoveryCurve curve;
  curve.source = RecoveryCurve::Source::Ode;
  double prev = 0.0;
  for (double eta : eta_grid) {
    if (!(eta > 0.0) || eta <= prev)
      throw InvalidArgument("recovery_curve: eta grid must be positive and increasing");
    prev = eta;
    try {
      OdeTrajectory traj = integrate(initial_state(dist, eta), options);
      curve.points.emplace_back(eta, traj.final_pd);
    } catch (const NumericalError& err) {
      std::ostringstream msg;
      msg << "recovery_curve at eta=" << eta << ": " << err.what();
      throw NumericalError(msg.str());
    }
  }
  return curve;
}

RecoveryCurve growth_recovery_curve(std::uint32_t k, std::span<const double> eta_grid,
                                    const OdeOptions& options) {
  if (eta_grid.empty()) throw InvalidArgument("growth_recovery_curve: empty eta grid");
  RecoveryCurve curve;
  curve.source = RecoveryCurve::Source::Ode;
  double prev = 0.0;
  for (double eta : eta_grid) {
    if (!(eta > 0.0) || eta <= prev)
      throw InvalidArgument("growth_recovery_curve: eta grid must be positive and increasing");
    prev = eta;
    const auto received =
        static_cast<std::uint64_t>(std::ceil(eta * static_cast<double>(k)));
    const DegreeDistribution dist = growth_distribution(k, std::max<std::uint64_t>(1, received));
    try {
      OdeTrajectory traj = integrate(initial_state(dist, eta), options);
      curve.points.emplace_back(eta, traj.final_pd);
    } catch (const NumericalError& err) {
      std::ostringstream msg;
      msg << "growth_recovery_curve at eta=" << eta << ": " << err.what();
      throw NumericalError(msg.str());
    }
  }
  return curve;
}

}  // namespace growth
