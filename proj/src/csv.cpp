#include "growth/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "growth/errors.hpp"

namespace growth {

std::string format_g9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::uint64_t hash_curve(const RecoveryCurve& curve) {
  std::string repr = to_string(curve.source);
  for (const auto& [eta, pd] : curve.points) {
    repr += ';';
    repr += format_g17(eta);
    repr += ',';
    repr += format_g17(pd);
  }
  return fnv1a64(repr);
}

void write_curve_csv(std::ostream& out, const RecoveryCurve& curve,
                     std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "eta,p_d,source\n";
  const std::string source = to_string(curve.source);
  for (const auto& [eta, pd] : curve.points)
    out << format_g9(eta) << ',' << format_g9(pd) << ',' << source << '\n';
}

RecoveryCurve read_curve_csv(std::istream& in) {
  RecoveryCurve curve;
  std::string line;
  bool header_seen = false;
  bool source_set = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("eta,", 0) != 0)
        throw MalformedInput("curve CSV: missing 'eta,...' header");
      header_seen = true;
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    double vals[2];
    for (int i = 0; i < 2; ++i) {
      if (!std::getline(row, cell, ','))
        throw MalformedInput("curve CSV: row with fewer than 2 columns");
      try {
        vals[i] = std::stod(cell);
      } catch (const std::exception&) {
        throw MalformedInput("curve CSV: unparsable number '" + cell + "'");
      }
    }
    if (std::getline(row, cell, ',') && !source_set) {
      source_set = true;
      if (cell == "monte-carlo") curve.source = RecoveryCurve::Source::MonteCarlo;
      else if (cell == "model") curve.source = RecoveryCurve::Source::Model;
      else curve.source = RecoveryCurve::Source::Ode;
    }
    curve.points.emplace_back(vals[0], vals[1]);
  }
  if (!header_seen) throw MalformedInput("curve CSV: empty input");
  return curve;
}

void write_trajectory_csv(std::ostream& out, const OdeTrajectory& trajectory,
                          std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  std::size_t d_c_max = 0;
  for (const auto& s : trajectory.samples)
    d_c_max = std::max(d_c_max, s.c.empty() ? 0 : s.c.size() - 1);
  out << "tau,v_0";
  for (std::size_t d = 1; d <= d_c_max; ++d) out << ",c_" << d;
  out << '\n';
  for (const auto& s : trajectory.samples) {
    out << format_g9(s.tau) << ',' << format_g9(s.v0);
    for (std::size_t d = 1; d <= d_c_max; ++d)
      out << ',' << format_g9(d < s.c.size() ? s.c[d] : 0.0);
    out << '\n';
  }
}

}  // namespace growth
