#ifndef GROWTH_CSV_HPP
#define GROWTH_CSV_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "growth/tanner_ode.hpp"

namespace growth {

/** 9 significant digits, the precision frozen for CSV exports. */
std::string format_g9(double value);
/** Round-trip precision, used in model records. */
std::string format_g17(double value);

std::uint64_t fnv1a64(std::string_view bytes);

/** Hash of a curve's points, recorded in fitted model records. */
std::uint64_t hash_curve(const RecoveryCurve& curve);

/** Curve CSV: optional '#' comment line, header (eta,p_d,source), data rows. */
void write_curve_csv(std::ostream& out, const RecoveryCurve& curve,
                     std::string_view comment = {});

/** Reads a curve CSV (header required, comments skipped). The source column
 *  is optional on input.
 */
RecoveryCurve read_curve_csv(std::istream& in);

/** Trajectory CSV: columns (tau, v_0, c_1, ..., c_n). */
void write_trajectory_csv(std::ostream& out, const OdeTrajectory& trajectory,
                          std::string_view comment = {});

}  // namespace growth

#endif
