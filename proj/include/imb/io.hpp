#ifndef IMB_IO_HPP
#define IMB_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "imb/analysis.hpp"

namespace imb {

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double value);

/// Orbit CSV. One row per application of the map:
///   n,s_exit,theta_exit,x_exit,y_exit,side_exit,
///   s_entry,theta_entry,x_entry,y_entry,side_entry,
///   corners_turned,sweep,chord_length
/// theta_exit is the inward angle of the reversed flight direction at the
/// exit point. Trailing comment lines carry the seed and, for truncated
/// orbits, the termination reason.
void write_orbit_csv(std::ostream& out, const OrbitTrace& trace,
                     std::uint64_t seed);

/// Portrait CSV: orbit_id,n,s,u with the same trailing comments.
void write_portrait_csv(std::ostream& out, const PortraitResult& portrait,
                        std::uint64_t seed);

/// Trajectory drawing: square outline, interior chords, exterior arcs and
/// entry/exit dots. World coordinates live inside a y-up matrix transform,
/// so path data can be read back in square coordinates.
void write_trajectory_svg(std::ostream& out, const OrbitTrace& trace,
                          std::uint64_t seed);

/// Scatter of (s, u) over [0,4] x [-1,1] with annotated axes.
void write_portrait_svg(std::ostream& out, const PortraitResult& portrait,
                        std::uint64_t seed);

}  // namespace imb

#endif  // IMB_IO_HPP
