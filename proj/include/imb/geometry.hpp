#ifndef IMB_GEOMETRY_HPP
#define IMB_GEOMETRY_HPP

#include <Eigen/Dense>

#include <limits>
#include <numbers>
#include <utility>

#include "imb/errors.hpp"

namespace imb {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default tolerances. Arc-length and boundary-distance cuts are absolute
// (the square has perimeter 4); the tangency cut is relative to the circle
// radius so that small Larmor radii keep transversal chords transversal.
inline constexpr double kCornerTol = 1e-9;       // arc length to a vertex
inline constexpr double kBoundaryTol = 1e-9;     // distance to the boundary
inline constexpr double kArcEps = 1e-10;         // radians; exit-point exclusion
inline constexpr double kTangentDiscTol = 1e-12; // disc <= tol * r^2 is a graze
inline constexpr double kRayMinAdvance = 1e-12;  // minimal flight distance

/// Sides of the unit square in counterclockwise order. The arc-length
/// coordinate s runs counterclockwise from the origin corner, so side k
/// covers s in [k, k+1).
enum class Side : int { Bottom = 0, Right = 1, Top = 2, Left = 3 };

Vec2 ccw_tangent(Side side);
Vec2 inward_normal(Side side);
Vec2 side_start(Side side);  ///< corner where the side begins, ccw order
const char* to_string(Side side);

/// Side containing arc-length s in [0,4); corners belong to the later side.
Side side_of_arc(double s);

/// Signed local coordinate of a point along a side, measured ccw from the
/// side's start corner. Equals the arc-length offset within the side.
double side_local(Side side, const Vec2& point);

/// Boundary state: arc length s in [0,4) plus the angle theta in (0,pi)
/// from the side's ccw tangent to the inward velocity.
struct BirkhoffState {
  double s = 0.0;
  double theta = 0.0;
};

struct Ray {
  Vec2 origin;
  Vec2 direction;  // unit
};

/// Counterclockwise circle of the exterior motion. The particle sits at
/// angle phi at center + r*(cos phi, sin phi) and moves along
/// (-sin phi, cos phi). sweep stays NaN until a re-entry fixes it.
struct MagneticArc {
  Vec2 center{0.0, 0.0};
  double radius = 0.0;
  double phi_exit = 0.0;
  double sweep = std::numeric_limits<double>::quiet_NaN();
};

struct ExitHit {
  Vec2 point;
  Side side = Side::Bottom;
  double distance = 0.0;
};

struct Reentry {
  Vec2 point;
  Vec2 direction;
  Side side = Side::Bottom;
  double sweep = 0.0;
  int corners_turned = 0;
};

inline Vec2 rot90ccw(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// Wraps an angle into [0, 2*pi).
double wrap_to_2pi(double angle);

/// Point on the arc at ccw offset delta from the exit angle.
Vec2 arc_point(const MagneticArc& arc, double delta);

/// Boundary point for arc length s in [0,4).
std::pair<Vec2, Side> arc_to_point(double s);

/// Arc length of a point within `tol` of the boundary. Corner points map to
/// their exact integer s. Throws NotOnBoundary otherwise.
double point_to_arc(const Vec2& point, double tol = kBoundaryTol);

/// Inward ray of a boundary state. Throws CornerState when s lies within
/// `corner_tol` of a vertex.
Ray birkhoff_to_ray(const BirkhoffState& state, double corner_tol = kCornerTol);

/// Inverse of birkhoff_to_ray for rays entering the interior. Throws
/// CornerState or NotInward.
BirkhoffState ray_to_birkhoff(const Vec2& point, const Vec2& direction,
                              double corner_tol = kCornerTol);

/// Nearest boundary intersection strictly ahead of the ray origin. Throws
/// CornerHit when the exit lands within `corner_tol` of a vertex.
ExitHit ray_boundary_exit(const Ray& ray, double corner_tol = kCornerTol);

/// Circle of radius r tangent to `direction` at `point`, oriented ccw:
/// center = point + r * rot90ccw(direction).
MagneticArc magnetic_circle(const Vec2& point, const Vec2& direction,
                            double radius);

/// First intersection of the ccw arc with the boundary, ranked by angular
/// offset from phi_exit. The exit point itself is excluded structurally (it
/// is always a root on the exit side) and by the `arc_eps` sweep floor.
/// Throws CornerHit or TangentGraze when the minimal contact is unusable.
Reentry circle_boundary_reentry(const MagneticArc& arc, const Vec2& exit_point,
                                Side exit_side,
                                double corner_tol = kCornerTol,
                                double arc_eps = kArcEps);

}  // namespace imb

#endif  // IMB_GEOMETRY_HPP
