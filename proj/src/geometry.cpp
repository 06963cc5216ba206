#include "imb/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

namespace imb {

namespace {

struct SideLine {
  int axis;   // 0: line x = value, 1: line y = value
  double value;
};

// Indexed by Side.
constexpr std::array<SideLine, 4> kSideLines = {{
    {1, 0.0},  // Bottom
    {0, 1.0},  // Right
    {1, 1.0},  // Top
    {0, 0.0},  // Left
}};

const std::array<Vec2, 4> kTangents = {
    Vec2(1.0, 0.0), Vec2(0.0, 1.0), Vec2(-1.0, 0.0), Vec2(0.0, -1.0)};
const std::array<Vec2, 4> kStarts = {
    Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(1.0, 1.0), Vec2(0.0, 1.0)};

std::string format_point(const Vec2& p) {
  std::ostringstream os;
  os << "(" << p.x() << ", " << p.y() << ")";
  return os.str();
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotOnBoundary: return "NotOnBoundary";
    case ErrorKind::CornerState:   return "CornerState";
    case ErrorKind::NotInward:     return "NotInward";
    case ErrorKind::CornerHit:     return "CornerHit";
    case ErrorKind::TangentGraze:  return "TangentGraze";
    case ErrorKind::OutOfRange:    return "OutOfRange";
    case ErrorKind::InvalidSlope:  return "InvalidSlope";
  }
  return "UnknownError";
}

Vec2 ccw_tangent(Side side) { return kTangents[static_cast<int>(side)]; }

Vec2 inward_normal(Side side) { return rot90ccw(ccw_tangent(side)); }

Vec2 side_start(Side side) { return kStarts[static_cast<int>(side)]; }

const char* to_string(Side side) {
  switch (side) {
    case Side::Bottom: return "Bottom";
    case Side::Right:  return "Right";
    case Side::Top:    return "Top";
    case Side::Left:   return "Left";
  }
  return "InvalidSide";
}

Side side_of_arc(double s) {
  if (s < 0.0 || s >= 4.0)
    throw std::invalid_argument("arc length outside [0,4)");
  return static_cast<Side>(static_cast<int>(std::floor(s)));
}

double side_local(Side side, const Vec2& point) {
  return (point - side_start(side)).dot(ccw_tangent(side));
}

double wrap_to_2pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

Vec2 arc_point(const MagneticArc& arc, double delta) {
  const double phi = arc.phi_exit + delta;
  return arc.center + arc.radius * Vec2(std::cos(phi), std::sin(phi));
}

std::pair<Vec2, Side> arc_to_point(double s) {
  const Side side = side_of_arc(s);
  const double local = s - std::floor(s);
  return {side_start(side) + local * ccw_tangent(side), side};
}

double point_to_arc(const Vec2& point, double tol) {
  // corners map to their exact integer arc length
  for (int k = 0; k < 4; ++k) {
    if ((point - kStarts[k]).norm() <= tol) return static_cast<double>(k);
  }
  double best_dist = std::numeric_limits<double>::infinity();
  int best_side = 0;
  double best_local = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double raw = (point - kStarts[k]).dot(kTangents[k]);
    const double local = std::clamp(raw, 0.0, 1.0);
    const Vec2 nearest = kStarts[k] + local * kTangents[k];
    const double dist = (point - nearest).norm();
    if (dist < best_dist) {
      best_dist = dist;
      best_side = k;
      best_local = local;
    }
  }
  if (best_dist > tol)
    throw MapError(ErrorKind::NotOnBoundary,
                   "point " + format_point(point) + " is not on the boundary");
  double s = best_side + best_local;
  if (s >= 4.0) s -= 4.0;
  return s;
}

Ray birkhoff_to_ray(const BirkhoffState& state, double corner_tol) {
  if (state.theta <= 0.0 || state.theta >= kPi)
    throw std::invalid_argument("theta outside (0,pi)");
  const double nearest = std::round(state.s);
  if (std::abs(state.s - nearest) <= corner_tol)
    throw MapError(ErrorKind::CornerState,
                   "arc length " + std::to_string(state.s) + " is at a corner");
  auto [point, side] = arc_to_point(state.s);
  const Vec2 direction = Eigen::Rotation2Dd(state.theta) * ccw_tangent(side);
  return {point, direction};
}

BirkhoffState ray_to_birkhoff(const Vec2& point, const Vec2& direction,
                              double corner_tol) {
  const double s = point_to_arc(point);
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= corner_tol)
    throw MapError(ErrorKind::CornerState,
                   "point " + format_point(point) + " is at a corner");
  const Vec2 tangent = ccw_tangent(side_of_arc(s));
  const double cross = tangent.x() * direction.y() - tangent.y() * direction.x();
  const double dot = tangent.dot(direction);
  if (cross <= 0.0)
    throw MapError(ErrorKind::NotInward,
                   "direction at " + format_point(point) +
                       " does not enter the interior");
  return {s, std::atan2(cross, dot)};
}

ExitHit ray_boundary_exit(const Ray& ray, double corner_tol) {
  double best_t = std::numeric_limits<double>::infinity();
  Vec2 best_point;
  int best_side = -1;
  double best_local = 0.0;
  for (int k = 0; k < 4; ++k) {
    const auto [axis, value] = kSideLines[k];
    const double denom = ray.direction[axis];
    if (denom == 0.0) continue;
    const double t = (value - ray.origin[axis]) / denom;
    if (t <= kRayMinAdvance || t >= best_t) continue;
    Vec2 point = ray.origin + t * ray.direction;
    point[axis] = value;  // snap onto the side line
    const double local = side_local(static_cast<Side>(k), point);
    if (local < -corner_tol || local > 1.0 + corner_tol) continue;
    best_t = t;
    best_point = point;
    best_side = k;
    best_local = local;
  }
  if (best_side < 0)
    throw std::logic_error("ray does not reach the boundary");
  if (best_local <= corner_tol || best_local >= 1.0 - corner_tol)
    throw MapError(ErrorKind::CornerHit,
                   "flight exits at vertex-adjacent point " +
                       format_point(best_point));
  return {best_point, static_cast<Side>(best_side), best_t};
}

MagneticArc magnetic_circle(const Vec2& point, const Vec2& direction,
                            double radius) {
  MagneticArc arc;
  arc.center = point + radius * rot90ccw(direction);
  arc.radius = radius;
  arc.phi_exit =
      std::atan2(point.y() - arc.center.y(), point.x() - arc.center.x());
  return arc;
}

Reentry circle_boundary_reentry(const MagneticArc& arc, const Vec2& exit_point,
                                Side exit_side, double corner_tol,
                                double arc_eps) {
  struct Candidate {
    double delta;
    Vec2 point;
    int side;
    double local;
    double phi;
    bool tangent;
  };
  const double r = arc.radius;
  std::vector<Candidate> candidates;
  for (int k = 0; k < 4; ++k) {
    const auto [axis, value] = kSideLines[k];
    const int other = 1 - axis;
    const double line_gap = value - arc.center[axis];
    const double disc = r * r - line_gap * line_gap;
    if (disc < 0.0) continue;
    const bool tangent = disc <= kTangentDiscTol * r * r;
    const double off = std::sqrt(std::max(disc, 0.0));
    double roots[2] = {arc.center[other] + off, arc.center[other] - off};
    int n_roots = tangent ? 1 : 2;
    if (tangent) roots[0] = arc.center[other];
    if (k == static_cast<int>(exit_side)) {
      // The exit point is always a root on its own line; drop it by
      // proximity instead of relying on the sweep floor.
      if (tangent) {
        n_roots = 0;
      } else if (std::abs(roots[0] - exit_point[other]) <
                 std::abs(roots[1] - exit_point[other])) {
        roots[0] = roots[1];
        n_roots = 1;
      } else {
        n_roots = 1;
      }
    }
    for (int i = 0; i < n_roots; ++i) {
      Vec2 point;
      point[axis] = value;
      point[other] = roots[i];
      const double local = side_local(static_cast<Side>(k), point);
      if (local < -corner_tol || local > 1.0 + corner_tol) continue;
      const double phi =
          std::atan2(point.y() - arc.center.y(), point.x() - arc.center.x());
      double delta = wrap_to_2pi(phi - arc.phi_exit);
      if (delta <= arc_eps) delta += kTwoPi;
      candidates.push_back({delta, point, k, local, phi, tangent});
    }
  }
  if (candidates.empty())
    throw std::logic_error("arc finds no boundary re-entry");
  const auto& hit = *std::min_element(
      candidates.begin(), candidates.end(),
      [](const Candidate& a, const Candidate& b) { return a.delta < b.delta; });
  if (hit.local <= corner_tol || hit.local >= 1.0 - corner_tol)
    throw MapError(ErrorKind::CornerHit,
                   "arc re-enters at vertex-adjacent point " +
                       format_point(hit.point));
  if (hit.tangent)
    throw MapError(ErrorKind::TangentGraze,
                   "arc grazes the boundary tangentially at " +
                       format_point(hit.point));
  Reentry reentry;
  reentry.point = hit.point;
  reentry.direction = Vec2(-std::sin(hit.phi), std::cos(hit.phi));
  reentry.side = static_cast<Side>(hit.side);
  reentry.sweep = hit.delta;
  reentry.corners_turned = (hit.side - static_cast<int>(exit_side) + 4) % 4;
  return reentry;
}

}  // namespace imb
