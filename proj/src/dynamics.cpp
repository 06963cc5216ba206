#include "imb/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace imb {

namespace {

Vec2 mirrored(const Vec2& v) { return Vec2(v.y(), v.x()); }

// Reflection across the diagonal y = x maps the square to itself and swaps
// ccw and cw orientation.
Side mirrored(Side side) {
  switch (side) {
    case Side::Bottom: return Side::Left;
    case Side::Left:   return Side::Bottom;
    case Side::Right:  return Side::Top;
    case Side::Top:    return Side::Right;
  }
  throw std::invalid_argument("invalid side");
}

void require_unit_interval(double value, const char* what) {
  if (!(value > 0.0 && value < 1.0))
    throw MapError(ErrorKind::OutOfRange,
                   std::string(what) + " = " + std::to_string(value) +
                       " leaves (0,1)");
}

}  // namespace

SimConfig SimConfig::from_field(double b) {
  SimConfig cfg;
  cfg.field_b = b;
  cfg.radius = 1.0 / b;
  cfg.validate();
  return cfg;
}

SimConfig SimConfig::from_radius(double r) {
  SimConfig cfg;
  cfg.radius = r;
  cfg.field_b = 1.0 / r;
  cfg.validate();
  return cfg;
}

void SimConfig::validate() const {
  if (!(field_b > 0.0) || !(radius > 0.0))
    throw std::invalid_argument("field magnitude and radius must be positive");
  if (std::abs(field_b * radius - 1.0) > 1e-12)
    throw std::invalid_argument("radius must equal 1/B");
  if (!(corner_tol > 0.0) || !(arc_eps > 0.0) || !(period_tol > 0.0))
    throw std::invalid_argument("tolerances must be positive");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
}

StepResult step_F(const BirkhoffState& state, const SimConfig& cfg) {
  const Ray ray = birkhoff_to_ray(state, cfg.corner_tol);
  const ExitHit exit = ray_boundary_exit(ray, cfg.corner_tol);
  MagneticArc arc = magnetic_circle(exit.point, ray.direction, cfg.radius);
  const Reentry reentry = circle_boundary_reentry(arc, exit.point, exit.side,
                                                  cfg.corner_tol, cfg.arc_eps);
  arc.sweep = reentry.sweep;

  BounceRecord record;
  record.exit_state = ray_to_birkhoff(exit.point, -ray.direction, cfg.corner_tol);
  record.entry_state =
      ray_to_birkhoff(reentry.point, reentry.direction, cfg.corner_tol);
  record.exit_side = exit.side;
  record.entry_side = reentry.side;
  record.exit_point = exit.point;
  record.entry_point = reentry.point;
  record.corners_turned = reentry.corners_turned;
  record.arc = arc;
  record.chord_length = exit.distance;
  return {record.entry_state, record};
}

BirkhoffState inverse_F(const BirkhoffState& state, const SimConfig& cfg) {
  // Reversed motion leaves the entry point outward along the arc, clockwise.
  // Mirror, run the ccw re-entry engine, mirror back, then fly the chord.
  const Ray ray = birkhoff_to_ray(state, cfg.corner_tol);
  const Vec2 start_m = mirrored(ray.origin);
  const Vec2 out_m = mirrored(Vec2(-ray.direction));
  const Side side_m = mirrored(side_of_arc(state.s));
  const MagneticArc arc = magnetic_circle(start_m, out_m, cfg.radius);
  const Reentry reentry = circle_boundary_reentry(arc, start_m, side_m,
                                                  cfg.corner_tol, cfg.arc_eps);
  const Vec2 chord_start = mirrored(reentry.point);
  const Vec2 chord_dir = mirrored(reentry.direction);
  const ExitHit back = ray_boundary_exit({chord_start, chord_dir}, cfg.corner_tol);
  return ray_to_birkhoff(back.point, -chord_dir, cfg.corner_tol);
}

BirkhoffState classical_step(const BirkhoffState& state, double corner_tol) {
  const Ray ray = birkhoff_to_ray(state, corner_tol);
  const ExitHit exit = ray_boundary_exit(ray, corner_tol);
  const Vec2 tangent = ccw_tangent(exit.side);
  const Vec2 reflected = 2.0 * ray.direction.dot(tangent) * tangent - ray.direction;
  return ray_to_birkhoff(exit.point, reflected, corner_tol);
}

LocalBounce closed_form_right(double s, double theta, double field_b) {
  require_unit_interval(s, "s");
  if (!(theta > 0.0 && theta < kPi / 2.0))
    throw MapError(ErrorKind::OutOfRange, "theta outside (0,pi/2)");
  LocalBounce bounce;
  bounce.exit_local = (1.0 - s) * std::tan(theta);
  bounce.entry_local = bounce.exit_local + 2.0 / field_b * std::cos(theta);
  bounce.entry_theta = kPi / 2.0 - theta;
  require_unit_interval(bounce.exit_local, "exit height");
  require_unit_interval(bounce.entry_local, "entry height");
  return bounce;
}

LocalBounce closed_form_top(double s, double theta, double field_b) {
  require_unit_interval(s, "s");
  if (!(theta > 0.0 && theta < kPi))
    throw MapError(ErrorKind::OutOfRange, "theta outside (0,pi)");
  LocalBounce bounce;
  bounce.exit_local = 1.0 - s - 1.0 / std::tan(theta);
  bounce.entry_local = bounce.exit_local + 2.0 / field_b * std::sin(theta);
  bounce.entry_theta = kPi - theta;
  require_unit_interval(bounce.exit_local, "exit coordinate");
  require_unit_interval(bounce.entry_local, "entry coordinate");
  return bounce;
}

LocalBounce closed_form_left(double s, double theta, double field_b,
                             LeftConvention convention) {
  require_unit_interval(s, "s");
  LocalBounce bounce;
  if (convention == LeftConvention::Geometric) {
    if (!(theta > kPi / 2.0 && theta < kPi))
      throw MapError(ErrorKind::OutOfRange, "theta outside (pi/2,pi)");
    bounce.exit_local = 1.0 + s * std::tan(theta);
    bounce.entry_local = bounce.exit_local - 2.0 / field_b * std::cos(theta);
  } else {
    // Literal textbook formulas; they stay in range only when theta is the
    // acute angle pi - theta_geometric.
    if (!(theta > 0.0 && theta < kPi))
      throw MapError(ErrorKind::OutOfRange, "theta outside (0,pi)");
    bounce.exit_local = 1.0 - s * std::tan(theta);
    bounce.entry_local = bounce.exit_local + 2.0 / field_b * std::cos(theta);
  }
  bounce.entry_theta = 3.0 * kPi / 2.0 - theta;
  require_unit_interval(bounce.exit_local, "exit coordinate");
  require_unit_interval(bounce.entry_local, "entry coordinate");
  return bounce;
}

}  // namespace imb
