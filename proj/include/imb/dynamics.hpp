#ifndef IMB_DYNAMICS_HPP
#define IMB_DYNAMICS_HPP

#include "imb/geometry.hpp"

namespace imb {

/// Field strength and numerical tolerances of a run. Exactly one of B or
/// r is primary; the other is its reciprocal (r = 1/B).
struct SimConfig {
  double field_b = 50.0;
  double radius = 0.02;
  double corner_tol = kCornerTol;
  double arc_eps = kArcEps;
  double period_tol = 1e-6;
  int max_steps = 100000;

  static SimConfig from_field(double b);
  static SimConfig from_radius(double r);
  void validate() const;
};

/// One application of the boundary map: interior chord plus exterior arc.
/// exit_state holds the time-reversal state at the exit point (the inward
/// angle of the reversed flight direction), so both states satisfy the
/// Birkhoff invariants.
struct BounceRecord {
  int n = 0;
  BirkhoffState exit_state;
  BirkhoffState entry_state;
  Side exit_side = Side::Bottom;
  Side entry_side = Side::Bottom;
  Vec2 exit_point{0.0, 0.0};
  Vec2 entry_point{0.0, 0.0};
  int corners_turned = 0;
  MagneticArc arc;
  double chord_length = 0.0;
};

struct StepResult {
  BirkhoffState next;
  BounceRecord record;
};

/// The map F: entry state -> next entry state. Throws MapError (CornerHit,
/// TangentGraze) when the orbit cannot be continued.
StepResult step_F(const BirkhoffState& state, const SimConfig& cfg);

/// Geometric time reversal of F: inverse_F(step_F(x)) == x whenever neither
/// call throws. The clockwise exterior motion reuses the ccw engine
/// conjugated by the diagonal mirror of the square.
BirkhoffState inverse_F(const BirkhoffState& state, const SimConfig& cfg);

/// Specular reflection map of the classical billiard (the large-B limit).
BirkhoffState classical_step(const BirkhoffState& state,
                             double corner_tol = kCornerTol);

/// Same-side bounce in side-local coordinates: exit position, re-entry
/// position and re-entry angle.
struct LocalBounce {
  double exit_local = 0.0;
  double entry_local = 0.0;
  double entry_theta = 0.0;
};

/// Same-side bounce off the right side, launched from the bottom at
/// (s, theta) with theta in (0, pi/2). Local coordinate is the height above
/// (1,0), i.e. s_global - 1. Throws OutOfRange when a coordinate leaves (0,1).
LocalBounce closed_form_right(double s, double theta, double field_b);

/// Same-side bounce off the top side; local coordinate measured ccw from
/// (1,1), i.e. s_global - 2.
LocalBounce closed_form_top(double s, double theta, double field_b);

/// The left-side formulas exist in two forms. Geometric is what the square
/// actually does for theta in (pi/2, pi) measured from the bottom ccw
/// tangent (exit height -s*tan(theta), ccw local 1 + s*tan(theta), shift
/// -(2/B)cos(theta)). AsPublished keeps the textbook signs, which agree with
/// Geometric under theta -> pi - theta. Both give entry_theta = 3pi/2 - theta.
enum class LeftConvention { Geometric, AsPublished };

LocalBounce closed_form_left(double s, double theta, double field_b,
                             LeftConvention convention = LeftConvention::Geometric);

}  // namespace imb

#endif  // IMB_DYNAMICS_HPP
