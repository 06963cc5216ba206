#ifndef IMB_ANALYSIS_HPP
#define IMB_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "imb/dynamics.hpp"

namespace imb {

/// How an orbit ended. `step` is the index of the failed application for
/// the error kinds and -1 for Completed.
struct Termination {
  enum class Kind { Completed, CornerHit, TangentGraze };
  Kind kind = Kind::Completed;
  int step = -1;
  std::string detail;
};

const char* to_string(Termination::Kind kind);

struct OrbitTrace {
  BirkhoffState initial;
  SimConfig cfg;
  std::vector<BounceRecord> records;
  Termination termination;

  bool completed() const { return termination.kind == Termination::Kind::Completed; }
  /// Entry state after n applications of the map; n = 0 is the initial state.
  const BirkhoffState& entry_state(int n) const {
    return n == 0 ? initial : records[n - 1].entry_state;
  }
};

/// Applies the map up to n_steps times; errors are captured in the trace
/// termination, never thrown.
OrbitTrace iterate(const BirkhoffState& initial, int n_steps,
                   const SimConfig& cfg);

/// Wrap-aware distance on the boundary cylinder: max of the arc-length gap
/// (mod perimeter 4) and the angle gap.
double state_distance(const BirkhoffState& a, const BirkhoffState& b);

struct PeriodHit {
  int period = 0;
  double deviation = 0.0;
};

/// Smallest k >= 1 with entry_state(k) within tol of the initial state.
std::optional<PeriodHit> detect_period(const OrbitTrace& trace, double tol);

/// Verdict of the rational-slope periodicity gate: slope tan(theta0) = p/q,
/// launch from (s0, atan(p/q)) on the bottom side. margin is the minimal
/// lattice distance of the launch line minus the circle diameter 2/B; the
/// gate passes when it is strictly positive.
struct LemmaVerdict {
  int p = 0;
  int q = 0;
  double s0 = 0.0;
  double field_b = 0.0;
  double margin = 0.0;
  int predicted_period = 0;
  bool passes = false;
};

/// Evaluates the gate in closed form (nearest-integer rounding of the two
/// lattice-distance families). Throws InvalidSlope unless p, q are coprime
/// positive integers.
LemmaVerdict lemma_gate(double s0, int p, int q, double field_b);

struct LemmaVerification {
  bool ok = false;
  double deviation = 0.0;
  int max_corners_turned = 0;
  Termination termination;
};

/// Runs 2(p+q) applications from the gate's initial condition and measures
/// the return deviation against period_tol. Requires verdict.passes.
LemmaVerification verify_lemma(const LemmaVerdict& verdict);

struct PeriodicOrbitCheck {
  bool periodic = false;
  int period = 0;
  double deviation = 0.0;
  Termination termination;
};

/// Periodic-orbit existence check for r < 1: iterates from (r, pi/2) and
/// looks for a period of at most 8.
PeriodicOrbitCheck check_b_gt_1(double radius);

struct CornerHuntResult {
  std::optional<int> step;
  int steps_examined = 0;
  Termination termination;
};

/// First application whose arc passes a corner, within max_steps.
CornerHuntResult first_corner_turn(const BirkhoffState& initial,
                                   const SimConfig& cfg, int max_steps);

/// One boundary sample of a phase portrait: the entry state after n
/// applications, plotted as (s, u = cos theta).
struct PortraitPoint {
  int orbit_id = 0;
  int n = 0;
  double s = 0.0;
  double u = 0.0;
};

struct PortraitResult {
  std::vector<PortraitPoint> points;
  std::vector<Termination> terminations;  // one per orbit

  bool all_completed() const;
};

/// Iterates every initial condition n_steps times. Erroring orbits are
/// truncated and flagged in `terminations`, never resampled. Points are
/// ordered by (orbit_id, n).
PortraitResult phase_portrait(const std::vector<BirkhoffState>& initials,
                              int n_steps, const SimConfig& cfg);

}  // namespace imb

#endif  // IMB_ANALYSIS_HPP
