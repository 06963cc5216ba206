#include "imb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace imb {

namespace {

Termination termination_from(const MapError& error, int step) {
  Termination t;
  t.kind = error.kind() == ErrorKind::TangentGraze
               ? Termination::Kind::TangentGraze
               : Termination::Kind::CornerHit;
  t.step = step;
  t.detail = error.what();
  return t;
}

}  // namespace

const char* to_string(Termination::Kind kind) {
  switch (kind) {
    case Termination::Kind::Completed:    return "Completed";
    case Termination::Kind::CornerHit:    return "CornerHit";
    case Termination::Kind::TangentGraze: return "TangentGraze";
  }
  return "Unknown";
}

OrbitTrace iterate(const BirkhoffState& initial, int n_steps,
                   const SimConfig& cfg) {
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  OrbitTrace trace;
  trace.initial = initial;
  trace.cfg = cfg;
  trace.records.reserve(static_cast<size_t>(n_steps));
  BirkhoffState state = initial;
  for (int n = 0; n < n_steps; ++n) {
    try {
      StepResult step = step_F(state, cfg);
      step.record.n = n;
      trace.records.push_back(step.record);
      state = step.next;
    } catch (const MapError& error) {
      trace.termination = termination_from(error, n);
      return trace;
    }
  }
  return trace;
}

double state_distance(const BirkhoffState& a, const BirkhoffState& b) {
  double ds = std::abs(a.s - b.s);
  ds = std::min(ds, 4.0 - ds);
  return std::max(ds, std::abs(a.theta - b.theta));
}

std::optional<PeriodHit> detect_period(const OrbitTrace& trace, double tol) {
  for (int k = 1; k <= static_cast<int>(trace.records.size()); ++k) {
    const double dev = state_distance(trace.entry_state(k), trace.initial);
    if (dev <= tol) return PeriodHit{k, dev};
  }
  return std::nullopt;
}

LemmaVerdict lemma_gate(double s0, int p, int q, double field_b) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
    throw MapError(ErrorKind::InvalidSlope,
                   "slope numerator and denominator must be coprime positive "
                   "integers");
  if (!(s0 > 0.0 && s0 < 1.0))
    throw std::invalid_argument("s0 outside (0,1)");
  if (!(field_b > 0.0)) throw std::invalid_argument("B must be positive");
  LemmaVerdict verdict;
  verdict.p = p;
  verdict.q = q;
  verdict.s0 = s0;
  verdict.field_b = field_b;
  verdict.predicted_period = 2 * (p + q);
  // Nearest lattice approach of the launch line, by nearest-integer rounding
  // of the two shifted families.
  const double d1 = std::abs(s0 - std::round(s0 * q) / q);
  const double t = s0 * p / q;
  const double d2 = std::abs(t - std::round(t * p) / p);
  verdict.margin = std::min(d1, d2) - 2.0 / field_b;
  verdict.passes = verdict.margin > 0.0;
  return verdict;
}

LemmaVerification verify_lemma(const LemmaVerdict& verdict) {
  if (!verdict.passes)
    throw std::invalid_argument("lemma gate did not pass; nothing to verify");
  SimConfig cfg = SimConfig::from_field(verdict.field_b);
  const BirkhoffState initial{verdict.s0,
                              std::atan2(static_cast<double>(verdict.p),
                                         static_cast<double>(verdict.q))};
  const OrbitTrace trace = iterate(initial, verdict.predicted_period, cfg);
  LemmaVerification result;
  result.termination = trace.termination;
  for (const BounceRecord& record : trace.records)
    result.max_corners_turned =
        std::max(result.max_corners_turned, record.corners_turned);
  if (!trace.completed()) {
    result.ok = false;
    result.deviation = std::numeric_limits<double>::infinity();
    return result;
  }
  result.deviation =
      state_distance(trace.entry_state(verdict.predicted_period), initial);
  result.ok = result.deviation <= cfg.period_tol;
  return result;
}

PeriodicOrbitCheck check_b_gt_1(double radius) {
  if (!(radius > 0.0 && radius < 1.0))
    throw std::invalid_argument("radius outside (0,1)");
  const SimConfig cfg = SimConfig::from_radius(radius);
  const BirkhoffState initial{radius, kPi / 2.0};
  const OrbitTrace trace = iterate(initial, 8, cfg);
  PeriodicOrbitCheck check;
  check.termination = trace.termination;
  if (const auto hit = detect_period(trace, cfg.period_tol)) {
    check.periodic = true;
    check.period = hit->period;
    check.deviation = hit->deviation;
  }
  return check;
}

CornerHuntResult first_corner_turn(const BirkhoffState& initial,
                                   const SimConfig& cfg, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  CornerHuntResult result;
  BirkhoffState state = initial;
  for (int n = 0; n < max_steps; ++n) {
    try {
      const StepResult step = step_F(state, cfg);
      result.steps_examined = n + 1;
      if (step.record.corners_turned > 0) {
        result.step = n;
        return result;
      }
      state = step.next;
    } catch (const MapError& error) {
      result.termination = termination_from(error, n);
      return result;
    }
  }
  return result;
}

bool PortraitResult::all_completed() const {
  return std::all_of(terminations.begin(), terminations.end(),
                     [](const Termination& t) {
                       return t.kind == Termination::Kind::Completed;
                     });
}

PortraitResult phase_portrait(const std::vector<BirkhoffState>& initials,
                              int n_steps, const SimConfig& cfg) {
  PortraitResult result;
  result.terminations.reserve(initials.size());
  for (size_t id = 0; id < initials.size(); ++id) {
    const OrbitTrace trace = iterate(initials[id], n_steps, cfg);
    result.points.push_back({static_cast<int>(id), 0, trace.initial.s,
                             std::cos(trace.initial.theta)});
    for (const BounceRecord& record : trace.records) {
      result.points.push_back({static_cast<int>(id), record.n + 1,
                               record.entry_state.s,
                               std::cos(record.entry_state.theta)});
    }
    result.terminations.push_back(trace.termination);
  }
  return result;
}

}  // namespace imb
