// Command-line front end for the inverse magnetic billiard in the unit
// square: orbit simulation, phase portraits, periodicity checks and
// CSV/SVG emission.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "imb/analysis.hpp"
#include "imb/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGateFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitVerifyFail = 4;

struct FieldOption {
  double field_b = 0.0;
  double radius = 0.0;
  CLI::Option* b_opt = nullptr;
  CLI::Option* r_opt = nullptr;

  imb::SimConfig resolve() const {
    const bool has_b = b_opt->count() > 0;
    const bool has_r = r_opt->count() > 0;
    if (has_b == has_r)
      throw CLI::ValidationError("exactly one of --b or --radius is required");
    return has_b ? imb::SimConfig::from_field(field_b)
                 : imb::SimConfig::from_radius(radius);
  }
};

struct AngleOption {
  double theta0 = 0.0;
  double u0 = 0.0;
  CLI::Option* theta_opt = nullptr;
  CLI::Option* u_opt = nullptr;

  double resolve() const {
    const bool has_theta = theta_opt->count() > 0;
    const bool has_u = u_opt->count() > 0;
    if (has_theta == has_u)
      throw CLI::ValidationError("exactly one of --theta0 or --u0 is required");
    if (has_u) {
      if (!(u0 > -1.0 && u0 < 1.0))
        throw CLI::ValidationError("--u0 must lie in (-1,1)");
      return std::acos(u0);
    }
    if (!(theta0 > 0.0 && theta0 < imb::kPi))
      throw CLI::ValidationError("--theta0 must lie in (0,pi), in radians");
    return theta0;
  }
};

void add_field_options(CLI::App* cmd, FieldOption& field) {
  field.b_opt =
      cmd->add_option("--b", field.field_b, "field magnitude B (radius r = 1/B)")
          ->check(CLI::PositiveNumber);
  field.r_opt = cmd->add_option("--radius", field.radius,
                                "circle radius r (B = 1/r)")
                    ->check(CLI::PositiveNumber);
}

void add_angle_options(CLI::App* cmd, AngleOption& angle) {
  angle.theta_opt = cmd->add_option("--theta0", angle.theta0,
                                    "initial angle in radians, (0,pi)");
  angle.u_opt = cmd->add_option("--u0", angle.u0,
                                "initial u = cos(theta), (-1,1)");
}

void write_file_or_stdout(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot open output file " + path);
  out << text;
}

std::vector<imb::BirkhoffState> parse_init_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open init file " + path);
  std::vector<imb::BirkhoffState> states;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double s = 0.0, u = 0.0;
    if (!(row >> s >> u))
      throw CLI::ValidationError("bad init line: " + line);
    states.push_back({s, std::acos(u)});
  }
  return states;
}

imb::BirkhoffState parse_init_pair(const std::string& text) {
  std::string body = text;
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream row(body);
  double s = 0.0, u = 0.0;
  if (!(row >> s >> u))
    throw CLI::ValidationError("--init expects \"s,u\", got: " + text);
  return {s, std::acos(u)};
}

std::vector<imb::BirkhoffState> random_initials(int count, std::uint64_t seed,
                                                double corner_tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> s_dist(0.0, 4.0);
  std::uniform_real_distribution<double> u_dist(-1.0, 1.0);
  std::vector<imb::BirkhoffState> states;
  while (static_cast<int>(states.size()) < count) {
    const double s = s_dist(rng);
    const double u = u_dist(rng);
    if (std::abs(s - std::round(s)) <= corner_tol) continue;
    if (!(u > -1.0 && u < 1.0)) continue;
    states.push_back({s, std::acos(u)});
  }
  return states;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Inverse magnetic billiard in the unit square: straight flight inside, "
      "counterclockwise circular motion of radius r = 1/B outside. States are "
      "Birkhoff coordinates (s, theta): arc length s in [0,4) measured ccw "
      "from the origin corner and inward angle theta in (0,pi) from the ccw "
      "side tangent. --steps always counts applications of the boundary map "
      "(one interior chord plus one exterior arc each). All angles are "
      "radians."};
  app.require_subcommand(1);

  // ---- simulate ----------------------------------------------------------
  auto* sim = app.add_subcommand(
      "simulate", "Iterate one orbit and write an orbit CSV (and SVG)");
  FieldOption sim_field;
  AngleOption sim_angle;
  double sim_s0 = 0.0;
  int sim_steps = 100;
  std::string sim_out, sim_svg;
  std::uint64_t sim_seed = 0;
  add_field_options(sim, sim_field);
  add_angle_options(sim, sim_angle);
  sim->add_option("--s0", sim_s0, "initial arc length in [0,4)")->required();
  sim->add_option("--steps", sim_steps, "number of map applications")
      ->check(CLI::PositiveNumber);
  sim->add_option("--out", sim_out, "orbit CSV path (default: stdout)");
  sim->add_option("--svg", sim_svg, "trajectory SVG path");
  sim->add_option("--seed", sim_seed, "seed recorded in outputs");

  // ---- portrait ----------------------------------------------------------
  auto* por = app.add_subcommand(
      "portrait", "Iterate an ensemble and write a (s,u) portrait CSV/SVG");
  FieldOption por_field;
  AngleOption por_angle;
  double por_s0 = 0.0;
  int por_steps = 1000;
  int por_random = 0;
  std::vector<std::string> por_inits;
  std::string por_init_file, por_out, por_svg;
  std::uint64_t por_seed = 0;
  add_field_options(por, por_field);
  add_angle_options(por, por_angle);
  auto* por_s0_opt = por->add_option("--s0", por_s0, "single initial arc length");
  por->add_option("--init", por_inits,
                  "initial condition \"s,u\" (repeatable)");
  por->add_option("--init-file", por_init_file,
                  "file of initial conditions, one \"s,u\" per line");
  por->add_option("--random", por_random,
                  "number of seeded-random initial conditions");
  por->add_option("--steps", por_steps, "number of map applications per orbit")
      ->check(CLI::PositiveNumber);
  por->add_option("--out", por_out, "portrait CSV path (default: stdout)");
  por->add_option("--svg", por_svg, "portrait SVG path");
  por->add_option("--seed", por_seed, "seed for --random initial conditions");

  // ---- lemma-check -------------------------------------------------------
  auto* lem = app.add_subcommand(
      "lemma-check",
      "Rational-slope periodicity gate plus direct verification. Exit codes: "
      "0 pass, 1 gate fails, 4 gate passed but the orbit did not return "
      "within tolerance.");
  FieldOption lem_field;
  int lem_p = 0, lem_q = 0;
  double lem_s0 = 0.0;
  add_field_options(lem, lem_field);
  lem->add_option("--p", lem_p, "slope numerator")->required();
  lem->add_option("--q", lem_q, "slope denominator")->required();
  lem->add_option("--s0", lem_s0, "initial arc length on the bottom side")
      ->required();

  // ---- corner-hunt -------------------------------------------------------
  auto* hunt = app.add_subcommand(
      "corner-hunt", "Find the first map application whose arc passes a corner");
  FieldOption hunt_field;
  AngleOption hunt_angle;
  double hunt_s0 = 0.0;
  int hunt_max_steps = 100000;
  add_field_options(hunt, hunt_field);
  add_angle_options(hunt, hunt_angle);
  hunt->add_option("--s0", hunt_s0, "initial arc length")->required();
  hunt->add_option("--max-steps", hunt_max_steps, "search cap")
      ->check(CLI::PositiveNumber);

  // ---- bgt1-check --------------------------------------------------------
  auto* bgt1 = app.add_subcommand(
      "bgt1-check",
      "Periodic-orbit existence check for r < 1 from the initial condition "
      "(r, pi/2)");
  FieldOption bgt1_field;
  add_field_options(bgt1, bgt1_field);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (app.got_subcommand(sim)) {
      const imb::SimConfig cfg = sim_field.resolve();
      const imb::BirkhoffState initial{sim_s0, sim_angle.resolve()};
      imb::birkhoff_to_ray(initial, cfg.corner_tol);  // reject invalid starts
      const imb::OrbitTrace trace = imb::iterate(initial, sim_steps, cfg);
      std::ostringstream csv;
      imb::write_orbit_csv(csv, trace, sim_seed);
      write_file_or_stdout(sim_out, csv.str());
      if (!sim_svg.empty()) {
        std::ostringstream svg;
        imb::write_trajectory_svg(svg, trace, sim_seed);
        write_file_or_stdout(sim_svg, svg.str());
      }
      if (!trace.completed()) {
        std::cerr << "orbit terminated early: "
                  << to_string(trace.termination.kind) << " at step "
                  << trace.termination.step << "\n";
        return kExitTruncated;
      }
      return kExitOk;
    }

    if (app.got_subcommand(por)) {
      const imb::SimConfig cfg = por_field.resolve();
      std::vector<imb::BirkhoffState> initials;
      if (por_s0_opt->count() > 0)
        initials.push_back({por_s0, por_angle.resolve()});
      for (const std::string& text : por_inits)
        initials.push_back(parse_init_pair(text));
      if (!por_init_file.empty()) {
        const auto from_file = parse_init_file(por_init_file);
        initials.insert(initials.end(), from_file.begin(), from_file.end());
      }
      if (por_random > 0) {
        const auto random = random_initials(por_random, por_seed, cfg.corner_tol);
        initials.insert(initials.end(), random.begin(), random.end());
      }
      if (initials.empty())
        throw CLI::ValidationError(
            "portrait needs at least one initial condition "
            "(--s0/--init/--init-file/--random)");
      for (const imb::BirkhoffState& state : initials)
        imb::birkhoff_to_ray(state, cfg.corner_tol);
      const imb::PortraitResult portrait =
          imb::phase_portrait(initials, por_steps, cfg);
      std::ostringstream csv;
      imb::write_portrait_csv(csv, portrait, por_seed);
      write_file_or_stdout(por_out, csv.str());
      if (!por_svg.empty()) {
        std::ostringstream svg;
        imb::write_portrait_svg(svg, portrait, por_seed);
        write_file_or_stdout(por_svg, svg.str());
      }
      if (!portrait.all_completed()) {
        std::cerr << "one or more orbits terminated early (see CSV comments)\n";
        return kExitTruncated;
      }
      return kExitOk;
    }

    if (app.got_subcommand(lem)) {
      const imb::SimConfig cfg = lem_field.resolve();
      const imb::LemmaVerdict verdict =
          imb::lemma_gate(lem_s0, lem_p, lem_q, cfg.field_b);
      std::cout << "p/q = " << lem_p << "/" << lem_q << "  s0 = " << lem_s0
                << "  B = " << cfg.field_b << "  (r = " << cfg.radius << ")\n";
      std::cout << "lattice margin   = " << verdict.margin << "\n";
      std::cout << "predicted period = " << verdict.predicted_period << "\n";
      if (!verdict.passes) {
        std::cout << "gate: fail (margin not positive)\n";
        return kExitGateFail;
      }
      const imb::LemmaVerification result = imb::verify_lemma(verdict);
      if (result.termination.kind != imb::Termination::Kind::Completed) {
        std::cout << "orbit terminated early: "
                  << to_string(result.termination.kind) << " at step "
                  << result.termination.step << "\n";
        return kExitVerifyFail;
      }
      const imb::OrbitTrace trace =
          imb::iterate({lem_s0, std::atan2(static_cast<double>(lem_p),
                                           static_cast<double>(lem_q))},
                       verdict.predicted_period, cfg);
      const auto minimal = imb::detect_period(trace, cfg.period_tol);
      std::cout << "simulated period = "
                << (minimal ? std::to_string(minimal->period) : "none found")
                << "\n";
      std::cout << "max deviation    = " << result.deviation << "\n";
      std::cout << "gate: pass   verification: "
                << (result.ok ? "pass" : "fail") << "\n";
      return result.ok ? kExitOk : kExitVerifyFail;
    }

    if (app.got_subcommand(hunt)) {
      const imb::SimConfig cfg = hunt_field.resolve();
      const imb::BirkhoffState initial{hunt_s0, hunt_angle.resolve()};
      imb::birkhoff_to_ray(initial, cfg.corner_tol);
      const imb::CornerHuntResult result =
          imb::first_corner_turn(initial, cfg, hunt_max_steps);
      if (result.termination.kind != imb::Termination::Kind::Completed) {
        std::cout << "orbit terminated early: "
                  << to_string(result.termination.kind) << " at step "
                  << result.termination.step << "\n";
        return kExitTruncated;
      }
      if (result.step) {
        std::cout << "first corner turn at step " << *result.step << "\n";
      } else {
        std::cout << "none within " << hunt_max_steps << " steps\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(bgt1)) {
      const imb::SimConfig cfg = bgt1_field.resolve();
      if (!(cfg.radius < 1.0))
        throw CLI::ValidationError("bgt1-check needs r < 1 (B > 1)");
      const imb::PeriodicOrbitCheck check = imb::check_b_gt_1(cfg.radius);
      if (check.termination.kind != imb::Termination::Kind::Completed) {
        std::cout << "orbit terminated early: "
                  << to_string(check.termination.kind) << " at step "
                  << check.termination.step << "\n";
        return kExitTruncated;
      }
      std::cout << "initial condition (r, pi/2) = (" << cfg.radius
                << ", pi/2)\n";
      if (check.periodic) {
        std::cout << "periodic: yes  period = " << check.period
                  << "  deviation = " << check.deviation << "\n";
        return kExitOk;
      }
      std::cout << "periodic: no period <= 8 found\n";
      return kExitVerifyFail;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const imb::MapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
