#include "imb/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace imb {

namespace {

void write_termination_comments(std::ostream& out, const Termination& t) {
  if (t.kind != Termination::Kind::Completed) {
    out << "# termination=" << to_string(t.kind) << " step=" << t.step << "\n";
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_orbit_csv(std::ostream& out, const OrbitTrace& trace,
                     std::uint64_t seed) {
  out << "n,s_exit,theta_exit,x_exit,y_exit,side_exit,"
         "s_entry,theta_entry,x_entry,y_entry,side_entry,"
         "corners_turned,sweep,chord_length\n";
  for (const BounceRecord& r : trace.records) {
    out << r.n << ',' << format_double(r.exit_state.s) << ','
        << format_double(r.exit_state.theta) << ','
        << format_double(r.exit_point.x()) << ','
        << format_double(r.exit_point.y()) << ',' << to_string(r.exit_side)
        << ',' << format_double(r.entry_state.s) << ','
        << format_double(r.entry_state.theta) << ','
        << format_double(r.entry_point.x()) << ','
        << format_double(r.entry_point.y()) << ',' << to_string(r.entry_side)
        << ',' << r.corners_turned << ',' << format_double(r.arc.sweep) << ','
        << format_double(r.chord_length) << "\n";
  }
  write_termination_comments(out, trace.termination);
  out << "# seed=" << seed << "\n";
}

void write_portrait_csv(std::ostream& out, const PortraitResult& portrait,
                        std::uint64_t seed) {
  out << "orbit_id,n,s,u\n";
  for (const PortraitPoint& p : portrait.points) {
    out << p.orbit_id << ',' << p.n << ',' << format_double(p.s) << ','
        << format_double(p.u) << "\n";
  }
  for (size_t id = 0; id < portrait.terminations.size(); ++id) {
    const Termination& t = portrait.terminations[id];
    if (t.kind != Termination::Kind::Completed) {
      out << "# orbit=" << id << " termination=" << to_string(t.kind)
          << " step=" << t.step << "\n";
    }
  }
  out << "# seed=" << seed << "\n";
}

void write_trajectory_svg(std::ostream& out, const OrbitTrace& trace,
                          std::uint64_t seed) {
  // World bounding box: the square plus every arc's full circle.
  double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
  for (const BounceRecord& r : trace.records) {
    min_x = std::min(min_x, r.arc.center.x() - r.arc.radius);
    max_x = std::max(max_x, r.arc.center.x() + r.arc.radius);
    min_y = std::min(min_y, r.arc.center.y() - r.arc.radius);
    max_y = std::max(max_y, r.arc.center.y() + r.arc.radius);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double margin = 40.0;
  const double scale = 720.0 / span;
  const double width = (max_x - min_x) * scale + 2.0 * margin;
  const double height = (max_y - min_y) * scale + 2.0 * margin;
  const double tx = margin - scale * min_x;
  const double ty = margin + scale * max_y;
  const double stroke = 0.0025 * span;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << format_double(width) << "\" height=\"" << format_double(height)
      << "\" viewBox=\"0 0 " << format_double(width) << ' '
      << format_double(height) << "\">\n";
  // y-up world frame
  out << "<g transform=\"matrix(" << format_double(scale) << " 0 0 "
      << format_double(-scale) << ' ' << format_double(tx) << ' '
      << format_double(ty) << ")\">\n";
  out << "<rect class=\"square\" x=\"0\" y=\"0\" width=\"1\" height=\"1\" "
         "fill=\"none\" stroke=\"black\" stroke-width=\""
      << format_double(stroke) << "\"/>\n";
  for (const BounceRecord& r : trace.records) {
    const auto [start, start_side] = arc_to_point(r.n == 0
                                                      ? trace.initial.s
                                                      : trace.records[r.n - 1]
                                                            .entry_state.s);
    (void)start_side;
    out << "<line class=\"chord\" x1=\"" << format_double(start.x())
        << "\" y1=\"" << format_double(start.y()) << "\" x2=\""
        << format_double(r.exit_point.x()) << "\" y2=\""
        << format_double(r.exit_point.y())
        << "\" stroke=\"#1f77b4\" stroke-width=\"" << format_double(stroke)
        << "\"/>\n";
    const int large_arc = r.arc.sweep > kPi ? 1 : 0;
    out << "<path class=\"arc\" d=\"M " << format_double(r.exit_point.x())
        << ' ' << format_double(r.exit_point.y()) << " A "
        << format_double(r.arc.radius) << ' ' << format_double(r.arc.radius)
        << " 0 " << large_arc << " 1 " << format_double(r.entry_point.x())
        << ' ' << format_double(r.entry_point.y())
        << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\""
        << format_double(stroke) << "\"/>\n";
    out << "<circle class=\"exit\" cx=\"" << format_double(r.exit_point.x())
        << "\" cy=\"" << format_double(r.exit_point.y()) << "\" r=\""
        << format_double(1.6 * stroke) << "\" fill=\"#d62728\"/>\n";
    out << "<circle class=\"entry\" cx=\"" << format_double(r.entry_point.x())
        << "\" cy=\"" << format_double(r.entry_point.y()) << "\" r=\""
        << format_double(1.6 * stroke) << "\" fill=\"#1f77b4\"/>\n";
  }
  out << "</g>\n";
  if (trace.termination.kind != Termination::Kind::Completed) {
    out << "<!-- termination=" << to_string(trace.termination.kind)
        << " step=" << trace.termination.step << " -->\n";
  }
  out << "<!-- seed=" << seed << " -->\n";
  out << "</svg>\n";
}

void write_portrait_svg(std::ostream& out, const PortraitResult& portrait,
                        std::uint64_t seed) {
  const double margin = 60.0;
  const double plot_w = 720.0;
  const double plot_h = 360.0;
  const double width = plot_w + 2.0 * margin;
  const double height = plot_h + 2.0 * margin;
  auto sx = [&](double s) { return margin + s / 4.0 * plot_w; };
  auto sy = [&](double u) { return margin + (1.0 - u) / 2.0 * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect class=\"frame\" x=\"" << margin << "\" y=\"" << margin
      << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  // axis ticks: s = 0..4, u = -1, 0, 1
  for (int s = 0; s <= 4; ++s) {
    out << "<line x1=\"" << sx(s) << "\" y1=\"" << margin + plot_h
        << "\" x2=\"" << sx(s) << "\" y2=\"" << margin + plot_h + 6
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << sx(s) << "\" y=\"" << margin + plot_h + 22
        << "\" text-anchor=\"middle\" font-size=\"14\">" << s << "</text>\n";
  }
  for (int i = -1; i <= 1; ++i) {
    out << "<line x1=\"" << margin - 6 << "\" y1=\"" << sy(i) << "\" x2=\""
        << margin << "\" y2=\"" << sy(i) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << margin - 12 << "\" y=\"" << sy(i) + 5
        << "\" text-anchor=\"end\" font-size=\"14\">" << i << "</text>\n";
  }
  out << "<text x=\"" << margin + plot_w / 2.0 << "\" y=\""
      << height - margin / 4.0
      << "\" text-anchor=\"middle\" font-size=\"15\">s</text>\n";
  out << "<text x=\"" << margin / 4.0 << "\" y=\"" << margin + plot_h / 2.0
      << "\" text-anchor=\"middle\" font-size=\"15\">u</text>\n";
  for (const PortraitPoint& p : portrait.points) {
    out << "<circle class=\"pt\" cx=\"" << format_double(sx(p.s))
        << "\" cy=\"" << format_double(sy(p.u))
        << "\" r=\"1.4\" fill=\"#1f77b4\" fill-opacity=\"0.7\"/>\n";
  }
  out << "<!-- seed=" << seed << " -->\n";
  out << "</svg>\n";
}

}  // namespace imb
