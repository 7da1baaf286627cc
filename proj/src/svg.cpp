#include "flipmatch/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include "flipmatch/matching.hpp"

namespace flipmatch {

namespace {

constexpr double kViewport = 640.0;
constexpr double kMargin = 24.0;

struct Mapper {
  double scale = 1.0;
  double ox = 0.0;
  double oy = 0.0;
  double max_y = 0.0;

  // Math coordinates with y up; SVG y grows downward.
  double x(const Point& p) const { return (static_cast<double>(p.x) - ox) * scale + kMargin; }
  double y(const Point& p) const { return (max_y - static_cast<double>(p.y)) * scale + kMargin; }
};

Mapper fit(const PointSet& ps) {
  Coord min_x = ps[0].x, max_x = ps[0].x, min_y = ps[0].y, max_y = ps[0].y;
  for (const Point& p : ps.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max<double>(1.0, static_cast<double>(std::max(max_x - min_x, max_y - min_y)));
  Mapper m;
  m.scale = (kViewport - 2 * kMargin) / span;
  m.ox = static_cast<double>(min_x);
  m.oy = static_cast<double>(min_y);
  m.max_y = static_cast<double>(max_y);
  return m;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void emit_line(std::ostringstream& out, const Mapper& mp, const Point& a, const Point& b,
               const char* stroke, const char* width, const char* dash) {
  out << "  <line x1=\"" << num(mp.x(a)) << "\" y1=\"" << num(mp.y(a)) << "\" x2=\"" << num(mp.x(b))
      << "\" y2=\"" << num(mp.y(b)) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
      << "\"";
  if (dash) out << " stroke-dasharray=\"" << dash << "\"";
  out << "/>\n";
}

// removed: the edge deleted by the most recent flip (drawn dashed);
// added: the edge it created (drawn bold).
std::string render(const PointSet& ps, const Matching& m, const std::optional<Segment>& removed,
                   const std::optional<Segment>& added) {
  const Mapper mp = fit(ps);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
  out << "  <rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  if (removed) emit_line(out, mp, ps[removed->a], ps[removed->b], "#999999", "1.5", "6 4");
  for (const Segment& e : m.edges) {
    const bool is_added = added && e == *added;
    emit_line(out, mp, ps[e.a], ps[e.b], is_added ? "#c62828" : "#1a237e", is_added ? "3" : "1.5",
              nullptr);
  }
  for (int i = 0; i < ps.size(); ++i) {
    const Point& p = ps[i];
    if (i == m.unmatched) {
      out << "  <circle cx=\"" << num(mp.x(p)) << "\" cy=\"" << num(mp.y(p))
          << "\" r=\"7\" fill=\"none\" stroke=\"#c62828\" stroke-width=\"1.5\"/>\n";
    }
    out << "  <circle cx=\"" << num(mp.x(p)) << "\" cy=\"" << num(mp.y(p))
        << "\" r=\"3\" fill=\"#212121\"/>\n";
    out << "  <text x=\"" << num(mp.x(p) + 6) << "\" y=\"" << num(mp.y(p) - 6)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#424242\">" << i << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_matching_svg(const PointSet& ps, const Matching& m) {
  return render(ps, m, std::nullopt, std::nullopt);
}

std::vector<std::string> render_sequence_svg(const PointSet& ps, const FlipSequence& seq) {
  std::vector<std::string> frames;
  frames.push_back(render(ps, seq.start, std::nullopt, std::nullopt));
  Matching cur = seq.start;
  for (const Flip& f : seq.flips) {
    const Segment removed(f.q, f.r);
    const Segment added(f.p, f.q);
    cur = apply_flip(ps, cur, f);
    frames.push_back(render(ps, cur, removed, added));
  }
  return frames;
}

}  // namespace flipmatch
