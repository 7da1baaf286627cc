#include "flipmatch/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "flipmatch/flipgraph.hpp"
#include "flipmatch/flipseq.hpp"
#include "flipmatch/generators.hpp"
#include "flipmatch/io.hpp"
#include "flipmatch/svg.hpp"
#include "flipmatch/visibility.hpp"

#include <chrono>

namespace flipmatch {

namespace {

// Maps the library's exception taxonomy onto the documented exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open points file '" + path + "'");
  PointSet ps = read_point_set(in);
  const GeneralPositionReport gp = validate_general_position(ps);
  if (!gp.ok()) {
    if (gp.kind == GeneralPositionReport::Kind::DuplicatePoints) {
      throw std::invalid_argument("points " + std::to_string(gp.i) + " and " + std::to_string(gp.j) +
                                  " coincide");
    }
    throw std::invalid_argument("points " + std::to_string(gp.i) + ", " + std::to_string(gp.j) +
                                ", " + std::to_string(gp.k) + " are collinear");
  }
  return ps;
}

Matching load_matching(const std::string& path, const PointSet& ps) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matching file '" + path + "'");
  return read_matching(in, ps);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

}  // namespace

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    PointSet ps;
    Matching m;
    bool have_matching = false;
    if (opt.kind == "convex") {
      ps = gen_convex(opt.n, opt.seed);
    } else if (opt.kind == "random") {
      ps = gen_random(opt.n, opt.seed);
    } else if (opt.kind == "nested") {
      NestedInstance inst = gen_nested(opt.layers, opt.seed);
      ps = inst.points;
      m = inst.walls;
      have_matching = true;
    } else if (opt.kind == "windmill") {
      WindmillInstance inst = gen_windmill(opt.scale);
      ps = inst.points;
      m = inst.vanes;
      have_matching = true;
    } else {
      err << "error: unknown generator '" << opt.kind << "'\n";
      return kExitUsage;
    }
    std::ostringstream pts_text;
    write_point_set(pts_text, ps);
    if (opt.out_points.empty()) {
      out << pts_text.str();
    } else {
      write_text_file(opt.out_points, pts_text.str());
    }
    if (!opt.out_matching.empty()) {
      if (!have_matching) {
        err << "error: generator '" << opt.kind << "' does not produce a matching\n";
        return kExitUsage;
      }
      std::ostringstream m_text;
      write_matching(m_text, m);
      write_text_file(opt.out_matching, m_text.str());
    }
    return kExitOk;
  });
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    if (opt.format != "text" && opt.format != "json") {
      err << "error: unknown format '" << opt.format << "'\n";
      return kExitUsage;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const PointSet ps = load_points(opt.points_path);
    const FlipGraph g = build_flip_graph(ps, opt.rule, opt.cap);
    const Components comps = connected_components(g);
    AnalysisReport r;
    r.n = ps.size();
    r.rule = opt.rule;
    r.vertex_count = g.vertices.size();
    r.edge_count = g.edge_count;
    r.components = comps.count();
    if (comps.count() == 1 && !g.vertices.empty()) {
      const DiameterResult d = graph_diameter(g, opt.threads);
      r.diameter = d.diameter;
      r.witness_pair = {d.from, d.to};
    }
    if (opt.timing) {
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    }
    out << (opt.format == "json" ? report_to_json(r) : report_to_text(r));
    return kExitOk;
  });
}

int cmd_route(const RouteOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const PointSet ps = load_points(opt.points_path);
    const Matching from = load_matching(opt.from_path, ps);
    const Matching to = load_matching(opt.to_path, ps);
    const int m = (ps.size() - 1) / 2;
    FlipSequence seq;
    std::string bound;
    if (opt.mode == "canonical") {
      seq = route(ps, from, to);
      bound = "<= " + std::to_string(m * (m + 3)) + " (m(m+3), m=" + std::to_string(m) + ")";
    } else if (opt.mode == "bfs") {
      const FlipGraph g = build_flip_graph(ps, FlipRule::EdgeFlip, opt.cap);
      int vi = -1, vj = -1;
      for (size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i] == from) vi = static_cast<int>(i);
        if (g.vertices[i] == to) vj = static_cast<int>(i);
      }
      if (vi < 0 || vj < 0) throw std::logic_error("matching missing from the enumeration");
      const std::vector<int> path = bfs_path(g, vi, vj);
      if (path.empty()) throw std::invalid_argument("matchings are not connected");
      seq.start = from;
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        // Adjacent matchings differ in one edge; the added edge contains the
        // earlier unmatched point, which identifies the flip.
        const Matching& a = g.vertices[static_cast<size_t>(path[i])];
        const Matching& b = g.vertices[static_cast<size_t>(path[i + 1])];
        Flip f{a.unmatched, -1, b.unmatched};
        for (const Segment& e : b.edges) {
          if (e.touches(a.unmatched)) {
            f.q = e.other(a.unmatched);
            break;
          }
        }
        seq.flips.push_back(f);
      }
      if (end_matching(ps, seq) != to) throw std::logic_error("path replay mismatch");
      bound = "exact (breadth-first)";
    } else if (opt.mode == "convex") {
      seq = convex_route_to_hull(ps, from, to);
      bound = "<= " + std::to_string(2 * ps.size()) + " (2n, n=" + std::to_string(ps.size()) + ")";
    } else {
      err << "error: unknown mode '" << opt.mode << "'\n";
      return kExitUsage;
    }
    std::ostringstream text;
    write_sequence(text, seq);
    if (opt.out_path.empty()) {
      out << text.str();
    } else {
      write_text_file(opt.out_path, text.str());
      out << "flips: " << seq.flips.size() << ", bound: " << bound << "\n";
    }
    return kExitOk;
  });
}

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const PointSet ps = load_points(opt.points_path);
    std::ifstream in(opt.input_path);
    if (!in) throw std::invalid_argument("cannot open input file '" + opt.input_path + "'");
    // Peek at the first content token: sequences open with "start".
    std::string first_word;
    in >> first_word;
    while (!first_word.empty() && first_word[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      first_word.clear();
      in >> first_word;
    }
    in.clear();
    in.seekg(0);
    std::vector<std::string> frames;
    if (first_word == "start") {
      const FlipSequence seq = read_sequence(in, ps);
      frames = render_sequence_svg(ps, seq);
    } else {
      frames.push_back(render_matching_svg(ps, read_matching(in, ps)));
    }
    if (opt.out_prefix.empty()) {
      for (const std::string& f : frames) out << f;
    } else {
      for (size_t i = 0; i < frames.size(); ++i) {
        write_text_file(opt.out_prefix + std::to_string(i) + ".svg", frames[i]);
      }
      out << "frames: " << frames.size() << "\n";
    }
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const PointSet ps = load_points(opt.points_path);
    std::ifstream in(opt.sequence_path);
    if (!in) throw std::invalid_argument("cannot open sequence file '" + opt.sequence_path + "'");
    const FlipSequence seq = read_sequence(in, ps);
    const std::optional<int> bad = validate_sequence(ps, seq);
    if (bad) {
      if (*bad < 0) {
        err << "invalid: start matching fails validation\n";
      } else {
        const Flip& f = seq.flips[static_cast<size_t>(*bad)];
        std::string reason;
        Matching cur = seq.start;
        for (int i = 0; i < *bad; ++i) cur = apply_flip(ps, cur, seq.flips[static_cast<size_t>(i)]);
        is_legal_flip(ps, cur, f, FlipRule::EdgeFlip, &reason);
        err << "invalid: flip " << *bad << " (" << f.p << " " << f.q << " " << f.r
            << "): " << reason << "\n";
      }
      return kExitValidation;
    }
    const Matching end = end_matching(ps, seq);
    out << "ok: " << seq.flips.size() << " flips, end unmatched " << end.unmatched << "\n";
    return kExitOk;
  });
}

int cmd_polygon(const PolygonOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    const PointSet ps = load_points(opt.points_path);
    const Matching m = load_matching(opt.matching_path, ps);
    const SegmentSet ss = duplicate_unmatched(ps, m);
    const VisibilityGraph vg = build_visibility_graph(ps, ss);
    const HamiltonianPolygon hp = plane_hamiltonian_polygon(ps, ss, vg);
    if (validate_polygon(ps, ss, hp)) throw std::logic_error("polygon failed validation");
    out << "vertices: " << vg.vertices().size() << " (companion id " << companion_id(ps) << ")\n";
    out << "polygon:";
    for (int v : hp.cycle) out << " " << v;
    out << "\n";
    return kExitOk;
  });
}

}  // namespace flipmatch
