#include "flipmatch/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace flipmatch {

namespace {

// Reads the next content line (comments and blank lines skipped); returns
// false on end of input. line_no tracks the file position for errors.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

std::int64_t parse_int(std::istringstream& ss, int line_no, const std::string& what) {
  std::int64_t v = 0;
  if (!(ss >> v)) throw ParseError(line_no, "expected " + what);
  return v;
}

void expect_line_end(std::istringstream& ss, int line_no) {
  std::string tail;
  if (ss >> tail) throw ParseError(line_no, "unexpected trailing token '" + tail + "'");
}

int parse_index(std::istringstream& ss, const PointSet& ps, int line_no, const std::string& what) {
  const std::int64_t v = parse_int(ss, line_no, what);
  if (v < 0 || v >= ps.size()) {
    throw ParseError(line_no, what + " " + std::to_string(v) + " out of range 0.." +
                                   std::to_string(ps.size() - 1));
  }
  return static_cast<int>(v);
}

// Parses the unmatched line plus edge lines until a stopping token.
// stop_at_flip lets the sequence reader hand "flip ..." lines back.
Matching read_matching_block(std::istream& in, const PointSet& ps, int& line_no,
                             bool stop_at_flip, std::vector<std::string>* flip_lines,
                             std::vector<int>* flip_line_nos) {
  std::string line;
  if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing 'unmatched' line");
  std::istringstream ss(line);
  std::string keyword;
  ss >> keyword;
  if (keyword != "unmatched") throw ParseError(line_no, "expected 'unmatched <i>', got '" + line + "'");
  Matching m;
  m.unmatched = parse_index(ss, ps, line_no, "unmatched index");
  expect_line_end(ss, line_no);
  while (next_content_line(in, line, line_no)) {
    std::istringstream es(line);
    std::string head;
    es >> head;
    if (stop_at_flip && head == "flip") {
      flip_lines->push_back(line);
      flip_line_nos->push_back(line_no);
      break;
    }
    std::istringstream pair_ss(line);
    const int a = parse_index(pair_ss, ps, line_no, "edge endpoint");
    const int b = parse_index(pair_ss, ps, line_no, "edge endpoint");
    expect_line_end(pair_ss, line_no);
    if (a == b) throw ParseError(line_no, "edge endpoints are equal");
    m.edges.emplace_back(a, b);
  }
  normalize(m);
  if (auto bad = validate_matching(ps, m)) throw ParseError(line_no, "invalid matching: " + *bad);
  return m;
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  int line_no = 0;
  while (next_content_line(in, line, line_no)) {
    std::istringstream ss(line);
    Point p;
    p.x = parse_int(ss, line_no, "x coordinate");
    p.y = parse_int(ss, line_no, "y coordinate");
    expect_line_end(ss, line_no);
    if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit) {
      throw ParseError(line_no, "coordinate exceeds the supported bound " + std::to_string(kCoordLimit));
    }
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

void write_point_set(std::ostream& out, const PointSet& ps) {
  for (const Point& p : ps.points()) out << p.x << " " << p.y << "\n";
}

Matching read_matching(std::istream& in, const PointSet& ps) {
  int line_no = 0;
  return read_matching_block(in, ps, line_no, false, nullptr, nullptr);
}

void write_matching(std::ostream& out, const Matching& m) {
  out << "unmatched " << m.unmatched << "\n";
  for (const Segment& e : m.edges) out << e.a << " " << e.b << "\n";
}

FlipSequence read_sequence(std::istream& in, const PointSet& ps) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing 'start' line");
  {
    std::istringstream ss(line);
    std::string keyword;
    ss >> keyword;
    if (keyword != "start") throw ParseError(line_no, "expected 'start', got '" + line + "'");
    expect_line_end(ss, line_no);
  }
  FlipSequence seq;
  std::vector<std::string> pending;
  std::vector<int> pending_nos;
  seq.start = read_matching_block(in, ps, line_no, true, &pending, &pending_nos);

  auto parse_flip = [&](const std::string& flip_line, int no) {
    std::istringstream ss(flip_line);
    std::string keyword;
    ss >> keyword;
    if (keyword != "flip") throw ParseError(no, "expected 'flip <p> <q> <r>', got '" + flip_line + "'");
    Flip f;
    f.p = parse_index(ss, ps, no, "flip point");
    f.q = parse_index(ss, ps, no, "flip point");
    f.r = parse_index(ss, ps, no, "flip point");
    expect_line_end(ss, no);
    seq.flips.push_back(f);
  };
  for (size_t i = 0; i < pending.size(); ++i) parse_flip(pending[i], pending_nos[i]);
  while (next_content_line(in, line, line_no)) parse_flip(line, line_no);
  return seq;
}

void write_sequence(std::ostream& out, const FlipSequence& seq) {
  out << "start\n";
  write_matching(out, seq.start);
  for (const Flip& f : seq.flips) out << "flip " << f.p << " " << f.q << " " << f.r << "\n";
}

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["rule"] = to_string(r.rule);
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["components"] = r.components;
  if (r.diameter) {
    j["diameter"] = *r.diameter;
  } else {
    j["diameter"] = nullptr;
  }
  if (r.witness_pair) {
    j["witness_pair"] = {r.witness_pair->first, r.witness_pair->second};
  } else {
    j["witness_pair"] = nullptr;
  }
  j["runtime_ms"] = r.runtime_ms;
  return j.dump(2) + "\n";  // keys serialize alphabetically: stable bytes
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n";
  out << "rule: " << to_string(r.rule) << "\n";
  out << "vertex_count: " << r.vertex_count << "\n";
  out << "edge_count: " << r.edge_count << "\n";
  out << "components: " << r.components << "\n";
  out << "diameter: " << (r.diameter ? std::to_string(*r.diameter) : "none") << "\n";
  out << "witness_pair: "
      << (r.witness_pair ? std::to_string(r.witness_pair->first) + " " +
                               std::to_string(r.witness_pair->second)
                         : "none")
      << "\n";
  out << "runtime_ms: " << r.runtime_ms << "\n";
  return out.str();
}

}  // namespace flipmatch
