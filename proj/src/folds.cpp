#include "origami/folds.hpp"

#include "origami/conics.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <utility>

namespace origami::folds {

namespace {

using geom::dist_squared;
using geom::same_line;
using geom::same_point;

// slope ascending, vertical last
bool line_less(const Line& l, const Line& m) {
  bool lv = l.vertical(), mv = m.vertical();
  if (lv != mv) return mv;
  if (lv) return compare(l.c, m.c) < 0;
  int s = compare(l.slope(), m.slope());
  if (s != 0) return s < 0;
  return compare(l.c, m.c) < 0;
}

void sort_folds(std::vector<Line>& lines) {
  std::sort(lines.begin(), lines.end(), line_less);
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const Line& a, const Line& b) { return same_line(a, b); }),
              lines.end());
}

// a deterministic affine point of l
Point point_on(const Line& l) {
  if (l.b.sign() != 0) return {ExactReal(0), -l.c / l.b};
  return {-l.c / l.a, ExactReal(0)};
}

bool same_object(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  if (auto* p = std::get_if<Point>(&a)) return same_point(*p, std::get<Point>(b));
  return same_line(std::get<Line>(a), std::get<Line>(b));
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign() == 0;
}

}  // namespace

const char* level_name(Level level) {
  switch (level) {
    case Level::Thalian: return "thalian";
    case Level::Pythagorean: return "pythagorean";
    case Level::Euclidean: return "euclidean";
    case Level::Origami: return "origami";
    case Level::Reduced: return "reduced";
  }
  return "?";
}

const Object* Trace::find(const std::string& id) const {
  for (auto& [name, obj] : objects)
    if (name == id) return &obj;
  return nullptr;
}

std::string Trace::to_json() const {
  nlohmann::ordered_json j;
  j["steps"] = nlohmann::ordered_json::array();
  for (auto& s : steps)
    j["steps"].push_back({{"op", s.op}, {"args", s.args}, {"out", s.out}});
  auto entry = [](const ExactReal& v) {
    return nlohmann::ordered_json{{"exact", v.str()}, {"decimal", v.decimal(50)}};
  };
  j["objects"] = nlohmann::ordered_json::object();
  for (auto& [id, obj] : objects) {
    nlohmann::ordered_json o;
    if (auto* p = std::get_if<Point>(&obj)) {
      o["type"] = "point";
      o["x"] = entry(p->x);
      o["y"] = entry(p->y);
    } else {
      auto& l = std::get<Line>(obj);
      o["type"] = "line";
      o["a"] = entry(l.a);
      o["b"] = entry(l.b);
      o["c"] = entry(l.c);
    }
    j["objects"][id] = std::move(o);
  }
  return j.dump(2);
}

void Engine::require(const char* op) const {
  bool ok = false;
  std::string o(op);
  if (o == "O2" || o == "O3") {
    ok = true;
  } else if (o == "O1") {
    ok = level_ != Level::Reduced;
  } else if (o == "O4") {
    ok = level_ == Level::Pythagorean || level_ == Level::Euclidean ||
         level_ == Level::Origami;
  } else if (o == "O5") {
    ok = level_ == Level::Euclidean || level_ == Level::Origami ||
         level_ == Level::Reduced;
  } else if (o == "O6") {
    ok = level_ == Level::Origami || level_ == Level::Reduced;
  }
  if (!ok) throw AxiomNotAvailable(op);
}

std::string Engine::intern(const Object& obj) {
  for (auto& [id, existing] : trace_.objects)
    if (same_object(existing, obj)) return id;
  std::string id =
      (obj.index() == 0 ? "p" : "l") + std::to_string(++next_id_);
  trace_.objects.emplace_back(id, obj);
  trace_.steps.push_back({"seed", {}, {id}});
  return id;
}

std::string Engine::add_point(const Point& p, const std::string& id) {
  if (id.empty()) return intern(Object(p));
  if (trace_.find(id)) throw Error("duplicate trace id: " + id);
  trace_.objects.emplace_back(id, Object(p));
  trace_.steps.push_back({"seed", {}, {id}});
  return id;
}

std::string Engine::add_line(const Line& l, const std::string& id) {
  if (id.empty()) return intern(Object(l));
  if (trace_.find(id)) throw Error("duplicate trace id: " + id);
  trace_.objects.emplace_back(id, Object(l));
  trace_.steps.push_back({"seed", {}, {id}});
  return id;
}

std::string Engine::record(const char* op, const std::vector<Object>& args,
                           const std::vector<Object>& out) {
  TraceStep step;
  step.op = op;
  for (auto& a : args) step.args.push_back(intern(a));
  for (auto& o : out) {
    // outputs that coincide with an existing object reuse its id
    std::string id;
    bool found = false;
    for (auto& [name, existing] : trace_.objects)
      if (same_object(existing, o)) {
        id = name;
        found = true;
        break;
      }
    if (!found) {
      id = (o.index() == 0 ? "p" : "l") + std::to_string(++next_id_);
      trace_.objects.emplace_back(id, o);
    }
    step.out.push_back(id);
  }
  trace_.steps.push_back(step);
  return step.out.empty() ? std::string() : step.out.front();
}

Line Engine::O1(const Point& p, const Point& q) {
  require("O1");
  Line l = geom::line_through(p, q);
  record("O1", {p, q}, {l});
  return l;
}

Point Engine::O2(const Line& l, const Line& m) {
  require("O2");
  Point p = geom::intersect(l, m);
  record("O2", {l, m}, {p});
  return p;
}

Line Engine::O3(const Point& p, const Point& q) {
  require("O3");
  Line l = geom::perp_bisector(p, q);
  record("O3", {p, q}, {l});
  return l;
}

FoldResult Engine::O4(const Line& l, const Line& m) {
  require("O4");
  if (same_line(l, m)) throw CoincidentLines();
  FoldResult res;
  if (geom::parallel(l, m)) {
    // normalization makes parallel lines share (a, b); midline averages c
    res.lines.push_back(Line::make(l.a, l.b, (l.c + m.c) / ExactReal(2)));
  } else {
    ExactReal n1 = ExactReal::sqrt(l.a * l.a + l.b * l.b);
    ExactReal n2 = ExactReal::sqrt(m.a * m.a + m.b * m.b);
    res.lines.push_back(
        Line::make(l.a * n2 + m.a * n1, l.b * n2 + m.b * n1, l.c * n2 + m.c * n1));
    res.lines.push_back(
        Line::make(l.a * n2 - m.a * n1, l.b * n2 - m.b * n1, l.c * n2 - m.c * n1));
  }
  sort_folds(res.lines);
  std::vector<Object> out(res.lines.begin(), res.lines.end());
  record("O4", {l, m}, out);
  return res;
}

FoldResult Engine::O5(const Point& p, const Line& l, const Point& q) {
  require("O5");
  if (l.contains(p)) throw DegenerateParabola();
  // points R = L0 + t d on l with |R - Q| = |P - Q|; fold = perp bisector of P, R
  Point l0 = point_on(l);
  Point d{l.b, -l.a};
  Point w = l0 - q;
  ExactReal alpha = d.x * d.x + d.y * d.y;
  ExactReal beta = d.x * w.x + d.y * w.y;
  ExactReal gamma = w.x * w.x + w.y * w.y - dist_squared(p, q);
  ExactReal disc = beta * beta - alpha * gamma;
  FoldResult res;
  int s = disc.sign();
  if (s >= 0) {
    std::vector<ExactReal> ts;
    if (s == 0) {
      ts.push_back(-beta / alpha);
    } else {
      ExactReal r = ExactReal::sqrt(disc);
      ts.push_back((-beta + r) / alpha);
      ts.push_back((-beta - r) / alpha);
    }
    for (auto& t : ts) {
      Point r = l0 + d.scaled(t);
      res.lines.push_back(geom::perp_bisector(p, r));
    }
  }
  sort_folds(res.lines);
  std::vector<Object> out(res.lines.begin(), res.lines.end());
  record("O5", {p, l, q}, out);
  return res;
}

FoldResult Engine::O6(const Point& p, const Line& l, const Point& q, const Line& m) {
  require("O6");
  if (l.contains(p) || m.contains(q)) throw DegenerateParabola();
  if (same_point(p, q) && same_line(l, m)) throw IdenticalParabolas();
  conics::Conic ca = conics::conic_from_parabola(p, l);
  conics::Conic cb = conics::conic_from_parabola(q, m);
  if (conics::same_conic(ca, cb)) throw IdenticalParabolas();
  FoldResult res;
  for (auto& t : conics::common_tangents(ca, cb)) {
    if (t.at_infinity)
      res.degenerate = true;
    else
      res.lines.push_back(t.line);
  }
  sort_folds(res.lines);
  std::vector<Object> out(res.lines.begin(), res.lines.end());
  record("O6", {p, l, q, m}, out);
  return res;
}

namespace {
Point rot90(const Point& v) { return {-v.y, v.x}; }
}  // namespace

Line Engine::derive_O1_from_O2_O3_O5(const Point& p, const Point& q) {
  if (same_point(p, q)) throw CoincidentPoints();
  // R1, R2 on the perpendicular bisector of PQ at distance |PQ| from Q are the
  // apexes of the equilateral triangles on PQ; the O5 folds through Q cut that
  // bisector in two points symmetric across PQ, whose perpendicular bisector
  // is the line PQ itself.
  Line l = O3(p, q);
  FoldResult fr = O5(p, l, q);
  if (fr.lines.size() != 2) throw Error("derived O1: unexpected fold count");
  Point s1 = O2(fr.lines[0], l);
  Point s2 = O2(fr.lines[1], l);
  return O3(s1, s2);
}

FoldResult Engine::derive_O4_from_O5(const Line& l, const Line& m) {
  if (same_line(l, m)) throw CoincidentLines();
  FoldResult res;
  if (geom::parallel(l, m)) {
    // midpoints of segments from a point of l to two points of m span the
    // equidistant midline
    Point p = point_on(l);
    Point m1 = point_on(m);
    Point m2 = m1 + Point{m.b, -m.a};
    Point x = mid_via_folds(p, m1);
    Point y = mid_via_folds(p, m2);
    res.lines.push_back(line_via_folds(x, y));
  } else {
    // folds through the vertex reflecting a point of l onto m bisect the angles
    Point q = geom::intersect(l, m);
    Point p = point_on(l);
    if (same_point(p, q)) p = p + Point{l.b, -l.a};
    res = O5(p, m, q);
  }
  sort_folds(res.lines);
  return res;
}

Line Engine::line_via_folds(const Point& p, const Point& q) {
  if (level_ == Level::Reduced) return derive_O1_from_O2_O3_O5(p, q);
  return O1(p, q);
}

Point Engine::mid_via_folds(const Point& p, const Point& q) {
  return O2(line_via_folds(p, q), O3(p, q));
}

// Midpoint-based parallel transport: D with D - P = (B - A)/2, using only
// O1/O2/O3 steps; requires P off the line AB and A != B.
Point Engine::half_translate(const Point& p, const Point& a, const Point& b) {
  Point pm = mid_via_folds(a, b);
  Point am = mid_via_folds(p, b);
  Point bm = mid_via_folds(p, a);
  Point dm = mid_via_folds(p, am);
  return O2(line_via_folds(bm, dm), line_via_folds(pm, am));
}

Point Engine::macro_translate(const Point& p, const Point& a, const Point& b) {
  if (same_point(a, b)) return p;
  if (!collinear(p, a, b)) {
    Point h = half_translate(p, a, b);
    return half_translate(h, a, b);
  }
  // collinear configuration: detour through an off-line auxiliary seed,
  // transporting AB to it first and then its translate back past P
  Point s = a + rot90(b - a);
  Point s1 = half_translate(s, a, b);
  Point s2 = half_translate(s1, a, b);  // s2 = s + (b - a)
  Point h = half_translate(p, s, s2);
  return half_translate(h, s, s2);
}

Point Engine::macro_scale(const Point& a, const Point& b, const Point& c,
                          const Point& p) {
  if (same_point(a, c)) throw DegenerateRatio();
  if (!collinear(a, b, c)) throw NotCollinear();
  ExactReal ratio = (c.x - a.x).sign() != 0 ? (b.x - a.x) / (c.x - a.x)
                                            : (b.y - a.y) / (c.y - a.y);
  Point d = a + (p - a).scaled(ratio);
  record("scale", {a, b, c, p}, {d});
  return d;
}

Point Engine::macro_mark_length(const Point& a, const Point& b, const Point& origin,
                                const Point& direction) {
  if (level_ == Level::Thalian) throw AxiomNotAvailable("macro_mark_length needs O4");
  if (same_point(a, b)) throw CoincidentPoints();
  ExactReal d2 = direction.x * direction.x + direction.y * direction.y;
  if (d2.sign() == 0) throw DegenerateRatio();
  ExactReal scale = ExactReal::sqrt(dist_squared(a, b) / d2);
  Point r = origin + direction.scaled(scale);
  record("marklen", {a, b, origin, direction}, {r});
  return r;
}

Trace replay(const Trace& t) {
  Engine eng;
  Trace out;
  auto get_point = [&](const std::string& id) {
    const Object* o = out.find(id);
    if (!o || o->index() != 0) throw Error("trace replay: bad point id " + id);
    return std::get<Point>(*o);
  };
  auto get_line = [&](const std::string& id) {
    const Object* o = out.find(id);
    if (!o || o->index() != 1) throw Error("trace replay: bad line id " + id);
    return std::get<Line>(*o);
  };
  for (auto& step : t.steps) {
    std::vector<Object> produced;
    if (step.op == "seed") {
      const Object* src = t.find(step.out.at(0));
      if (!src) throw Error("trace replay: missing seed " + step.out.at(0));
      produced.push_back(*src);
    } else if (step.op == "O1") {
      produced.push_back(geom::line_through(get_point(step.args.at(0)),
                                            get_point(step.args.at(1))));
    } else if (step.op == "O2") {
      produced.push_back(
          geom::intersect(get_line(step.args.at(0)), get_line(step.args.at(1))));
    } else if (step.op == "O3") {
      produced.push_back(geom::perp_bisector(get_point(step.args.at(0)),
                                             get_point(step.args.at(1))));
    } else if (step.op == "O4") {
      for (auto& l : eng.O4(get_line(step.args.at(0)), get_line(step.args.at(1))).lines)
        produced.push_back(l);
    } else if (step.op == "O5") {
      for (auto& l : eng.O5(get_point(step.args.at(0)), get_line(step.args.at(1)),
                            get_point(step.args.at(2)))
                         .lines)
        produced.push_back(l);
    } else if (step.op == "O6") {
      for (auto& l : eng.O6(get_point(step.args.at(0)), get_line(step.args.at(1)),
                            get_point(step.args.at(2)), get_line(step.args.at(3)))
                         .lines)
        produced.push_back(l);
    } else if (step.op == "scale") {
      produced.push_back(eng.macro_scale(get_point(step.args.at(0)),
                                         get_point(step.args.at(1)),
                                         get_point(step.args.at(2)),
                                         get_point(step.args.at(3))));
    } else if (step.op == "marklen") {
      produced.push_back(eng.macro_mark_length(
          get_point(step.args.at(0)), get_point(step.args.at(1)),
          get_point(step.args.at(2)), get_point(step.args.at(3))));
    } else {
      throw Error("trace replay: unknown op " + step.op);
    }
    if (produced.size() != step.out.size())
      throw Error("trace replay: output arity mismatch in " + step.op);
    out.steps.push_back(step);
    for (std::size_t i = 0; i < produced.size(); ++i)
      if (!out.find(step.out[i]))
        out.objects.emplace_back(step.out[i], produced[i]);
  }
  return out;
}

}  // namespace origami::folds
