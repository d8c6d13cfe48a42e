#pragma once

#include "origami/geom.hpp"

#include <string>
#include <variant>
#include <vector>

namespace origami::folds {

using geom::Line;
using geom::Point;

// Axiom availability modes; Reduced is the {O2, O3, O5, O6} basis that is
// provably equivalent to the full set.
enum class Level { Thalian, Pythagorean, Euclidean, Origami, Reduced };

const char* level_name(Level level);

struct FoldResult {
  // sorted by slope ascending, vertical lines last; entries pairwise distinct
  std::vector<Line> lines;
  // solutions form a continuum or include the line at infinity
  bool degenerate = false;
};

using Object = std::variant<Point, Line>;

struct TraceStep {
  std::string op;
  std::vector<std::string> args;
  std::vector<std::string> out;
};

// Append-only construction record.  Objects are id -> Point|Line in creation
// order; every id referenced by a step precedes its use.
struct Trace {
  std::vector<TraceStep> steps;
  std::vector<std::pair<std::string, Object>> objects;

  const Object* find(const std::string& id) const;
  // exact expression strings plus 50-digit decimal approximations
  std::string to_json() const;
};

// Re-executes the steps from the trace's seed objects; the result serializes
// byte-identically when the trace came from an Engine run.
Trace replay(const Trace& t);

class Engine {
 public:
  explicit Engine(Level level = Level::Origami) : level_(level) {}

  Level level() const { return level_; }
  Trace& trace() { return trace_; }
  const Trace& trace() const { return trace_; }

  // seed registration; auto-assigns an id when none is given
  std::string add_point(const Point& p, const std::string& id = "");
  std::string add_line(const Line& l, const std::string& id = "");

  Line O1(const Point& p, const Point& q);
  Point O2(const Line& l, const Line& m);
  Line O3(const Point& p, const Point& q);
  FoldResult O4(const Line& l, const Line& m);
  FoldResult O5(const Point& p, const Line& l, const Point& q);
  FoldResult O6(const Point& p, const Line& l, const Point& q, const Line& m);

  // segment AB transported to start at P (pure O1/O2/O3 steps)
  Point macro_translate(const Point& p, const Point& a, const Point& b);
  // D with AD : AP = AB : AC for collinear A, B, C (directed similarity)
  Point macro_scale(const Point& a, const Point& b, const Point& c, const Point& p);
  // point on the ray at exact distance |AB| from its origin
  Point macro_mark_length(const Point& a, const Point& b, const Point& origin,
                          const Point& direction);

  Line derive_O1_from_O2_O3_O5(const Point& p, const Point& q);
  FoldResult derive_O4_from_O5(const Line& l, const Line& m);

 private:
  void require(const char* op) const;
  Line line_via_folds(const Point& p, const Point& q);
  Point mid_via_folds(const Point& p, const Point& q);
  Point half_translate(const Point& p, const Point& a, const Point& b);
  std::string intern(const Object& obj);
  std::string record(const char* op, const std::vector<Object>& args,
                     const std::vector<Object>& out);

  Level level_;
  Trace trace_;
  int next_id_ = 0;
};

}  // namespace origami::folds
