// Command-line front end: runs .ori construction scripts, exposes the cubic /
// quartic solvers and field classifiers, and renders figures as SVG.
#include <CLI11.hpp>

#include "origami/fields.hpp"
#include "origami/render.hpp"
#include "origami/script.hpp"
#include "origami/solvers.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace origami;

// exit codes: 0 ok, 2 parse, 3 eval/domain, 4 assertion, 5 precision, 64 usage
constexpr int kExitParse = 2;
constexpr int kExitEval = 3;
constexpr int kExitAssert = 4;
constexpr int kExitPrecision = 5;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExactReal literal(const std::string& text) {
  try {
    return script::parse_literal(text);
  } catch (const script::SourceError& e) {
    throw UsageError("bad literal '" + text + "': " + e.what());
  }
}

Rational rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("bad rational '" + text + "'");
  }
}

// six affine coefficients of a x^2 + b xy + c y^2 + d x + e y + f
conics::Conic conic_literal(const std::vector<std::string>& c, std::size_t off) {
  ExactReal a = literal(c[off]), b = literal(c[off + 1]), cc = literal(c[off + 2]);
  ExactReal d = literal(c[off + 3]), e = literal(c[off + 4]), f = literal(c[off + 5]);
  // from_coeffs takes a x^2 + b y^2 + c z^2 + d xy + e xz + f yz
  return conics::Conic::from_coeffs(a, cc, f, b, d, e);
}

void print_roots(const std::vector<RootMult>& roots, int digits) {
  if (roots.empty()) {
    std::cout << "no real roots\n";
    return;
  }
  for (auto& r : roots) {
    std::cout << "root: " << r.root.str() << " " << r.root.decimal(digits);
    if (r.multiplicity > 1) std::cout << " (multiplicity " << r.multiplicity << ")";
    std::cout << "\n";
  }
}

void print_field(const fields::FieldClass& fc) {
  std::cout << fields::verdict_name(fc.verdict) << "\n" << fc.certificate << "\n";
}

folds::Level level_by_name(const std::string& name) {
  if (name == "thalian") return folds::Level::Thalian;
  if (name == "pythagorean") return folds::Level::Pythagorean;
  if (name == "euclidean") return folds::Level::Euclidean;
  if (name == "origami") return folds::Level::Origami;
  if (name == "reduced") return folds::Level::Reduced;
  throw UsageError("unknown level '" + name + "'");
}

render::Viewport viewport_literal(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4) throw UsageError("--viewport needs xmin,ymin,xmax,ymax");
  return {literal(parts[0]), literal(parts[1]), literal(parts[2]), literal(parts[3])};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

// Scene for `run --svg`: every bound point and line, plus the parabolas that
// O5/O6 steps folded against (reconstructed from the trace).
render::Scene scene_from(const script::Environment& env, const folds::Trace& trace) {
  render::Scene sc;
  for (auto& [id, obj] : env.objects) {
    if (auto* p = std::get_if<geom::Point>(&obj)) sc.points.emplace_back(id, *p);
    else sc.lines.emplace_back(id, std::get<geom::Line>(obj));
  }
  auto add_parabola = [&](const std::string& focus_id, const std::string& dir_id) {
    const folds::Object* f = trace.find(focus_id);
    const folds::Object* d = trace.find(dir_id);
    if (!f || !d) return;
    conics::Conic c = conics::conic_from_parabola(std::get<geom::Point>(*f),
                                                  std::get<geom::Line>(*d));
    for (auto& [id, seen] : sc.conics)
      if (conics::same_conic(c, seen)) return;
    sc.conics.emplace_back("parabola" + std::to_string(sc.conics.size()), c);
  };
  for (auto& st : trace.steps) {
    if (st.op == "O5") add_parabola(st.args[0], st.args[1]);
    if (st.op == "O6") {
      add_parabola(st.args[0], st.args[1]);
      add_parabola(st.args[2], st.args[3]);
    }
  }
  return sc;
}

int run_command(const std::string& path, const std::string& trace_path,
                const std::string& svg_path, const std::string& viewport,
                const std::string& level, int /*digits*/) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();

  script::Program prog;
  try {
    prog = script::parse(buf.str());
  } catch (const script::SourceError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kExitParse;
  }
  if (!level.empty()) prog.level = level_by_name(level);

  auto [env, trace] = script::eval(prog);
  std::cout << "level: " << folds::level_name(prog.level) << "\n";
  std::cout << "objects: " << env.objects.size() << "\n";
  std::cout << "assertions passed: " << env.asserts_checked << "\n";

  if (!trace_path.empty()) write_file(trace_path, trace.to_json());
  if (!svg_path.empty()) {
    render::Viewport vp = viewport_literal(viewport.empty() ? "-3,-3,3,3" : viewport);
    write_file(svg_path, render::render_svg(scene_from(env, trace), vp, 640, 640));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  sign_budget().max_bits = std::int64_t(1) << 21;

  CLI::App app{"exact origami constructions: fold scripts, solvers, classifiers"};
  app.require_subcommand(1);
  int digits = 30;
  app.add_option("--digits", digits, "significant digits for decimal output")
      ->check(CLI::Range(1, 1000));

  std::string script_path, trace_path, svg_path, viewport, level;
  auto* run = app.add_subcommand("run", "evaluate a .ori construction script");
  run->add_option("script", script_path, "script path")->required();
  run->add_option("--trace", trace_path, "write the construction trace JSON");
  run->add_option("--svg", svg_path, "render all bound objects to SVG");
  run->add_option("--viewport", viewport, "xmin,ymin,xmax,ymax (with --svg)");
  run->add_option("--level", level, "override the script's construction level");

  std::vector<std::string> args;
  auto* cubic = app.add_subcommand("solve-cubic", "real roots of u^3 + a u + b");
  cubic->add_option("coeffs", args, "a b")->expected(2);
  auto* quartic =
      app.add_subcommand("solve-quartic", "real roots of x^4 + a x^2 + b x + c");
  quartic->add_option("coeffs", args, "a b c")->expected(3);
  auto* trisect = app.add_subcommand("trisect", "cosines x with 4x^3 - 3x = c");
  trisect->add_option("c", args, "cosine of the angle to trisect")->expected(1);
  auto* ngon = app.add_subcommand("ngon", "regular n-gon constructibility");
  long ngon_n = 0;
  ngon->add_option("n", ngon_n, "number of sides")->required();

  auto* classify = app.add_subcommand("classify", "field-theoretic classifiers");
  classify->require_subcommand(1);
  auto* thal = classify->add_subcommand("thalian", "is z = a + b i Thalian?");
  thal->add_option("args", args, "a b^2")->expected(2);
  bool surd = false;
  thal->add_flag("--surd", surd, "b is the irrational sqrt(b^2)");
  auto* unity = classify->add_subcommand("unity", "is e^(2 pi i / m) Thalian?");
  long unity_m = 0;
  unity->add_option("m", unity_m, "root-of-unity order")->required();
  auto* real = classify->add_subcommand("real", "is sqrt(p + q sqrt(r)) totally real?");
  real->add_option("args", args, "p q r")->expected(3);
  auto* degree =
      classify->add_subcommand("degree", "2^a 3^b degree condition (necessary)");
  degree->add_option("coeffs", args, "polynomial coefficients, constant term first")
      ->expected(-2);

  auto* dual = app.add_subcommand("dual", "dual conic of a x^2 + b xy + c y^2 + d x + e y + f");
  dual->add_option("coeffs", args, "a b c d e f")->expected(6);
  auto* tangents = app.add_subcommand("tangents", "common tangents of two conics");
  tangents->add_option("coeffs", args, "a1 .. f1 a2 .. f2")->expected(12);

  // let --digits (and any other app-level flag) appear after the subcommand
  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
    s->fallthrough();
    for (CLI::App* ss : s->get_subcommands([](const CLI::App*) { return true; }))
      ss->fallthrough();
  }

  try {
    app.parse(argc, argv);

    if (*run)
      return run_command(script_path, trace_path, svg_path, viewport, level, digits);
    if (*cubic) {
      ExactReal a = literal(args[0]), b = literal(args[1]);
      if (a.sign() == 0) {
        // u^3 = -b: one real root, in its simplest radical form
        std::vector<RootMult> roots;
        if (b.sign() == 0) roots.push_back({ExactReal(Rational(0)), 3});
        else roots.push_back({ExactReal::cbrt(-b), 1});
        print_roots(roots, digits);
      } else {
        print_roots(solvers::cubic_by_fold(a, b).first, digits);
      }
    } else if (*quartic) {
      print_roots(
          solvers::quartic_roots(literal(args[0]), literal(args[1]), literal(args[2])),
          digits);
    } else if (*trisect) {
      print_roots(solvers::trisect(literal(args[0])), digits);
    } else if (*ngon) {
      auto r = fields::ngon_constructible(ngon_n);
      std::cout << (r.constructible ? "constructible: " : "not constructible: ")
                << r.certificate << "\n";
    } else if (*thal) {
      print_field(fields::thalian_classify(rational(args[0]), rational(args[1]), !surd));
    } else if (*unity) {
      std::cout << "thalian: " << (fields::root_of_unity_thalian(unity_m) ? "yes" : "no")
                << "\n";
    } else if (*real) {
      print_field(
          fields::totally_real_quadratic(rational(args[0]), rational(args[1]),
                                         rational(args[2])));
    } else if (*degree) {
      std::vector<Rational> coeffs;
      for (auto& a : args) coeffs.push_back(rational(a));
      print_field(fields::origami_degree_check(coeffs));
    } else if (*dual) {
      conics::Conic d = conics::dual(conic_literal(args, 0));
      const char* names[] = {"a", "b", "c", "d", "e", "f"};
      ExactReal vals[] = {d.m[0], d.m[1] * ExactReal(2), d.m[4],
                          d.m[2] * ExactReal(2), d.m[5] * ExactReal(2), d.m[8]};
      for (int i = 0; i < 6; ++i)
        std::cout << names[i] << " = " << vals[i].str() << " "
                  << vals[i].decimal(digits) << "\n";
    } else if (*tangents) {
      auto ts = conics::common_tangents(conic_literal(args, 0), conic_literal(args, 6));
      if (ts.empty()) std::cout << "no common tangents\n";
      for (auto& t : ts) {
        if (t.at_infinity) {
          std::cout << "tangent: line at infinity\n";
        } else {
          std::cout << "tangent: (" << t.line.a.str() << ") x + (" << t.line.b.str()
                    << ") y + (" << t.line.c.str() << ") = 0  slope "
                    << (t.line.vertical() ? std::string("vertical")
                                          : t.line.slope().decimal(digits))
                    << "\n";
        }
      }
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const script::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == script::EvalError::Kind::AssertFailed ? kExitAssert : kExitEval;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
}
