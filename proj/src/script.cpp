#include "origami/script.hpp"

#include "origami/geom.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace origami::script {

namespace {

using folds::Level;

// ---------------------------------------------------------------------------
// tokenizer

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0, column = 0;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, column = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg, const std::string& tok) const {
    throw SourceError(line, column, msg, tok);
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      Token t;
      t.line = line;
      t.column = column;
      if (std::isalpha((unsigned char)c) || c == '_') {
        t.kind = Token::Kind::Ident;
        while (pos < src.size() &&
               (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
          t.text += src[pos], advance();
      } else if (std::isdigit((unsigned char)c)) {
        t.kind = Token::Kind::Number;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
          t.text += src[pos], advance();
      } else {
        t.kind = Token::Kind::Symbol;
        if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
          t.text = "->";
          advance();
          advance();
        } else if (c == '=' && pos + 1 < src.size() && src[pos + 1] == '=') {
          t.text = "==";
          advance();
          advance();
        } else if (std::string("()<>,=.+-*/?").find(c) != std::string::npos) {
          t.text = std::string(1, c);
          advance();
        } else {
          fail("unexpected character", std::string(1, c));
        }
      }
      out.push_back(t);
    }
    out.push_back({Token::Kind::End, "", line, column});
    return out;
  }

 private:
  void advance() {
    if (src[pos] == '\n') ++line, column = 1;
    else ++column;
    ++pos;
  }
};

// ---------------------------------------------------------------------------
// parser

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;
  // declared identifiers: id -> is_point (false: line)
  std::map<std::string, bool> ids;

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = toks[at < toks.size() ? at : toks.size() - 1];
    throw SourceError(t.line, t.column, msg, t.text);
  }
  // report at the most recently consumed token
  [[noreturn]] void fail_prev(const std::string& msg) const {
    const Token& t = toks[at > 0 ? at - 1 : 0];
    throw SourceError(t.line, t.column, msg, t.text);
  }

  const Token& peek() const { return toks[at]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_sym(const char* s) const {
    return peek().kind == Token::Kind::Symbol && peek().text == s;
  }
  bool is_kw(const char* s) const {
    return peek().kind == Token::Kind::Ident && peek().text == s;
  }
  Token take() { return toks[at++]; }
  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    ++at;
  }
  void expect_kw(const char* s) {
    if (!is_kw(s)) fail(std::string("expected '") + s + "'");
    ++at;
  }
  std::string ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected an identifier");
    return take().text;
  }

  std::string declare(bool is_point) {
    std::string id = ident();
    if (ids.count(id)) fail_prev("identifier '" + id + "' is already bound");
    ids[id] = is_point;
    return id;
  }
  std::string use(bool want_point) {
    std::string id = ident();
    auto it = ids.find(id);
    if (it == ids.end()) fail_prev("identifier '" + id + "' is not bound yet");
    if (it->second != want_point)
      fail_prev(std::string("'") + id + "' is a " + (it->second ? "point" : "line") +
                ", expected a " + (want_point ? "point" : "line"));
    return id;
  }

  // expressions -------------------------------------------------------------

  Expr expr() {
    Expr e = term();
    while (is_sym("+") || is_sym("-")) {
      std::string op = take().text;
      Expr r = term();
      Expr out;
      out.kind = op == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      out.lhs = std::make_shared<Expr>(std::move(e));
      out.rhs = std::make_shared<Expr>(std::move(r));
      e = std::move(out);
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (is_sym("*") || is_sym("/")) {
      std::string op = take().text;
      Expr r = factor();
      Expr out;
      out.kind = op == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
      out.lhs = std::make_shared<Expr>(std::move(e));
      out.rhs = std::make_shared<Expr>(std::move(r));
      e = std::move(out);
    }
    return e;
  }

  Expr factor() {
    if (is_sym("-")) {
      ++at;
      Expr out;
      out.kind = Expr::Kind::Neg;
      out.lhs = std::make_shared<Expr>(factor());
      return out;
    }
    return primary();
  }

  Expr primary() {
    if (peek().kind == Token::Kind::Number) {
      Expr e;
      e.kind = Expr::Kind::Num;
      e.num = Rational(Integer(take().text));
      return e;
    }
    if (is_kw("sqrt") || is_kw("cbrt")) {
      bool sq = peek().text == "sqrt";
      ++at;
      expect_sym("(");
      Expr inner = expr();
      expect_sym(")");
      Expr e;
      e.kind = sq ? Expr::Kind::Sqrt : Expr::Kind::Cbrt;
      e.lhs = std::make_shared<Expr>(std::move(inner));
      return e;
    }
    if (is_sym("(")) {
      ++at;
      Expr e = expr();
      expect_sym(")");
      return e;
    }
    if (peek().kind == Token::Kind::Ident) {
      std::string id = ident();
      auto it = ids.find(id);
      if (it == ids.end()) fail_prev("identifier '" + id + "' is not bound yet");
      expect_sym(".");
      std::string field = ident();
      bool ok = it->second ? (field == "x" || field == "y")
                           : (field == "a" || field == "b" || field == "c");
      if (!ok) fail_prev("'" + id + "' has no component '" + field + "'");
      Expr e;
      e.kind = Expr::Kind::Ref;
      e.ref = id;
      e.field = field;
      return e;
    }
    fail("expected an expression");
  }

  // statements --------------------------------------------------------------

  Program run() {
    Program prog;
    bool first = true, level_seen = false;
    while (!at_end()) {
      if (is_kw("level")) {
        if (!first || level_seen) fail("'level' must be the first statement");
        ++at;
        std::string name = ident();
        if (name == "thalian") prog.level = Level::Thalian;
        else if (name == "pythagorean") prog.level = Level::Pythagorean;
        else if (name == "euclidean") prog.level = Level::Euclidean;
        else if (name == "origami") prog.level = Level::Origami;
        else if (name == "reduced") prog.level = Level::Reduced;
        else { --at; fail("unknown level"); }
        level_seen = true;
        first = false;
        continue;
      }
      first = false;
      if (is_kw("point")) prog.statements.push_back(point_stmt());
      else if (is_kw("line")) prog.statements.push_back(line_stmt());
      else if (is_kw("fold")) prog.statements.push_back(fold_stmt());
      else if (is_kw("macro")) prog.statements.push_back(macro_stmt());
      else if (is_kw("assert")) prog.statements.push_back(assert_stmt());
      else fail("expected a statement");
    }
    return prog;
  }

  Statement point_stmt() {
    expect_kw("point");
    // the binder is declared only after the right-hand side is resolved
    std::string id = ident();
    if (ids.count(id)) fail_prev("identifier '" + id + "' is already bound");
    expect_sym("=");
    if (is_kw("meet")) {
      ++at;
      StMeet s;
      s.l1 = use(false);
      s.l2 = use(false);
      s.id = id;
      ids[id] = true;
      return s;
    }
    expect_sym("(");
    StPoint s;
    s.x = expr();
    expect_sym(",");
    s.y = expr();
    expect_sym(")");
    s.id = id;
    ids[id] = true;
    return s;
  }

  Statement line_stmt() {
    expect_kw("line");
    std::string id = ident();
    if (ids.count(id)) fail_prev("identifier '" + id + "' is already bound");
    expect_sym("=");
    StLine s;
    s.id = id;
    if (is_kw("through")) {
      ++at;
      s.form = StLine::Form::Through;
      s.p1 = use(true);
      s.p2 = use(true);
    } else if (is_kw("bisector")) {
      ++at;
      s.form = StLine::Form::Bisector;
      s.p1 = use(true);
      s.p2 = use(true);
    } else if (is_sym("<")) {
      ++at;
      s.form = StLine::Form::Coeffs;
      s.a = expr();
      expect_sym(",");
      s.b = expr();
      expect_sym(",");
      s.c = expr();
      expect_sym(">");
    } else {
      fail("expected 'through', 'bisector' or '<a, b, c>'");
    }
    ids[id] = false;
    return s;
  }

  Statement fold_stmt() {
    expect_kw("fold");
    std::string ax = ident();
    if (ax.size() != 2 || ax[0] != 'O' || ax[1] < '1' || ax[1] > '6') {
      --at;
      fail("unknown axiom (expected O1..O6)");
    }
    StFold s;
    s.axiom = ax[1] - '0';
    switch (s.axiom) {
      case 1:
      case 3:
        s.args = {use(true), use(true)};
        break;
      case 2:
      case 4:
        s.args = {use(false), use(false)};
        break;
      case 5: {
        std::string p = use(true);
        expect_sym("->");
        std::string l = use(false);
        expect_kw("through");
        s.args = {p, l, use(true)};
        break;
      }
      case 6: {
        std::string p = use(true);
        expect_sym("->");
        std::string l = use(false);
        expect_sym(",");
        std::string q = use(true);
        expect_sym("->");
        s.args = {p, l, q, use(false)};
        break;
      }
    }
    expect_kw("as");
    bool binds_point = s.axiom == 2;
    std::size_t max_binders = s.axiom == 6 ? 3 : (s.axiom == 4 || s.axiom == 5 ? 2 : 1);
    s.binders.push_back(declare(binds_point));
    while (is_sym(",")) {
      ++at;
      s.binders.push_back(declare(binds_point));
      if (s.binders.size() > max_binders)
        fail_prev("too many binders for axiom O" + std::to_string(s.axiom));
    }
    if (is_sym("?")) {
      ++at;
      s.optional = true;
    }
    return s;
  }

  Statement macro_stmt() {
    expect_kw("macro");
    StMacro s;
    s.name = ident();
    std::size_t nargs;
    if (s.name == "translate") nargs = 3;
    else if (s.name == "scale" || s.name == "marklen") nargs = 4;
    else { --at; fail("unknown macro (expected translate, scale or marklen)"); }
    for (std::size_t i = 0; i < nargs; ++i) s.args.push_back(use(true));
    expect_kw("as");
    s.binder = declare(true);
    return s;
  }

  Statement assert_stmt() {
    expect_kw("assert");
    StAssert s;
    s.lhs = expr();
    if (is_sym("==") || is_sym("<") || is_sym(">")) s.rel = take().text;
    else fail("expected '==', '<' or '>'");
    s.rhs = expr();
    return s;
  }
};

// ---------------------------------------------------------------------------
// pretty printing

std::string rat_str(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string expr_str(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Num: return rat_str(e.num);
    case Expr::Kind::Ref: return e.ref + "." + e.field;
    case Expr::Kind::Sqrt: return "sqrt(" + expr_str(*e.lhs) + ")";
    case Expr::Kind::Cbrt: return "cbrt(" + expr_str(*e.lhs) + ")";
    case Expr::Kind::Neg: return "-" + expr_str(*e.lhs);
    case Expr::Kind::Add: return "(" + expr_str(*e.lhs) + " + " + expr_str(*e.rhs) + ")";
    case Expr::Kind::Sub: return "(" + expr_str(*e.lhs) + " - " + expr_str(*e.rhs) + ")";
    case Expr::Kind::Mul: return "(" + expr_str(*e.lhs) + " * " + expr_str(*e.rhs) + ")";
    case Expr::Kind::Div: return "(" + expr_str(*e.lhs) + " / " + expr_str(*e.rhs) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// evaluation

ExactReal eval_expr(const Expr& e, const Environment* env) {
  switch (e.kind) {
    case Expr::Kind::Num: return ExactReal(e.num);
    case Expr::Kind::Ref: {
      if (!env) throw EvalError(EvalError::Kind::Invalid,
                                "object references are not allowed here");
      const folds::Object* obj = env->find(e.ref);
      if (!obj)
        throw EvalError(EvalError::Kind::Unbound,
                        "'" + e.ref + "' has no bound value (optional fold binder "
                        "without a solution?)");
      if (auto* p = std::get_if<geom::Point>(obj))
        return e.field == "x" ? p->x : p->y;
      auto& l = std::get<geom::Line>(*obj);
      return e.field == "a" ? l.a : e.field == "b" ? l.b : l.c;
    }
    case Expr::Kind::Sqrt: return ExactReal::sqrt(eval_expr(*e.lhs, env));
    case Expr::Kind::Cbrt: return ExactReal::cbrt(eval_expr(*e.lhs, env));
    case Expr::Kind::Neg: return -eval_expr(*e.lhs, env);
    case Expr::Kind::Add: return eval_expr(*e.lhs, env) + eval_expr(*e.rhs, env);
    case Expr::Kind::Sub: return eval_expr(*e.lhs, env) - eval_expr(*e.rhs, env);
    case Expr::Kind::Mul: return eval_expr(*e.lhs, env) * eval_expr(*e.rhs, env);
    case Expr::Kind::Div: return eval_expr(*e.lhs, env) / eval_expr(*e.rhs, env);
  }
  throw EvalError(EvalError::Kind::Invalid, "malformed expression");
}

struct Evaluator {
  folds::Engine eng;
  Environment env;

  explicit Evaluator(Level level) : eng(level) {}

  geom::Point point(const std::string& id) {
    const folds::Object* o = env.find(id);
    if (!o)
      throw EvalError(EvalError::Kind::Unbound, "'" + id + "' has no bound value");
    return std::get<geom::Point>(*o);
  }
  geom::Line line(const std::string& id) {
    const folds::Object* o = env.find(id);
    if (!o)
      throw EvalError(EvalError::Kind::Unbound, "'" + id + "' has no bound value");
    return std::get<geom::Line>(*o);
  }

  void bind_point(const std::string& id, const geom::Point& p) {
    env.objects.emplace_back(id, folds::Object(p));
  }
  void bind_line(const std::string& id, const geom::Line& l) {
    env.objects.emplace_back(id, folds::Object(l));
  }

  void operator()(const StLevel&) {}

  void operator()(const StPoint& s) {
    geom::Point p{eval_expr(s.x, &env), eval_expr(s.y, &env)};
    eng.add_point(p, s.id);
    bind_point(s.id, p);
  }

  void operator()(const StMeet& s) {
    geom::Point p = eng.O2(line(s.l1), line(s.l2));
    bind_point(s.id, p);
  }

  void operator()(const StLine& s) {
    geom::Line l;
    switch (s.form) {
      case StLine::Form::Through:
        l = geom::line_through(point(s.p1), point(s.p2));
        break;
      case StLine::Form::Bisector:
        l = geom::perp_bisector(point(s.p1), point(s.p2));
        break;
      case StLine::Form::Coeffs:
        l = geom::Line::make(eval_expr(s.a, &env), eval_expr(s.b, &env),
                             eval_expr(s.c, &env));
        break;
    }
    eng.add_line(l, s.id);
    bind_line(s.id, l);
  }

  void operator()(const StFold& s) {
    std::vector<geom::Line> lines;
    switch (s.axiom) {
      case 1:
        lines.push_back(eng.O1(point(s.args[0]), point(s.args[1])));
        break;
      case 2:
        bind_point(s.binders[0], eng.O2(line(s.args[0]), line(s.args[1])));
        return;
      case 3:
        lines.push_back(eng.O3(point(s.args[0]), point(s.args[1])));
        break;
      case 4:
        lines = eng.O4(line(s.args[0]), line(s.args[1])).lines;
        break;
      case 5:
        lines = eng.O5(point(s.args[0]), line(s.args[1]), point(s.args[2])).lines;
        break;
      case 6:
        lines = eng.O6(point(s.args[0]), line(s.args[1]), point(s.args[2]),
                       line(s.args[3]))
                    .lines;
        break;
    }
    if (lines.size() < s.binders.size() && !s.optional)
      throw EvalError(EvalError::Kind::NoSolution,
                      "axiom O" + std::to_string(s.axiom) + " produced " +
                          std::to_string(lines.size()) + " line(s) for " +
                          std::to_string(s.binders.size()) + " binder(s)");
    for (std::size_t i = 0; i < s.binders.size() && i < lines.size(); ++i)
      bind_line(s.binders[i], lines[i]);
  }

  void operator()(const StMacro& s) {
    geom::Point r;
    if (s.name == "translate")
      r = eng.macro_translate(point(s.args[0]), point(s.args[1]), point(s.args[2]));
    else if (s.name == "scale")
      r = eng.macro_scale(point(s.args[0]), point(s.args[1]), point(s.args[2]),
                          point(s.args[3]));
    else
      r = eng.macro_mark_length(point(s.args[0]), point(s.args[1]),
                                point(s.args[2]), point(s.args[3]));
    bind_point(s.binder, r);
  }

  void operator()(const StAssert& s) {
    ExactReal lhs = eval_expr(s.lhs, &env);
    ExactReal rhs = eval_expr(s.rhs, &env);
    int c = compare(lhs, rhs);
    bool ok = s.rel == "==" ? c == 0 : s.rel == "<" ? c < 0 : c > 0;
    ++env.asserts_checked;
    if (!ok)
      throw EvalError(EvalError::Kind::AssertFailed,
                      "assertion failed: " + expr_str(s.lhs) + " " + s.rel + " " +
                          expr_str(s.rhs) + "\n  lhs = " + lhs.str() + " " +
                          lhs.decimal(30) + "\n  rhs = " + rhs.str() + " " +
                          rhs.decimal(30));
  }
};

}  // namespace

const folds::Object* Environment::find(const std::string& id) const {
  for (auto& [name, obj] : objects)
    if (name == id) return &obj;
  return nullptr;
}

Program parse(const std::string& text) {
  Parser p{Lexer(text).run()};
  return p.run();
}

std::string Program::pretty() const {
  std::ostringstream os;
  os << "level " << folds::level_name(level) << "\n";
  for (auto& st : statements) {
    std::visit(
        [&](auto&& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, StLevel>) {
          } else if constexpr (std::is_same_v<T, StPoint>) {
            os << "point " << s.id << " = (" << expr_str(s.x) << ", "
               << expr_str(s.y) << ")";
          } else if constexpr (std::is_same_v<T, StMeet>) {
            os << "point " << s.id << " = meet " << s.l1 << " " << s.l2;
          } else if constexpr (std::is_same_v<T, StLine>) {
            os << "line " << s.id << " = ";
            switch (s.form) {
              case StLine::Form::Through: os << "through " << s.p1 << " " << s.p2; break;
              case StLine::Form::Bisector: os << "bisector " << s.p1 << " " << s.p2; break;
              case StLine::Form::Coeffs:
                os << "<" << expr_str(s.a) << ", " << expr_str(s.b) << ", "
                   << expr_str(s.c) << ">";
                break;
            }
          } else if constexpr (std::is_same_v<T, StFold>) {
            os << "fold O" << s.axiom << " ";
            if (s.axiom == 5)
              os << s.args[0] << " -> " << s.args[1] << " through " << s.args[2];
            else if (s.axiom == 6)
              os << s.args[0] << " -> " << s.args[1] << ", " << s.args[2] << " -> "
                 << s.args[3];
            else
              os << s.args[0] << " " << s.args[1];
            os << " as ";
            for (std::size_t i = 0; i < s.binders.size(); ++i)
              os << (i ? ", " : "") << s.binders[i];
            if (s.optional) os << "?";
          } else if constexpr (std::is_same_v<T, StMacro>) {
            os << "macro " << s.name;
            for (auto& a : s.args) os << " " << a;
            os << " as " << s.binder;
          } else if constexpr (std::is_same_v<T, StAssert>) {
            os << "assert " << expr_str(s.lhs) << " " << s.rel << " "
               << expr_str(s.rhs);
          }
        },
        st);
    os << "\n";
  }
  return os.str();
}

std::pair<Environment, folds::Trace> eval(const Program& p) {
  Evaluator ev(p.level);
  for (auto& st : p.statements) std::visit(ev, st);
  return {std::move(ev.env), std::move(ev.eng.trace())};
}

ExactReal parse_literal(const std::string& text) {
  Parser p{Lexer(text).run()};
  Expr e = p.expr();
  if (!p.at_end()) p.fail("trailing input after expression");
  return eval_expr(e, nullptr);
}

}  // namespace origami::script
