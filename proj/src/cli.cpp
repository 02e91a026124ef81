#include "babylon/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "babylon/error.hpp"
#include "babylon/expression.hpp"
#include "babylon/geometry.hpp"
#include "babylon/problem_file.hpp"
#include "babylon/replay.hpp"
#include "babylon/sumprod.hpp"

namespace babylon::cli {

namespace {

namespace geo = babylon::geometry;

// n/d with both parts in sexagesimal; plain numeral for integers.
std::string fraction_text(const SexValue& v) {
  if (v.is_integer()) return to_sexagesimal(v);
  return to_sexagesimal(SexValue(v.numerator())) + "/" + to_sexagesimal(SexValue(v.denominator()));
}

// "name=root" when the squared quantity has a rational root, else "name^2=n/d".
std::string squared_text(std::string_view name, const SexValue& sq) {
  try {
    return std::string(name) + "=" + sqrt_exact(sq).to_string();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAPerfectSquare) throw;
    return std::string(name) + "^2=" + fraction_text(sq);
  }
}

geo::Coord parse_coord(std::string_view text) {
  const bool negative = !text.empty() && text.front() == '-';
  const SexValue magnitude = parse_value(negative ? text.substr(1) : text);
  return negative ? geo::Coord(-magnitude.rational()) : magnitude.rational();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_eval(const std::vector<std::string>& words, std::ostream& out) {
  std::string expr;
  for (const auto& w : words) {
    if (!expr.empty()) expr += ' ';
    expr += w;
  }
  out << to_sexagesimal(evaluate_expression(expr)) << '\n';
  return kSuccess;
}

int cmd_replay(const std::string& file, const std::string& expect, bool attested_only, std::ostream& out,
               std::ostream& err) {
  const ProblemFile pf = ProblemFile::load(file);
  pf.require_exactly({"p1", "p2", "p3"});
  const Smt18Problem prob{pf.get("p1"), pf.get("p2"), pf.get("p3")};

  const auto [sol, trace] = solve_smt18(prob);
  out << format_trace(trace);
  out << "# solution x=" << sol.x << " y=" << sol.y << " z=" << sol.z << " w=" << sol.w << '\n';
  for (const auto& check : verify_solution(sol, prob).checks) {
    out << "# check " << check.name << '=' << (check.passed ? "pass" : "fail") << '\n';
  }

  if (expect.empty()) return kSuccess;
  const Trace expected = expect == "canonical" ? canonical_trace() : parse_trace(read_file(expect));
  const TraceDiff diff = diff_trace(trace, expected, attested_only);
  if (diff.empty()) return kSuccess;
  err << diff.to_string();
  return kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sexagesimal arithmetic and the SMT No. 18 replay", "babylon"};
  app.require_subcommand(1);

  std::vector<std::string> eval_words;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression exactly");
  eval->add_option("expr", eval_words, "numerals, + - * /, recip(), sqrt(), parentheses")->required();

  std::string replay_file;
  std::string expect;
  bool attested_only = false;
  auto* replay = app.add_subcommand("replay", "Replay the tablet procedure on a problem file");
  replay->add_option("file", replay_file, "problem file with p1, p2, p3")->required();
  replay->add_option("--expect", expect, "trace file to diff against, or 'canonical'");
  replay->add_flag("--attested-only", attested_only, "with --expect, compare attested steps only");

  std::vector<std::string> solve_args;
  auto* solve = app.add_subcommand("solve", "Completing-the-square solvers");
  solve->require_subcommand(1);
  auto* sumprod = solve->add_subcommand("sumprod", "pair from sum s and product p");
  sumprod->add_option("args", solve_args, "<s> <p>")->required()->expected(2);
  auto* product_ratio = solve->add_subcommand("product_ratio", "x*y = p with x = k*y");
  product_ratio->add_option("args", solve_args, "<p> <k>")->required()->expected(2);

  std::vector<std::string> geom_args;
  auto* geom = app.add_subcommand("geom", "Intercept-theorem geometry");
  geom->require_subcommand(1);
  auto* fourth = geom->add_subcommand("fourth", "x = a*c/b");
  fourth->add_option("args", geom_args, "<a> <b> <c>")->required()->expected(3);
  auto* transversal = geom->add_subcommand("transversal", "w = z*y/(x+y)");
  transversal->add_option("args", geom_args, "<x> <y> <z>")->required()->expected(3);
  auto* bisect = geom->add_subcommand("bisect", "area-bisecting transversal of a trapezoid");
  bisect->add_option("args", geom_args, "<a> <b> <h>")->required()->expected(3);
  auto* intercept = geom->add_subcommand("intercept", "check an intercept-theorem configuration");
  intercept->add_option("args", geom_args, "<ox> <oy> <ax> <ay> <bx> <by> <cx> <cy> <dx> <dy>")
      ->required()
      ->expected(10);

  std::vector<std::string> argv_store{"babylon"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*eval) return cmd_eval(eval_words, out);
    if (*replay) return cmd_replay(replay_file, expect, attested_only, out, err);
    if (*sumprod) {
      const auto [sol, trace] = solve_sum_product({parse_value(solve_args[0]), parse_value(solve_args[1])});
      out << sol.larger << "  " << sol.smaller << '\n';
      return kSuccess;
    }
    if (*product_ratio) {
      const auto sol = solve_product_ratio(parse_value(solve_args[0]), RatioConstraint(parse_value(solve_args[1])));
      out << sol.x << "  " << sol.y << '\n';
      return kSuccess;
    }
    if (*intercept) {
      std::vector<geo::Coord> c;
      for (const auto& a : geom_args) c.push_back(parse_coord(a));
      const geo::InterceptConfig cfg{{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]}, {c[8], c[9]}};
      const auto r = geo::check_intercept(cfg);
      out << "holds=" << (r.holds ? "yes" : "no") << " case="
          << (r.position == geo::ApexPosition::apex_between ? "apex_between" : "apex_outside") << ' '
          << squared_text("ratio", r.ratio_squared) << '\n';
      return r.holds ? kSuccess : kMismatch;
    }
    std::vector<SexValue> v;
    for (const auto& a : geom_args) v.push_back(parse_value(a));
    if (*fourth) {
      out << geo::intercept_fourth(v[0], v[1], v[2]) << '\n';
    } else if (*transversal) {
      out << geo::transversal_w(v[0], v[1], v[2]) << '\n';
    } else if (*bisect) {
      const auto b = geo::bisect_trapezoid(geo::TrapezoidSpec(v[0], v[1], v[2]));
      out << squared_text("d", b.d_sq) << " upper=" << b.upper_area << " lower=" << b.lower_area << '\n';
    }
    return kSuccess;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kInputError : kDomainError;
  }
}

}  // namespace babylon::cli
