// Command-line front end: construction, convolution, character evaluation,
// norm intervals, cone queries, and self-checking demos over the JSON
// formats. Results go to stdout as canonical JSON; errors go to stderr as
// {"error":{"code":..,"message":..}} with exit codes 2 (parse failure),
// 3 (precondition violation), 4 (numeric overflow).
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "convalg/character.hpp"
#include "convalg/cone.hpp"
#include "convalg/errors.hpp"
#include "convalg/finite_support.hpp"
#include "convalg/grid.hpp"
#include "convalg/json_io.hpp"
#include "convalg/lazy_series.hpp"
#include "convalg/monoid.hpp"
#include "convalg/summable.hpp"

namespace {

using namespace convalg;
namespace io = convalg::io;
using io::json;

constexpr double kPi = 3.14159265358979323846;

json load_doc(const std::string& source) {
  if (!source.empty() && source.front() == '{') return io::parse(source);
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open input \"" + source + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return io::parse(buffer.str());
}

void emit(const json& doc, const std::string& out_path) {
  const std::string text = io::canonical_dump(doc) + "\n";
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot open output \"" + out_path + "\"");
  out << text;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw ParseError("");
    return v;
  } catch (const ParseError&) {
    throw ParseError(std::string("invalid number in ") + what + ": \"" + text + "\"");
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid number in ") + what + ": \"" + text + "\"");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_double(item, what));
  if (out.empty()) throw ParseError(std::string(what) + " must be a comma-separated list");
  return out;
}

// complex literal: "2", "-0.5", "1+2i", "0.5-0.25i", "i", "-i", "2i"
Complex parse_complex_literal(std::string text, const char* what) {
  if (text.empty()) throw ParseError(std::string("empty complex literal in ") + what);
  if (text.back() != 'i') return {parse_double(text, what), 0.0};
  text.pop_back();
  // locate the sign separating real and imaginary parts (skipping a
  // leading sign and exponent signs)
  std::size_t sep = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      sep = k;
      break;
    }
  }
  std::string real_part;
  std::string imag_part;
  if (sep == std::string::npos) {
    imag_part = text;
  } else {
    real_part = text.substr(0, sep);
    imag_part = text.substr(sep);
  }
  double imag = 1.0;
  if (imag_part.empty() || imag_part == "+") {
    imag = 1.0;
  } else if (imag_part == "-") {
    imag = -1.0;
  } else {
    imag = parse_double(imag_part, what);
  }
  const double real = real_part.empty() ? 0.0 : parse_double(real_part, what);
  return {real, imag};
}

// "--char z=..." inline base (comma-separated complex literals), or a path
// to a character JSON document
Character parse_character_arg(const std::string& text, const MonoidDescriptor& m) {
  if (text.rfind("z=", 0) == 0) {
    std::vector<Complex> base;
    for (const std::string& item : split(text.substr(2), ',')) {
      base.push_back(parse_complex_literal(item, "--char"));
    }
    return Character(m, std::move(base));
  }
  const Character chi = io::character_from_json(load_doc(text));
  if (chi.monoid() != m) throw ValidationError("character monoid does not match the function");
  return chi;
}

// named coefficient rules on N: ones | geometric:r | delta:a | poly:[...]
LazyFunction parse_rule(const std::string& text) {
  const MonoidDescriptor m = nat_monoid();
  if (text == "ones") return LazyFunction::ones(m);
  if (text.rfind("geometric:", 0) == 0) {
    return LazyFunction::geometric_rule(m, parse_double(text.substr(10), "geometric rule"));
  }
  if (text.rfind("delta:", 0) == 0) {
    const double site = parse_double(text.substr(6), "delta rule");
    const auto a = static_cast<std::int64_t>(site);
    if (static_cast<double>(a) != site) throw ParseError("delta site must be an integer");
    return LazyFunction::delta_rule(m, Element{a});
  }
  if (text.rfind("poly:", 0) == 0) {
    const json coeffs = io::parse(text.substr(5));
    if (!coeffs.is_array()) throw ParseError("poly rule expects a JSON array of coefficients");
    FiniteSupportFunction f(m);
    std::int64_t degree = 0;
    for (const auto& c : coeffs) {
      Complex v;
      if (c.is_number()) {
        v = {c.get<double>(), 0.0};
      } else if (c.is_object()) {
        v = {c.value("re", 0.0), c.value("im", 0.0)};
      } else {
        throw ParseError("poly coefficient must be a number or {re, im}");
      }
      if (v != Complex{0.0, 0.0}) f.add_term(Element{degree}, v);
      ++degree;
    }
    return LazyFunction::from_finite(std::move(f));
  }
  throw ParseError("unknown rule \"" + text + "\" (use ones, geometric:r, delta:a, poly:[...])");
}

json check_entry(const std::string& name, double error, double tolerance) {
  return json{{"name", name}, {"error", error}, {"tolerance", tolerance},
              {"pass", !(error > tolerance)}};
}

json demo_poly() {
  const MonoidDescriptor m = nat_monoid();
  FiniteSupportFunction one_plus_x(m);
  one_plus_x.add_term(Element{0}, {1.0, 0.0});
  one_plus_x.add_term(Element{1}, {1.0, 0.0});
  const FiniteSupportFunction square = convolve(one_plus_x, one_plus_x);

  double coeff_err = 0.0;
  const double expected[] = {1.0, 2.0, 1.0};
  for (int j = 0; j <= 2; ++j) {
    coeff_err = std::max(coeff_err, std::abs(square.coeff(Element{j}) - Complex{expected[j], 0.0}));
  }
  const Complex at_two = evaluate(Character(m, {{2.0, 0.0}}), square);

  json checks = json::array();
  checks.push_back(check_entry("(1+x)^2 coefficients are (1, 2, 1)", coeff_err, 0.0));
  checks.push_back(check_entry("value at x = 2 is 9", std::abs(at_two - Complex{9.0, 0.0}), 1e-12));
  return json{{"demo", "poly"}, {"result", io::to_json(square)}, {"checks", std::move(checks)}};
}

json demo_wiener() {
  const MonoidDescriptor m = int_monoid();
  FiniteSupportFunction f(m);
  f.add_term(Element{-1}, {0.25, 0.0});
  f.add_term(Element{0}, {0.5, 0.0});
  f.add_term(Element{1}, {0.25, 0.0});
  const SummableFunction s(f, 0.0);

  const auto at_angle = [&](double theta) {
    return evaluate(Character(m, {{std::cos(theta), std::sin(theta)}}), s).value;
  };
  // phi(f) at z = e^{i theta} is 0.5 + 0.5 cos(theta)
  const Complex at_pi = at_angle(kPi);
  const Complex at_third = at_angle(kPi / 3.0);

  json checks = json::array();
  checks.push_back(check_entry("value at theta = pi is 0", std::abs(at_pi), 1e-12));
  checks.push_back(check_entry("value at theta = pi/3 is 3/4",
                               std::abs(at_third - Complex{0.75, 0.0}), 1e-12));
  checks.push_back(check_entry("norm interval is the point 1",
                               std::abs(s.l1_norm_interval().upper - 1.0), 0.0));
  return json{{"demo", "wiener"}, {"checks", std::move(checks)}};
}

json demo_inverse() {
  const LazyFunction ones = LazyFunction::ones(nat_monoid());
  FiniteSupportFunction steps(nat_monoid());
  steps.add_term(Element{0}, {1.0, 0.0});
  steps.add_term(Element{1}, {-1.0, 0.0});
  const LazyFunction one_minus_x = LazyFunction::from_finite(std::move(steps));

  double err_at_zero = std::abs(total_convolve_at(ones, one_minus_x, Element{0}) - Complex{1.0, 0.0});
  double err_positive = 0.0;
  for (std::int64_t z = 1; z <= 64; ++z) {
    err_positive = std::max(err_positive, std::abs(total_convolve_at(ones, one_minus_x, Element{z})));
  }
  json checks = json::array();
  checks.push_back(check_entry("(sum x^j)(1 - x) is 1 at 0", err_at_zero, 0.0));
  checks.push_back(check_entry("(sum x^j)(1 - x) vanishes for 1 <= z <= 64", err_positive, 0.0));
  return json{{"demo", "inverse"}, {"checks", std::move(checks)}};
}

json demo_laplace(double h, double extent) {
  GridGeometry geom{1, extent, h, {}};
  const GridFunction f = GridFunction::sample(
      geom, [](const std::vector<double>& x) { return Complex{std::exp(-x[0]), 0.0}; },
      ConvexCone(1, {{1.0}}));
  const Complex value = char_evaluate(ExpCharacter{{Complex{-1.0, 0.0}}}, f);
  const double budget = h + std::exp(-2.0 * extent);
  json checks = json::array();
  checks.push_back(check_entry("integral of e^{-2x} over the cone is 1/2",
                               std::abs(value - Complex{0.5, 0.0}), budget));
  return json{{"demo", "laplace"},
              {"value", io::complex_to_json(value)},
              {"h", h},
              {"extent", extent},
              {"checks", std::move(checks)}};
}

// returns process exit code
int finish_demo(json report, const std::string& out_path) {
  bool pass = true;
  for (const auto& c : report["checks"]) pass = pass && c["pass"].get<bool>();
  report["pass"] = pass;
  emit(report, out_path);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convolution algebras on discrete semigroups and convex cones"};
  app.require_subcommand(1);
  int exit_code = 0;

  // conv A B
  auto* conv_cmd = app.add_subcommand("conv", "convolve two functions (finite-support or summable)");
  std::string conv_a, conv_b, conv_out;
  conv_cmd->add_option("a", conv_a, "first function (path or inline JSON)")->required();
  conv_cmd->add_option("b", conv_b, "second function (path or inline JSON)")->required();
  conv_cmd->add_option("--out", conv_out, "write the result to a file");
  conv_cmd->callback([&] {
    const json da = load_doc(conv_a);
    const json db = load_doc(conv_b);
    if (io::is_summable_doc(da) || io::is_summable_doc(db)) {
      const SummableFunction product =
          convolve(io::summable_from_json(da), io::summable_from_json(db));
      emit(io::to_json(product), conv_out);
    } else {
      const FiniteSupportFunction product =
          convolve(io::finite_support_from_json(da), io::finite_support_from_json(db));
      emit(io::to_json(product), conv_out);
    }
  });

  // eval --char SPEC F
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a character functional on a function");
  std::string eval_char, eval_f, eval_out;
  eval_cmd->add_option("--char", eval_char, "character: z=<complex,...> or a JSON path")->required();
  eval_cmd->add_option("f", eval_f, "function (path or inline JSON)")->required();
  eval_cmd->add_option("--out", eval_out, "write the result to a file");
  eval_cmd->callback([&] {
    const json doc = load_doc(eval_f);
    if (io::is_summable_doc(doc)) {
      const SummableFunction f = io::summable_from_json(doc);
      const Character chi = parse_character_arg(eval_char, f.monoid());
      const CharacterSum got = evaluate(chi, f);
      emit(json{{"value", io::complex_to_json(got.value)}, {"error_bound", got.error_bound}},
           eval_out);
    } else {
      const FiniteSupportFunction f = io::finite_support_from_json(doc);
      const Character chi = parse_character_arg(eval_char, f.monoid());
      emit(json{{"value", io::complex_to_json(evaluate(chi, f))}}, eval_out);
    }
  });

  // norm F
  auto* norm_cmd = app.add_subcommand("norm", "l1 norm interval of a summable function");
  std::string norm_f, norm_out;
  norm_cmd->add_option("f", norm_f, "function (path or inline JSON)")->required();
  norm_cmd->add_option("--out", norm_out, "write the result to a file");
  norm_cmd->callback([&] {
    const SummableFunction f = io::summable_from_json(load_doc(norm_f));
    const NormInterval interval = f.l1_norm_interval();
    emit(json{{"lower", interval.lower}, {"upper", interval.upper}}, norm_out);
  });

  // total-conv RULE1 RULE2 (--at | --upto)
  auto* total_cmd = app.add_subcommand("total-conv", "total convolution of coefficient rules on N");
  std::string total_r1, total_r2, total_out;
  std::int64_t total_at = 0, total_upto = 0;
  auto* at_opt = total_cmd->add_option("--at", total_at, "evaluate the product at this point");
  auto* upto_opt =
      total_cmd->add_option("--upto", total_upto, "materialize the product through this point");
  total_cmd->add_option("rule1", total_r1, "ones | geometric:r | delta:a | poly:[...]")->required();
  total_cmd->add_option("rule2", total_r2, "ones | geometric:r | delta:a | poly:[...]")->required();
  total_cmd->add_option("--out", total_out, "write the result to a file");
  total_cmd->callback([&] {
    const LazyFunction f1 = parse_rule(total_r1);
    const LazyFunction f2 = parse_rule(total_r2);
    if (at_opt->count() > 0) {
      const Complex value = total_convolve_at(f1, f2, Element{total_at});
      emit(json{{"at", total_at}, {"value", io::complex_to_json(value)}}, total_out);
    } else if (upto_opt->count() > 0) {
      const LazyFunction product(nat_monoid(), [f1, f2](const Element& z) {
        return total_convolve_at(f1, f2, z);
      });
      emit(io::to_json(truncate(product, Element{total_upto})), total_out);
    } else {
      throw ParseError("total-conv needs --at or --upto");
    }
  });

  // cone-contains CONE --point X
  auto* contains_cmd = app.add_subcommand("cone-contains", "cone membership test");
  std::string contains_cone, contains_point, contains_out;
  double contains_tol = 1e-9;
  contains_cmd->add_option("cone", contains_cone, "cone (path or inline JSON)")->required();
  contains_cmd->add_option("--point", contains_point, "comma-separated coordinates")->required();
  contains_cmd->add_option("--tol", contains_tol, "membership tolerance");
  contains_cmd->add_option("--out", contains_out, "write the result to a file");
  contains_cmd->callback([&] {
    const ConvexCone cone = io::cone_from_json(load_doc(contains_cone));
    const std::vector<double> x = parse_double_list(contains_point, "--point");
    emit(json{{"contains", cone.contains(x, contains_tol)}}, contains_out);
  });

  // dual-contains CONE --point Y
  auto* dual_cmd = app.add_subcommand("dual-contains", "dual-cone membership test");
  std::string dual_cone, dual_point, dual_out;
  double dual_tol = 1e-9;
  dual_cmd->add_option("cone", dual_cone, "cone (path or inline JSON)")->required();
  dual_cmd->add_option("--point", dual_point, "comma-separated coordinates")->required();
  dual_cmd->add_option("--tol", dual_tol, "membership tolerance");
  dual_cmd->add_option("--out", dual_out, "write the result to a file");
  dual_cmd->callback([&] {
    const ConvexCone cone = io::cone_from_json(load_doc(dual_cone));
    const std::vector<double> y = parse_double_list(dual_point, "--point");
    emit(json{{"contains", cone.dual_contains(y, dual_tol)}}, dual_out);
  });

  // cone-conv F G
  auto* gridconv_cmd = app.add_subcommand("cone-conv", "grid convolution of sampled densities");
  std::string gridconv_a, gridconv_b, gridconv_out;
  gridconv_cmd->add_option("a", gridconv_a, "grid function (path or inline JSON)")->required();
  gridconv_cmd->add_option("b", gridconv_b, "grid function (path or inline JSON)")->required();
  gridconv_cmd->add_option("--out", gridconv_out, "write the result to a file");
  gridconv_cmd->callback([&] {
    const GridFunction a = io::grid_from_json(load_doc(gridconv_a));
    const GridFunction b = io::grid_from_json(load_doc(gridconv_b));
    emit(io::to_json(grid_convolve(a, b)), gridconv_out);
  });

  // laplace F --zeta re,im,...
  auto* laplace_cmd =
      app.add_subcommand("laplace", "exponential-character pairing of a grid function");
  std::string laplace_f, laplace_zeta, laplace_out;
  laplace_cmd->add_option("f", laplace_f, "grid function (path or inline JSON)")->required();
  laplace_cmd->add_option("--zeta", laplace_zeta, "re,im per axis")->required();
  laplace_cmd->add_option("--out", laplace_out, "write the result to a file");
  laplace_cmd->callback([&] {
    const GridFunction f = io::grid_from_json(load_doc(laplace_f));
    const std::vector<double> parts = parse_double_list(laplace_zeta, "--zeta");
    if (parts.size() != 2 * static_cast<std::size_t>(f.geometry().dim)) {
      throw ParseError("--zeta needs re,im for each axis");
    }
    ExpCharacter chi;
    for (std::size_t a = 0; a < parts.size(); a += 2) {
      chi.zeta.emplace_back(parts[a], parts[a + 1]);
    }
    emit(json{{"value", io::complex_to_json(char_evaluate(chi, f))}}, laplace_out);
  });

  // demo NAME
  auto* demo_cmd = app.add_subcommand("demo", "reproducible self-checking demos");
  std::string demo_name, demo_out;
  double demo_h = 0.001, demo_extent = 20.0;
  demo_cmd->set_help_flag("--help", "print help");  // frees -h for the spacing flag
  demo_cmd->add_option("name", demo_name, "poly | wiener | inverse | laplace")->required();
  demo_cmd->add_option("--h", demo_h, "grid spacing (laplace demo)");
  demo_cmd->add_option("--extent", demo_extent, "box extent (laplace demo)");
  demo_cmd->add_option("--out", demo_out, "write the report to a file");
  demo_cmd->callback([&] {
    if (demo_name == "poly") {
      exit_code = finish_demo(demo_poly(), demo_out);
    } else if (demo_name == "wiener") {
      exit_code = finish_demo(demo_wiener(), demo_out);
    } else if (demo_name == "inverse") {
      exit_code = finish_demo(demo_inverse(), demo_out);
    } else if (demo_name == "laplace") {
      exit_code = finish_demo(demo_laplace(demo_h, demo_extent), demo_out);
    } else {
      throw ParseError("unknown demo \"" + demo_name + "\"");
    }
  });

  const auto report_error = [](int code, const std::string& message) {
    const json err{{"error", json{{"code", code}, {"message", message}}}};
    std::fputs((io::canonical_dump(err) + "\n").c_str(), stderr);
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::ostringstream devnull;
    app.exit(e, devnull, devnull);
    return report_error(2, e.what());
  } catch (const ParseError& e) {
    return report_error(2, e.what());
  } catch (const ValidationError& e) {
    return report_error(3, e.what());
  } catch (const OverflowError& e) {
    return report_error(4, e.what());
  }
  return exit_code;
}
