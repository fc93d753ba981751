// boson-order: command-line front end for the ordering engine.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage or internal error.

#include "boson/boson.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using boson::Style;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kError = 2;

struct Config {
  std::string format = "text";
  unsigned order = boson::kDefaultSeriesOrder;
  std::size_t fock_dim = boson::kDefaultFockDim;
  double tol = boson::kDefaultTolerance;
  std::size_t letter_cap = boson::GotOptions{}.letter_cap;

  Style style() const {
    if (format == "json") return Style::Json;
    if (format == "latex") return Style::Latex;
    return Style::Text;
  }
};

boson::OrderingParam parse_target(const std::string& name) {
  if (name == "normal") return boson::OrderingParam::normal();
  if (name == "anti") return boson::OrderingParam::anti_normal();
  if (name == "weyl") return boson::OrderingParam::weyl();
  if (name.starts_with("s=")) return boson::OrderingParam::concrete(boson::parse_rational(name.substr(2)));
  if (name.starts_with("sym:") && name.size() > 4) return boson::OrderingParam::symbolic(name.substr(4));
  throw std::invalid_argument("unknown target ordering '" + name +
                              "' (normal, anti, weyl, s=R or sym:NAME)");
}

json ast_json(const boson::Ast& a) {
  using Kind = boson::Ast::Kind;
  json j;
  switch (a.kind) {
    case Kind::Sum: j["kind"] = "Sum"; break;
    case Kind::Product: j["kind"] = "Product"; break;
    case Kind::Power: j["kind"] = "Power"; j["exponent"] = a.exponent; break;
    case Kind::LetterRef:
      j["kind"] = "LetterRef";
      j["letter"] = a.letter == boson::Letter::Creation ? "ad" : "a";
      break;
    case Kind::OrderedBlock: j["kind"] = "OrderedBlock"; j["ordering"] = a.ordering.to_string(); break;
    case Kind::ScalarLit: j["kind"] = "ScalarLit"; j["value"] = boson::to_string(a.scalar); break;
    case Kind::SymbolRef: j["kind"] = "SymbolRef"; j["name"] = a.symbol; break;
  }
  if (!a.children.empty()) {
    j["children"] = json::array();
    for (const auto& c : a.children) j["children"].push_back(ast_json(c));
  }
  return j;
}

int run_order(const Config& cfg, const std::string& target, const std::string& expr) {
  const auto t = parse_target(target);
  const auto p = boson::order_expression(boson::lower(boson::parse(expr)), t,
                                         boson::GotOptions{cfg.letter_cap});
  std::cout << boson::format(p, cfg.style()) << '\n';
  return kOk;
}

int run_stirling(const Config& cfg, unsigned n, std::optional<unsigned> k) {
  unsigned lo = 0, hi = n;
  if (k) lo = hi = *k;
  if (cfg.style() == Style::Json) {
    json rows = json::array();
    for (unsigned i = lo; i <= hi; ++i)
      rows.push_back({{"n", n}, {"k", i}, {"value", boson::stirling2(n, i).str()}});
    std::cout << (k ? rows[0] : rows).dump() << '\n';
    return kOk;
  }
  for (unsigned i = lo; i <= hi; ++i)
    std::cout << "S(" << n << "," << i << ") = " << boson::stirling2(n, i).str() << '\n';
  return kOk;
}

int run_bell(const Config& cfg, unsigned n, const std::optional<std::string>& x) {
  const auto b = boson::bell_poly(n);
  if (x) {
    const boson::Rational value = b.eval(boson::parse_rational(*x));
    if (cfg.style() == Style::Json) {
      std::cout << json{{"n", n}, {"x", *x}, {"value", boson::to_string(value)}}.dump() << '\n';
    } else {
      std::cout << "B(" << n << ", " << *x << ") = " << boson::to_string(value) << '\n';
    }
    return kOk;
  }
  if (cfg.style() == Style::Json) {
    json coeffs = json::array();
    for (const auto& c : b.coeffs) coeffs.push_back(c.str());
    std::cout << json{{"n", n}, {"coeffs", coeffs}}.dump() << '\n';
  } else {
    std::cout << "B(" << n << ", x) = " << b.in_symbol("x").to_string() << '\n';
  }
  return kOk;
}

struct Check {
  std::string label;
  std::string expected;
  std::string computed;
  bool pass;
};

void compare_polys(std::vector<Check>& out, const std::string& label,
                   const boson::OrderedPolynomial& expected, const boson::OrderedPolynomial& computed) {
  auto keys = expected.terms();
  for (const auto& [m, c] : computed.terms()) keys.try_emplace(m, c);
  for (const auto& [m, _] : keys) {
    const auto e = expected.coefficient(m.dag, m.ann), c = computed.coefficient(m.dag, m.ann);
    out.push_back({label + " (" + std::to_string(m.dag) + "," + std::to_string(m.ann) + ")",
                   e.to_string(), c.to_string(), e == c});
  }
  if (!(expected.ordering() == computed.ordering()))
    out.push_back({label + " ordering", expected.ordering().to_string(),
                   computed.ordering().to_string(), false});
}

int run_identity(const Config& cfg, const std::string& name, std::optional<unsigned> n) {
  std::vector<Check> checks;
  std::vector<unsigned> ns;
  if (n) {
    ns.push_back(*n);
  } else {
    for (unsigned i = 1; i <= 10; ++i) ns.push_back(i);
  }
  const auto mono = [](unsigned k) {
    return boson::Word::parse("ad a").pow(k);
  };

  if (name == "normal-exp" || name == "anti-exp") {
    const bool anti = name == "anti-exp";
    const unsigned order = cfg.order;
    const auto series = anti ? boson::exp_number_antinormal(order) : boson::exp_number_normal(order);
    for (unsigned i = 0; i <= order; ++i) {
      for (unsigned k = 0; k <= order; ++k) {
        const boson::Rational computed =
            boson::Rational(boson::factorial(i)) * series.series(k, k)[i].constant_term();
        const boson::Rational expected =
            anti ? boson::sign_power(i + k) * boson::Rational(boson::stirling2(i + 1, k + 1))
                 : boson::Rational(boson::stirling2(i, k));
        checks.push_back({"n=" + std::to_string(i) + " k=" + std::to_string(k),
                          boson::to_string(expected), boson::to_string(computed), expected == computed});
      }
    }
  } else if (name == "number-power-normal") {
    for (unsigned i : ns)
      compare_polys(checks, "n=" + std::to_string(i), boson::word_normal_order(mono(i)),
                    boson::number_power_normal(i));
  } else if (name == "number-power-anti") {
    for (unsigned i : ns)
      compare_polys(checks, "n=" + std::to_string(i), boson::word_antinormal_order(mono(i)),
                    boson::number_power_antinormal(i));
  } else if (name == "bell-form") {
    for (unsigned i : ns)
      compare_polys(checks, "n=" + std::to_string(i), boson::number_power_antinormal(i),
                    boson::antinormal_bell_form(i));
  } else {
    throw std::invalid_argument("unknown identity '" + name + "'");
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (cfg.style() == Style::Json) {
    json j;
    j["schema"] = boson::kJsonSchema;
    j["identity"] = name;
    j["checks"] = json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"label", c.label}, {"expected", c.expected},
                             {"computed", c.computed}, {"pass", c.pass}});
    j["pass"] = all;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& c : checks)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.label << "  expected " << c.expected
                << "  computed " << c.computed << '\n';
    std::cout << name << ": " << (all ? "PASS" : "FAIL") << " (" << checks.size() << " checks)\n";
  }
  return all ? kOk : kFailed;
}

int run_verify(const Config& cfg, const std::vector<std::string>& args) {
  std::string joined;
  for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
  const auto at = joined.find("==");
  if (at == std::string::npos || joined.find("==", at + 2) != std::string::npos)
    throw std::invalid_argument("verify expects \"<expr1>\" == \"<expr2>\"");
  const auto lhs = boson::lower(boson::parse(joined.substr(0, at)));
  const auto rhs = boson::lower(boson::parse(joined.substr(at + 2)));
  const auto rep = boson::identity_check(lhs, rhs, cfg.fock_dim, cfg.tol);
  if (cfg.style() == Style::Json) {
    std::cout << json{{"schema", boson::kJsonSchema}, {"pass", rep.pass},
                      {"max_abs_diff", rep.max_abs_diff}, {"degree", rep.degree},
                      {"fock_dim", rep.dim}, {"safe_size", rep.safe_size}, {"tol", rep.tolerance}}
                     .dump()
              << '\n';
  } else {
    std::cout << (rep.pass ? "PASS" : "FAIL") << ": max |lhs - rhs| = " << rep.max_abs_diff
              << " on the leading " << rep.safe_size << "x" << rep.safe_size << " block (D = "
              << rep.dim << ", degree " << rep.degree << ", tol " << rep.tolerance << ")\n";
  }
  return rep.pass ? kOk : kFailed;
}

int run_parse(const Config& cfg, const std::string& expr) {
  const auto ast = boson::parse(expr);
  if (cfg.style() == Style::Json) {
    std::cout << json{{"schema", boson::kJsonSchema}, {"ast", ast_json(ast)}}.dump() << '\n';
  } else {
    std::cout << ast.to_string() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normal, anti-normal and s-ordering of boson operator expressions"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--order", cfg.order, "Truncation order in lambda");
  app.add_option("--fock-dim", cfg.fock_dim, "Truncated Fock space dimension")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Absolute tolerance for Fock checks");
  app.add_option("--cap", cfg.letter_cap, "Letter-count cap for contraction enumeration");

  std::string target = "normal", expr;
  auto* order = app.add_subcommand("order", "Rewrite an expression in a target ordering");
  order->add_option("--to", target, "normal | anti | weyl | s=R | sym:NAME");
  order->add_option("expr", expr, "Operator expression")->required();

  unsigned n = 0;
  std::optional<unsigned> k;
  auto* stirling = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  stirling->add_option("--n", n)->required();
  stirling->add_option("--k", k);

  std::optional<std::string> x;
  auto* bell = app.add_subcommand("bell", "Bell polynomials B(n, x)");
  bell->add_option("--n", n)->required();
  bell->add_option("--x", x, "Evaluate at this rational");

  std::string identity_name;
  std::optional<unsigned> identity_n;
  auto* identity = app.add_subcommand("identity", "Verify a closed-form identity");
  identity->add_option("--name", identity_name)
      ->required()
      ->check(CLI::IsMember(
          {"normal-exp", "anti-exp", "number-power-normal", "number-power-anti", "bell-form"}));
  identity->add_option("--n", identity_n);

  std::vector<std::string> verify_args;
  auto* verify = app.add_subcommand("verify", "Compare two expressions on truncated Fock space");
  verify->add_option("sides", verify_args, "\"<expr1>\" == \"<expr2>\"")->required();

  std::string parse_expr;
  auto* parse = app.add_subcommand("parse", "Dump the syntax tree of an expression");
  parse->add_option("expr", parse_expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*order) return run_order(cfg, target, expr);
    if (*stirling) return run_stirling(cfg, n, k);
    if (*bell) return run_bell(cfg, n, x);
    if (*identity) return run_identity(cfg, identity_name, identity_n);
    if (*verify) return run_verify(cfg, verify_args);
    if (*parse) return run_parse(cfg, parse_expr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
