#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "avmod/errors.hpp"
#include "avmod/fuzz.hpp"
#include "avmod/gauge.hpp"
#include "avmod/gauge_io.hpp"
#include "avmod/parse.hpp"
#include "avmod/report.hpp"
#include "avmod/suites.hpp"

namespace avmod::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  int max_deg = 3;
  std::size_t max_len = 2;
  bool json = false;
  std::string algebra = "smash";
  std::vector<std::string> exprs;
  std::string spec_path;
  std::string field;
  std::string element;
  std::size_t count = 100;
  std::size_t iterations = 100;
  int bound = 2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

AnyElement multiply(const AnyElement& a, const AnyElement& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> AnyElement {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (!std::is_same_v<X, Y>) {
          throw UsageError("operands belong to different algebras");
        } else if constexpr (std::is_same_v<X, VectorField>) {
          throw UsageError("vector fields have no associative product; use bracket");
        } else {
          return x * y;
        }
      },
      a, b);
}

AnyElement commutator(const AnyElement& a, const AnyElement& b) {
  if (std::holds_alternative<VectorField>(a)) return vf_bracket(std::get<VectorField>(a), std::get<VectorField>(b));
  return std::visit(
      [](const auto& x, const auto& y) -> AnyElement {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (!std::is_same_v<X, Y> || std::is_same_v<X, VectorField>) {
          throw UsageError("operands belong to different algebras");
        } else {
          return x * y - y * x;
        }
      },
      a, b);
}

void emit_element(std::ostream& out, const Options& o, const std::string& command, const std::string& result) {
  if (!o.json) {
    out << result << "\n";
    return;
  }
  nlohmann::json doc = {{"command", command}, {"n", o.n}, {"inputs", o.exprs}, {"result", result}};
  if (command != "phi" && command != "psi") doc["algebra"] = o.algebra;
  out << doc.dump(2) << "\n";
}

int emit_report(std::ostream& out, const Options& o, const VerificationReport& report) {
  out << (o.json ? report_to_json(report) : to_text(report));
  return report.passed() ? kPass : kVerificationFailure;
}

Algebra selected(const Options& o) { return algebra_from_name(o.algebra); }

ModuleElement parse_module_element(const std::string& text, const GaugeModuleSpec& spec) {
  std::vector<Polynomial> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    coords.push_back(parse_polynomial(text.substr(start, comma - start), spec.n));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coords.size() != spec.rank) {
    throw UsageError("module element has " + std::to_string(coords.size()) + " coordinates, the module has rank " +
                     std::to_string(spec.rank));
  }
  return ModuleElement::from_coords(std::move(coords));
}

GaugeModuleSpec load_spec(const Options& o) { return gauge_spec_from_json(read_file(o.spec_path)); }

int run_roundtrip(std::ostream& out, const Options& o) {
  if (o.exprs.empty()) return emit_report(out, o, roundtrip_suite(o.n, o.max_deg, o.max_len, o.seed, o.count));
  VerificationReport report;
  report.title = "roundtrip (n = " + std::to_string(o.n) + ")";
  const Algebra a = selected(o);
  if (a == Algebra::smash) {
    CheckResult c("psi(phi(a)) = a");
    const SmashElement x = parse_smash(o.exprs.front(), o.n);
    const SmashElement back = psi(phi(x));
    ++c.checked;
    if (back != x) {
      c.failed = 1;
      c.counterexample = "a = " + to_string(x) + ", psi(phi(a)) = " + to_string(back);
    }
    report.checks.push_back(c);
  } else if (a == Algebra::tensor) {
    CheckResult c("phi(psi(t)) = t");
    const TensorElement t = parse_tensor(o.exprs.front(), o.n);
    const TensorElement back = phi(psi(t));
    ++c.checked;
    if (back != t) {
      c.failed = 1;
      c.counterexample = "t = " + to_string(t) + ", phi(psi(t)) = " + to_string(back);
    }
    report.checks.push_back(c);
  } else {
    throw UsageError("roundtrip takes a smash or tensor expression");
  }
  return emit_report(out, o, report);
}

void fall_through(CLI::App* sub) { sub->fallthrough(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in A # U(V) and D (x) U(L+), and gauge module verification.", "avmod"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-n,--dim", o.n, "Dimension of affine space")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--max-deg", o.max_deg, "Degree bound for suites and fuzzing")->check(CLI::NonNegativeNumber);
  app.add_option("--max-len", o.max_len, "Word length bound for random products");
  app.add_flag("--json", o.json, "Print the machine-readable report");
  app.add_option("-a,--algebra", o.algebra, "poly, weyl, vectorfield, env, smash or tensor")
      ->check(CLI::IsMember({"poly", "weyl", "vectorfield", "env", "smash", "tensor"}));

  std::string command;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    fall_through(sub);
    sub->callback([&command, name] { command = name; });
    return sub;
  };
  add("normalize", "Print an expression in canonical form")->add_option("expr", o.exprs)->required()->expected(1);
  add("mul", "Multiply two expressions")->add_option("exprs", o.exprs)->required()->expected(2);
  add("bracket", "Commutator of two expressions")->add_option("exprs", o.exprs)->required()->expected(2);
  add("phi", "Image of a smash expression in D (x) U(L+)")->add_option("expr", o.exprs)->required()->expected(1);
  add("psi", "Image of a tensor expression in A # U(V)")->add_option("expr", o.exprs)->required()->expected(1);
  CLI::App* roundtrip = add("roundtrip", "Check that phi and psi are inverse, on one expression or the built-in suite");
  roundtrip->add_option("expr", o.exprs)->expected(0, 1);
  roundtrip->add_option("--count", o.count, "Number of random products in the suite");
  add("hom-check", "Check that phi and psi preserve brackets of generators");
  add("lemma-check", "Check the binomial identities behind the homomorphism proofs");
  CLI::App* fuzz_cmd = add("fuzz", "Randomized identity checks");
  fuzz_cmd->add_option("--iterations", o.iterations, "Number of iterations");

  CLI::App* gauge = app.add_subcommand("gauge", "Gauge module tools");
  fall_through(gauge);
  gauge->require_subcommand(1);
  auto add_gauge = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = gauge->add_subcommand(name, help);
    fall_through(sub);
    sub->add_option("spec", o.spec_path, "Gauge spec JSON file")->required();
    sub->callback([&command, name] { command = "gauge " + name; });
    return sub;
  };
  add_gauge("verify", "Check GF1, GF2 and that rho is a Lie homomorphism");
  CLI::App* act = add_gauge("act", "Apply a vector field to a module element");
  act->add_option("field", o.field, "Vector field expression")->required();
  act->add_option("element", o.element, "Comma-separated coordinates")->required();
  add_gauge("transport", "Compare the action with phi transported through theta and rho (|k| <= --max-deg)");
  add_gauge("axioms", "Check the Leibniz rule and the Lie action")
      ->add_option("--bound", o.bound, "Largest generator degree")
      ->check(CLI::Range(-1, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (command == "normalize") {
      emit_element(out, o, command, to_string(parse(o.exprs[0], selected(o), o.n)));
    } else if (command == "mul" || command == "bracket") {
      const AnyElement a = parse(o.exprs[0], selected(o), o.n);
      const AnyElement b = parse(o.exprs[1], selected(o), o.n);
      emit_element(out, o, command, to_string(command == "mul" ? multiply(a, b) : commutator(a, b)));
    } else if (command == "phi") {
      emit_element(out, o, command, to_string(phi(parse_smash(o.exprs[0], o.n))));
    } else if (command == "psi") {
      emit_element(out, o, command, to_string(psi(parse_tensor(o.exprs[0], o.n))));
    } else if (command == "roundtrip") {
      return run_roundtrip(out, o);
    } else if (command == "hom-check") {
      return emit_report(out, o, hom_suite(o.n, o.max_deg));
    } else if (command == "lemma-check") {
      return emit_report(out, o, lemma_suite(o.n, o.max_deg));
    } else if (command == "fuzz") {
      const FuzzReport report = fuzz({o.n, o.max_deg, o.max_len, o.iterations, o.seed});
      out << (o.json ? report_to_json(report) : to_text(report));
      return report.passed() ? kPass : kVerificationFailure;
    } else if (command == "gauge verify") {
      return emit_report(out, o, gauge_verify(load_spec(o)));
    } else if (command == "gauge act") {
      const GaugeModuleSpec spec = load_spec(o);
      const VectorField eta = parse_vector_field(o.field, spec.n);
      const ModuleElement m = parse_module_element(o.element, spec);
      const std::string result = to_string(gauge_act(spec, eta, m));
      if (o.json) {
        out << nlohmann::json{{"command", command}, {"field", to_string(eta)}, {"element", to_string(m)},
                              {"result", result}}
                   .dump(2)
            << "\n";
      } else {
        out << result << "\n";
      }
    } else if (command == "gauge transport") {
      return emit_report(out, o, check_phi_transport_suite(load_spec(o), o.max_deg, o.seed));
    } else if (command == "gauge axioms") {
      return emit_report(out, o, check_module_axioms(load_spec(o), o.bound, o.seed));
    }
    return kPass;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    // DimensionError, LplusError, SpecError and usage errors.
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace avmod::cli
