#include "pfcone/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "pfcone/checks.hpp"
#include "pfcone/error.hpp"

namespace pfcone::cli {

namespace {

Json execute(const Request& r, Mode mode) {
  NonnegMatrix p = matrix_from_json(r.matrix, mode);
  auto vector_of = [&](const std::optional<Json>& doc, const char* what) {
    if (!doc) throw InputError(std::string("missing vector ") + what);
    Vector v = vector_from_json(*doc, mode);
    if (static_cast<int>(v.size()) != p.n()) throw InputError(std::string(what) + " length does not match the matrix");
    return v;
  };
  auto scalar_of = [&](const std::string& text, const char* what) {
    if (text.empty()) throw InputError(std::string("missing scalar ") + what);
    return Scalar::parse(text, mode);
  };

  if (r.verb == "alt") {
    ZMatrix z{scalar_of(r.shift, "shift"), p};
    Json out = to_json(alt_length(z, vector_of(r.x, "x"), r.max_steps.value_or(p.n() + 2)));
    out["is_m_matrix"] = is_m_matrix(z);
    return out;
  }
  Analysis a = analyze(p);
  if (r.verb == "analyze") return to_json(a);
  if (r.verb == "solve1") return to_json(solve1(a, scalar_of(r.lambda, "lambda"), vector_of(r.b, "b")));
  if (r.verb == "solve2") return to_json(solvable2(a, scalar_of(r.lambda, "lambda"), vector_of(r.b, "b")));
  if (r.verb == "cw") return r.x ? to_json(cw_numbers(a, vector_of(r.x, "x"))) : to_json(cw_sets(a));
  if (r.verb == "check") return check_property(r.property, a).payload;
  throw InputError("unknown verb '" + r.verb + "'");
}

}  // namespace

Json evaluate(const Request& r, std::ostream* log) {
  if (r.mode != "auto" && r.mode != "rational" && r.mode != "float")
    throw InputError("mode must be auto, rational or float");
  Mode used = r.mode == "float" ? Mode::Float : Mode::Rational;
  Json doc;
  try {
    doc = execute(r, used);
  } catch (const ModeMismatch& e) {
    if (r.mode != "auto") throw;
    if (log) *log << "rational mode failed (" << e.what() << "); retrying in float mode\n";
    used = Mode::Float;
    doc = execute(r, used);
  }
  doc["mode"] = mode_name(used);
  return doc;
}

int describe_error(const std::exception& e, Json& doc) {
  auto set = [&](const char* kind, int code) {
    doc = Json{{"error", kind}, {"message", e.what()}};
    return code;
  };
  if (dynamic_cast<const InputError*>(&e)) return set("input", kInputError);
  if (dynamic_cast<const PreconditionError*>(&e)) return set("precondition", kInputError);
  if (dynamic_cast<const NumericFailure*>(&e)) return set("numeric", kNumericError);
  if (dynamic_cast<const ModeMismatch*>(&e)) return set("mode", kNumericError);
  if (dynamic_cast<const InternalInconsistency*>(&e)) return set("internal_inconsistency", kNumericError);
  return set("internal", kNumericError);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonnegative-matrix equations, classes and Collatz-Wielandt bounds"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // --mode may also follow the verb
  Request req;
  std::string matrix_path, b_path, x_path;
  app.add_option("--mode", req.mode, "rational, float, or auto (rational with float fallback)")
      ->check(CLI::IsMember({"auto", "rational", "float"}));

  auto matrix_arg = [&](CLI::App* sub) { sub->add_option("matrix", matrix_path, "matrix JSON file")->required(); };
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "classes, taxonomy, spectral data and faces");
  matrix_arg(analyze_cmd);
  CLI::App* solve1_cmd = app.add_subcommand("solve1", "(lambda I - P) x = b, x >= 0");
  CLI::App* solve2_cmd = app.add_subcommand("solve2", "(P - lambda I) x = b, x >= 0");
  for (CLI::App* s : {solve1_cmd, solve2_cmd}) {
    s->add_option("--lambda", req.lambda, "positive scalar, decimal or p/q")->required();
    s->add_option("--b", b_path, "right-hand side JSON file")->required();
    matrix_arg(s);
  }
  CLI::App* cw_cmd = app.add_subcommand("cw", "Collatz-Wielandt numbers of x, or the set extrema without --x");
  cw_cmd->add_option("--x", x_path, "vector JSON file");
  matrix_arg(cw_cmd);
  CLI::App* alt_cmd = app.add_subcommand("alt", "alternating sequence length for shift I - P");
  alt_cmd->add_option("--shift", req.shift, "diagonal shift")->required();
  alt_cmd->add_option("--x", x_path, "vector JSON file")->required();
  alt_cmd->add_option("--max-steps", req.max_steps, "iterate cap (default n + 2)")->check(CLI::NonNegativeNumber);
  matrix_arg(alt_cmd);
  CLI::App* check_cmd = app.add_subcommand("check", "run a property suite on the matrix");
  check_cmd->add_option("--property", req.property, "property id")->required()->check(CLI::IsMember(property_ids()));
  matrix_arg(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << dump(Json{{"error", "usage"}, {"message", e.what()}});
    return kInputError;
  }
  req.verb = app.get_subcommands().front()->get_name();

  try {
    req.matrix = parse_json_exact(read_file(matrix_path));
    if (!b_path.empty()) req.b = parse_json_exact(read_file(b_path));
    if (!x_path.empty()) req.x = parse_json_exact(read_file(x_path));
    out << dump(evaluate(req, &err));
    return kOk;
  } catch (const std::exception& e) {
    Json doc;
    int code = describe_error(e, doc);
    err << e.what() << "\n";
    out << dump(doc);
    return code;
  }
}

}  // namespace pfcone::cli
