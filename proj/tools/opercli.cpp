#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "operalg/verify.hpp"

namespace {

using operalg::Json;

Json read_json_input(const std::string& path) {
  if (path.empty() || path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw operalg::InputError("cannot open input file: " + path);
  return Json::parse(in);
}

void emit(const Json& payload, const std::string& out_path) {
  std::string text = payload.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw operalg::InputError("cannot open output file: " + out_path);
  out << text;
}

int run_reduce(const std::string& in_path, const std::string& out_path,
               int precision) {
  operalg::OperConnection op = operalg::oper_input_from_json(read_json_input(in_path));
  operalg::CanonicalOper can = operalg::reduce_to_canonical(op);
  if (precision != operalg::LaurentSeries::unbounded)
    for (operalg::LaurentSeries& s : can.coords)
      s = s.truncated(std::min(precision, s.precision()));
  emit(operalg::canonical_to_json(can), out_path);
  return 0;
}

int run_classify(const std::string& in_path, const std::string& out_path,
                 int bound) {
  if (bound < 0) throw operalg::InputError("bound must be nonnegative");
  operalg::OperConnection op = operalg::oper_input_from_json(read_json_input(in_path));
  operalg::CanonicalOper can = operalg::reduce_to_canonical(op);
  std::optional<operalg::Coweight> lam =
      operalg::classify_monodromy_free(can, bound);
  Json out;
  out["command"] = "classify";
  out["type"] = can.type;
  out["bound"] = bound;
  out["lambda"] = lam ? Json(lam->coords) : Json(nullptr);
  emit(out, out_path);
  return 0;
}

int run_verify_cmd(const operalg::VerifyOptions& opt,
                   const std::string& json_out) {
  for (const std::string& t : opt.types) operalg::build_root_system(t);
  auto t0 = std::chrono::steady_clock::now();
  operalg::RunReport rep = operalg::run_verify(opt);
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  emit(operalg::report_to_json(rep), json_out);
  for (const operalg::CheckGroup& g : rep.groups) {
    int ok = 0;
    for (const operalg::CaseResult& c : g.cases) ok += c.pass ? 1 : 0;
    std::cerr << (g.pass() ? "[PASS] " : "[FAIL] ") << g.name << " (" << ok
              << "/" << g.cases.size() << ")\n";
  }
  std::cerr << "verify: " << rep.passed() << " passed, " << rep.failed()
            << " failed in " << dt.count() << "s\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "canonical forms, Cartan-connection images and graded characters of "
      "differential operators on the formal punctured disc"};
  app.require_subcommand(1);

  std::string in_path, out_path;

  CLI::App* reduce =
      app.add_subcommand("reduce", "reduce a connection to its canonical form");
  reduce->add_option("--in", in_path, "input JSON (file path or - for stdin)");
  reduce->add_option("--out", out_path, "output JSON path (default stdout)");
  int reduce_precision = operalg::LaurentSeries::unbounded;
  reduce->add_option("--precision", reduce_precision,
                     "cap the output coordinate windows at this degree");

  int bound = 4;
  CLI::App* classify = app.add_subcommand(
      "classify",
      "find the dominant coweight whose monodromy-free family contains the "
      "input, if any");
  classify->add_option("--in", in_path, "input JSON (file path or - for stdin)");
  classify->add_option("--out", out_path, "output JSON path (default stdout)");
  classify->add_option("--bound", bound,
                       "search coweights with coordinates <= bound");

  operalg::VerifyOptions vopt;
  std::vector<int> lambda_flag;
  std::string json_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the seeded self-verification batteries");
  verify->add_option("--type", vopt.types,
                     "restrict to these type labels (repeatable)");
  verify->add_option("--lambda", lambda_flag,
                     "restrict character checks to this dominant weight");
  verify->add_option("--lambda-max", vopt.lambda_max,
                     "character grid bound per coordinate");
  verify->add_option("--order", vopt.order, "q-series truncation order");
  verify->add_option("--precision", vopt.precision,
                     "t-series window size for seeded connections");
  verify->add_option("--bound", vopt.bound,
                     "coweight search bound for membership checks");
  verify->add_option("--seed", vopt.seed, "random seed");
  verify->add_option("--json-out", json_out,
                     "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (reduce->parsed()) return run_reduce(in_path, out_path, reduce_precision);
    if (classify->parsed()) return run_classify(in_path, out_path, bound);
    if (!lambda_flag.empty()) vopt.lambda = lambda_flag;
    return run_verify_cmd(vopt, json_out);
  } catch (const operalg::PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const operalg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
