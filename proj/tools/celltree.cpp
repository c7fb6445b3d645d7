// celltree: generate cell complexes, enumerate weighted spanning trees,
// print weighted Laplacian spectra and run the exact verification suites.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "celltrees/closed_forms.hpp"
#include "celltrees/errors.hpp"
#include "celltrees/families.hpp"
#include "celltrees/io.hpp"
#include "celltrees/laplacian.hpp"
#include "celltrees/tree_enum.hpp"
#include "celltrees/verify.hpp"

namespace {

using namespace celltrees;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw argument_error("empty entry in size list '" + text + "'");
    sizes.push_back(std::stoi(item));
  }
  if (sizes.empty()) throw argument_error("empty size list");
  return sizes;
}

struct GlobalOpts {
  bool json = false;
  std::uint64_t seed = 42;
  long points = 5;
  unsigned threads = 1;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << "\n";
  else
    write_text_file(out_path, text + "\n");
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 const std::string& skeleton_arg, const std::string& out_path) {
  CellComplex cx;
  if (family == "simplex") {
    if (params.size() != 2) throw argument_error("generate simplex needs <n> <d>");
    cx = simplex_skeleton(std::stoi(params[0]), std::stoi(params[1]));
  } else if (family == "colorful") {
    if (params.size() != 1) throw argument_error("generate colorful needs <n1,n2,...>");
    ColorfulSpec spec;
    spec.sizes = parse_sizes(params[0]);
    if (!skeleton_arg.empty()) spec.skeleton = std::stoi(skeleton_arg);
    cx = complete_colorful(spec);
  } else if (family == "cube") {
    if (params.size() != 1) throw argument_error("generate cube needs <n>");
    cx = hypercube({std::stoi(params[0])});
  } else if (family == "join") {
    if (params.size() != 2) throw argument_error("generate join needs <complex1> <complex2>");
    cx = join(load_complex(params[0]), load_complex(params[1]));
  } else {
    throw argument_error("unknown family '" + family + "' (simplex|colorful|cube|join)");
  }
  if (family != "colorful" && !skeleton_arg.empty()) cx = cx.skeleton(std::stoi(skeleton_arg));
  emit(complex_to_json(cx), out_path);
  return kExitOk;
}

Specialization pick_weights(const CellComplex& cx, bool ones, const std::string& weights_path) {
  const bool has_weights = !weights_path.empty();
  if (ones == has_weights)
    throw argument_error("specify exactly one of --ones or --weights");
  if (ones) return Specialization::all_ones(cx.variables());
  Specialization spec = load_weights(weights_path);
  for (const std::string& var : cx.variables())
    if (!spec.has(var)) throw specialization_error("weights file misses variable '" + var + "'");
  return spec;
}

int cmd_trees(const GlobalOpts& g, const std::string& complex_path, int k, bool ones,
              const std::string& weights_path, const std::string& report_path) {
  CellComplex cx = load_complex(complex_path);
  Specialization spec = pick_weights(cx, ones, weights_path);
  TreeCountReport report = tree_count_report(cx, k, &spec, g.threads);

  nlohmann::json doc = nlohmann::json::object();
  doc["complex"] = cx.name();
  doc["k"] = report.k;
  doc["tree_count"] = report.tree_count;
  doc["tau"] = report.tau.str();
  doc["tau_hat"] = rat_to_string(*report.tau_hat);
  doc["max_torsion"] = report.max_torsion.str();

  if (!report_path.empty()) write_text_file(report_path, doc.dump() + "\n");
  if (g.json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "complex      " << cx.name() << "\n"
              << "dimension    " << k << "\n"
              << "trees        " << report.tree_count << "\n"
              << "tau          " << report.tau.str() << "\n"
              << "tau_hat      " << rat_to_string(*report.tau_hat) << "\n"
              << "max torsion  " << report.max_torsion.str() << "\n";
  }
  return kExitOk;
}

int cmd_spectrum(const GlobalOpts& g, const std::string& complex_path, int k,
                 const std::string& kind, bool ones, const std::string& weights_path) {
  CellComplex cx = load_complex(complex_path);
  Specialization spec = pick_weights(cx, ones, weights_path);
  RationalMatrix lap;
  if (kind == "ud")
    lap = updown_laplacian(cx, k, spec);
  else if (kind == "du")
    lap = downup_laplacian(cx, k, spec);
  else if (kind == "tot")
    lap = total_laplacian(cx, k, spec);
  else
    throw argument_error("unknown Laplacian kind '" + kind + "' (ud|du|tot)");

  UniPoly p = char_poly(lap);
  Rat pd = pdet_from_char_poly(p);

  if (g.json) {
    nlohmann::json doc = nlohmann::json::object();
    doc["complex"] = cx.name();
    doc["k"] = k;
    doc["kind"] = kind;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
    doc["char_poly_ascending"] = coeffs;
    doc["pdet"] = rat_to_string(pd);
    doc["size"] = lap.rows();
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "complex     " << cx.name() << "\n"
              << "kind        " << kind << " Laplacian, degree " << k << " (" << lap.rows()
              << "x" << lap.cols() << ")\n"
              << "char poly   " << p.to_string("L") << "\n"
              << "pdet        " << rat_to_string(pd) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, const std::string& report_path) {
  VerificationReport report = run_suite(suite, g.seed, g.points, g.threads);
  std::string json_text = report_to_json(report);
  if (!report_path.empty()) write_text_file(report_path, json_text + "\n");
  if (g.json) {
    std::cout << json_text << "\n";
  } else {
    for (const CheckRecord& r : report.checks)
      if (!r.pass)
        std::cout << "FAIL " << r.name << "\n  expected " << r.expected << "\n  actual   "
                  << r.actual << "\n";
    std::cout << "suite '" << suite << "': " << report.passed << " passed, " << report.failed
              << " failed (" << report.wall_ms << " ms, seed " << g.seed << ", "
              << g.points << " points)\n";
  }
  return report.failed == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weighted matrix-tree computations on finite cell complexes"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for pseudo-random specializations");
  app.add_option("--points", g.points, "number of seeded specializations per identity");
  app.add_option("--threads", g.threads, "worker threads for enumeration/verification");

  auto* gen = app.add_subcommand("generate", "write a complex document for a built-in family");
  std::string family, skeleton_arg, out_path;
  std::vector<std::string> params;
  gen->add_option("family", family, "simplex | colorful | cube | join")->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--skeleton", skeleton_arg, "truncate to this skeleton");
  gen->add_option("--out", out_path, "output path (default: stdout)");

  auto* trees = app.add_subcommand("trees", "enumerate spanning trees and weighted counts");
  std::string complex_path, weights_path, report_path;
  int dim_k = 0;
  bool ones = false;
  trees->add_option("complex", complex_path, "complex document")->required();
  trees->add_option("--dim", dim_k, "tree dimension k")->required();
  trees->add_flag("--ones", ones, "all weight variables = 1");
  trees->add_option("--weights", weights_path, "weights JSON file");
  trees->add_option("--report", report_path, "write the JSON report here");

  auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial and pdet");
  std::string sp_complex, sp_kind = "ud", sp_weights;
  int sp_k = 0;
  bool sp_ones = false;
  spectrum->add_option("complex", sp_complex, "complex document")->required();
  spectrum->add_option("--dim", sp_k, "Laplacian degree k")->required();
  spectrum->add_option("--kind", sp_kind, "ud | du | tot");
  spectrum->add_flag("--ones", sp_ones, "all weight variables = 1");
  spectrum->add_option("--weights", sp_weights, "weights JSON file");

  auto* verify = app.add_subcommand("verify", "run an exact verification suite");
  std::string suite = "all", verify_report;
  verify->add_option("--suite", suite, "all | cmtt | colorful | cube | spectra | identities");
  verify->add_option("--report", verify_report, "write the JSON report here");

  for (CLI::App* sub : {gen, trees, spectrum, verify}) sub->fallthrough(true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(family, params, skeleton_arg, out_path);
    if (*trees) return cmd_trees(g, complex_path, dim_k, ones, weights_path, report_path);
    if (*spectrum) return cmd_spectrum(g, sp_complex, sp_k, sp_kind, sp_ones, sp_weights);
    if (*verify) return cmd_verify(g, suite, verify_report);
  } catch (const unsupported_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const invariant_violation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
