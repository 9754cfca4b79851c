#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homext/duality.hpp"
#include "homext/error.hpp"
#include "homext/extgroup.hpp"
#include "homext/serialize.hpp"
#include "homext/verify.hpp"

using namespace homext;

namespace {

constexpr int kPass = 0;
constexpr int kLawFailure = 1;
constexpr int kInputError = 2;
constexpr int kBoundExceeded = 3;

std::string group_name(const std::vector<std::int64_t>& factors) {
  return Module(RingDescriptor::integers(), factors).to_string();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct ExtArgs {
  std::string ring = "Z";
  std::string module_m;
  std::string module_n;
  std::string method = "both";
  bool json = false;
  bool table = false;
};

void print_classification(const ExtClassification& c) {
  std::cout << "classes: " << c.classes.size() << " (split class #" << c.split_index << ")\n";
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    const auto& E = c.classes[k];
    std::cout << "  #" << k << "  P = " << E.P.to_string() << "  f = " << E.f.to_string()
              << "  alpha = " << E.alpha.to_string() << "\n";
  }
  if (c.baer_table) {
    std::cout << "baer table:\n";
    for (const auto& row : *c.baer_table) {
      std::cout << "   ";
      for (auto v : row) std::cout << " " << v;
      std::cout << "\n";
    }
    std::cout << "Ext^1 by enumeration: " << group_name(invariant_factors_of_table(*c.baer_table, c.split_index))
              << "\n";
  }
}

int cmd_ext(const ExtArgs& a) {
  const RingDescriptor ring = parse_ring(a.ring);
  const Module M = parse_module(a.module_m, ring);
  const Module N = parse_module(a.module_n, ring);

  Json out{{"ring", to_json(ring)}, {"M", to_json(M)}, {"N", to_json(N)}, {"method", a.method}};
  int code = kPass;
  if (!a.json)
    std::cout << "ring " << ring.to_string() << "  M = " << M.to_string() << "  N = " << N.to_string() << "\n";

  if (a.method == "resolution") {
    const ExtGroupDescriptor d = ext_by_resolution(M, N);
    out["resolution"] = to_json(d);
    if (!a.json) std::cout << "Ext^1 by resolution: " << group_name(d.invariant_factors) << " (order " << d.order() << ")\n";
  } else if (a.method == "enumerate") {
    const ExtClassification c = enumerate_extensions(M, N);
    out["classification"] = to_json(c);
    if (!a.json) print_classification(c);
  } else {
    const CrossValidation cv = cross_validate(M, N);
    out["classification"] = to_json(cv.classification);
    out["resolution"] = to_json(cv.resolution);
    Json checks = Json::array();
    for (const auto& c : cv.report.checks())
      checks.push_back(Json{{"law", c.law},
                            {"status", c.passed ? "PASS" : "FAIL"},
                            {"counterexample", c.passed ? Json(nullptr) : Json(c.counterexample)}});
    out["cross_validation"] = Json{{"status", cv.report.passed() ? "PASS" : "FAIL"},
                                   {"torsor_classes", cv.torsor_classes},
                                   {"cotorsor_classes", cv.cotorsor_classes},
                                   {"checks", std::move(checks)}};
    if (!cv.report.passed()) code = kLawFailure;
    if (!a.json) {
      print_classification(cv.classification);
      std::cout << "Ext^1 by resolution: " << group_name(cv.resolution.invariant_factors) << " (order "
                << cv.resolution.order() << ")\n";
      std::cout << "torsor classes: " << cv.torsor_classes << "  cotorsor classes: " << cv.cotorsor_classes << "\n";
      for (const auto& c : cv.report.checks())
        if (!c.passed) std::cout << "FAIL " << c.law << ": " << c.counterexample << "\n";
      std::cout << "cross-validation: " << (cv.report.passed() ? "PASS" : "FAIL") << "\n";
    }
  }
  if (a.json) print_json(out);
  return code;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string corpus = "builtin";
  std::uint64_t seed = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Corpus corpus = a.corpus == "builtin" ? builtin_corpus() : load_corpus(a.corpus);
  VerifyOptions opts;
  opts.seed = a.seed;
  const VerificationReport r = run_verification(a.suite, corpus, opts);
  if (a.json) {
    print_json(to_json(r));
  } else {
    for (const auto& c : r.cases)
      if (!c.passed)
        std::cout << "FAIL " << c.suite << " " << c.case_id << " " << c.law << ": " << c.counterexample.value_or("")
                  << "\n";
    const auto sampled = std::count_if(r.cases.begin(), r.cases.end(), [](const CaseResult& c) { return !c.exhaustive; });
    std::cout << "suite " << r.suite << ": " << r.cases.size() << " checks, " << r.passed_count() << " passed, "
              << r.failed_count() << " failed";
    if (sampled > 0) std::cout << ", " << sampled << " sampled";
    std::cout << "\n";
  }
  return r.passed() ? kPass : kLawFailure;
}

struct RoundtripArgs {
  std::string functor;
  std::string in;
  bool json = false;
};

int cmd_roundtrip(const RoundtripArgs& a) {
  std::string text;
  if (a.in.empty() || a.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(a.in);
    if (!file) throw Error(ErrorKind::ParseError, "cannot read " + a.in);
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  const Json input = parse_json(text);

  Json image;
  Json back;
  bool equal = false;
  if (a.functor == "psi") {
    const Extension E = extension_from_json(input);
    const TorsorStructure T = torsor_from_extension(E);
    const Extension R = extension_from_torsor(T);
    image = to_json(T);
    back = to_json(R);
    equal = R == E;
  } else if (a.functor == "phi") {
    const Coextension C = coextension_from_json(input);
    const CotorsorStructure T = cotorsor_from_coextension(C);
    const Coextension R = coextension_from_cotorsor(T);
    image = to_json(T);
    back = to_json(R);
    equal = R == C;
  } else {
    // an extension has f leaving P, a coextension has f landing in P
    const Module P = module_from_json(input.at("P"));
    const Morphism f = morphism_from_json(input.at("f"));
    if (f.source() == P) {
      const Extension E = extension_from_json(input);
      const Coextension C = theta(E);
      const Extension R = theta_inverse(C);
      image = to_json(C);
      back = to_json(R);
      equal = R == E;
    } else {
      const Coextension C = coextension_from_json(input);
      const Extension E = theta_inverse(C);
      const Coextension R = theta(E);
      image = to_json(E);
      back = to_json(R);
      equal = R == C;
    }
  }
  const char* verdict = equal ? "EQUAL" : "DIFFER";
  if (a.json) {
    print_json(Json{{"functor", a.functor}, {"input", input}, {"image", image}, {"roundtrip", back}, {"verdict", verdict}});
  } else {
    std::cout << "input:     " << input.dump() << "\n";
    std::cout << "image:     " << image.dump() << "\n";
    std::cout << "roundtrip: " << back.dump() << "\n";
    std::cout << verdict << "\n";
  }
  return equal ? kPass : kLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite module extensions, torsors and cotorsors"};
  app.require_subcommand(1);

  ExtArgs ext;
  auto* ext_cmd = app.add_subcommand("ext", "Classify extensions of M by N");
  ext_cmd->add_option("--ring", ext.ring, "Z or Z/n")->capture_default_str();
  ext_cmd->add_option("--module-m", ext.module_m, "module JSON or shorthand such as Z/4+Z/2")->required();
  ext_cmd->add_option("--module-n", ext.module_n, "module JSON or shorthand")->required();
  ext_cmd->add_option("--method", ext.method)->check(CLI::IsMember({"enumerate", "resolution", "both"}))->capture_default_str();
  auto* ext_json = ext_cmd->add_flag("--json", ext.json, "emit JSON");
  ext_cmd->add_flag("--table", ext.table, "emit a text table (default)")->excludes(ext_json);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run law and equivalence suites over a corpus");
  verify_cmd->add_option("--suite", verify.suite)->capture_default_str();
  verify_cmd->add_option("--corpus", verify.corpus, "builtin or a corpus JSON file")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "seed for sampled hom-sets")->capture_default_str();
  verify_cmd->add_flag("--json", verify.json, "emit the report as JSON");

  RoundtripArgs roundtrip;
  auto* rt_cmd = app.add_subcommand("roundtrip", "Apply a functor and its quasi-inverse");
  rt_cmd->add_option("--functor", roundtrip.functor)->required()->check(CLI::IsMember({"psi", "phi", "theta"}));
  rt_cmd->add_option("--in", roundtrip.in, "input JSON file (default stdin)");
  rt_cmd->add_flag("--json", roundtrip.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*ext_cmd) return cmd_ext(ext);
    if (*verify_cmd) return cmd_verify(verify);
    return cmd_roundtrip(roundtrip);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BoundExceeded ? kBoundExceeded : kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kInputError;
  }
}
