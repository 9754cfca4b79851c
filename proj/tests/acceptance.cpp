// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "homext/cotorsors.hpp"
#include "homext/corpus.hpp"
#include "homext/error.hpp"
#include "homext/extgroup.hpp"
#include "homext/serialize.hpp"
#include "homext/verify.hpp"
#include "universal.hpp"

using namespace homext;
using homext::testing::check_fiber_product_universal;
using homext::testing::check_pushout_universal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const Corpus& builtin() {
  static const Corpus c = builtin_corpus();
  return c;
}

std::vector<std::pair<Module, Module>> pairs_up_to(std::int64_t bound) {
  std::vector<std::pair<Module, Module>> out;
  for (const auto& M : builtin().modules)
    for (const auto& N : builtin().modules)
      if (M.ring() == N.ring() && M.order() * N.order() <= bound) out.emplace_back(M, N);
  return out;
}

std::string pair_name(const Module& M, const Module& N) {
  return M.ring().to_string() + " (" + M.to_string() + ", " + N.to_string() + ")";
}

Outcome cross_validation() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  EnumerateOptions opts;
  opts.bound = 64;
  opts.with_baer_table = false;
  std::size_t n = 0;
  for (const auto& [M, N] : pairs_up_to(16)) {
    const auto c = enumerate_extensions(M, N, opts);
    const auto r = ext_by_resolution(M, N);
    if (static_cast<std::int64_t>(c.classes.size()) != r.order())
      o.fail(pair_name(M, N) + ": " + std::to_string(c.classes.size()) + " classes, resolution order " +
             std::to_string(r.order()));
    ++n;
  }
  const RingDescriptor Z = RingDescriptor::integers();
  const RingDescriptor Z2 = RingDescriptor::integers_mod(2);
  struct Anchor {
    Module M, N;
    std::size_t classes;
  };
  const std::vector<Anchor> anchors{{Module(Z, {2}), Module(Z, {2}), 2},
                                    {Module(Z2, {2}), Module(Z2, {2}), 1},
                                    {Module(Z, {4}), Module(Z, {2}), 2},
                                    {Module(Z, {2}), Module(Z, {3}), 1}};
  for (const auto& a : anchors) {
    const CrossValidation v = cross_validate(a.M, a.N);
    if (v.classification.classes.size() != a.classes || !v.report.passed())
      o.fail("anchor " + pair_name(a.M, a.N));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 60.0) o.fail("took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << n << " pairs, " << anchors.size() << " anchors, " << static_cast<int>(secs * 1000) << " ms";
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome run_suites(const std::vector<std::string>& suites, std::size_t& checks) {
  Outcome o;
  checks = 0;
  for (const auto& s : suites) {
    const VerificationReport r = run_verification(s, builtin());
    checks += r.cases.size();
    if (r.cases.empty()) o.fail(s + ": no cases");
    for (const auto& c : r.cases)
      if (!c.passed) o.fail(s + " " + c.case_id + " " + c.law + ": " + c.counterexample.value_or(""));
  }
  return o;
}

Outcome equivalences() {
  std::size_t checks = 0;
  Outcome o = run_suites({"psi", "phi", "theta"}, checks);
  if (o.ok) o.detail = std::to_string(checks) + " checks";
  return o;
}

bool has_counterexample(const LawReport& r) {
  for (const auto& c : r.checks())
    if (!c.passed && !c.counterexample.empty()) return true;
  return false;
}

Outcome law_suites() {
  std::size_t checks = 0;
  Outcome o = run_suites({"group-object", "cogroup", "torsor", "cotorsor"}, checks);

  // both forms of the cogroup check are present
  const VerificationReport co = run_verification("cogroup", builtin());
  std::set<std::string> laws;
  for (const auto& c : co.cases) laws.insert(c.law);
  for (const char* l : {"coassociativity", "left-coinverse", "corep-addition", "functoriality"})
    if (!laws.count(l)) o.fail(std::string("cogroup suite lacks ") + l);

  std::vector<std::pair<std::string, bool>> mutants;
  const RingDescriptor Z = RingDescriptor::integers();
  const Module Z2(Z, {2});
  const Module Z3(Z, {3});
  {
    GroupObjectStructure G = group_object(Z2, Z2);
    G.add = G.square.project_left;
    const LawReport r = check_group_axioms(G);
    mutants.emplace_back("add", !r.passed() && has_counterexample(r));
  }
  {
    GroupObjectStructure G = group_object(Z2, Z3);
    G.inv = Morphism::identity(G.sum.sum);
    const LawReport r = check_group_axioms(G);
    mutants.emplace_back("inv", !r.passed() && has_counterexample(r));
  }
  {
    CogroupStructure C = cogroup(Z2, Z2);
    C.coadd = C.square.include_left;
    const std::vector<Morphism> objects{Morphism::identity(Z2), C.sum.inject_right};
    const LawReport r = check_cogroup_axioms(C, objects);
    mutants.emplace_back("coadd", !r.passed() && has_counterexample(r));
  }
  {
    CogroupStructure C = cogroup(Z3, Z2);
    C.coinv = Morphism::identity(C.sum.sum);
    const std::vector<Morphism> objects{Morphism::identity(Z2), C.sum.inject_right};
    const LawReport r = check_cogroup_axioms(C, objects);
    mutants.emplace_back("coinv", !r.passed() && has_counterexample(r));
  }
  const std::string dir = HOMEXT_FIXTURES;
  for (const auto& [file, suite] : std::vector<std::pair<std::string, std::string>>{
           {"torsor_ignores_action.json", "torsor"},
           {"torsor_not_over_m.json", "torsor"},
           {"cotorsor_zero_coaction.json", "cotorsor"},
           {"cotorsor_broken_section.json", "cotorsor"}}) {
    const VerificationReport r = run_verification(suite, load_corpus(dir + "/" + file));
    bool caught = !r.passed();
    for (const auto& c : r.cases)
      if (!c.passed && (!c.counterexample || c.counterexample->empty())) caught = false;
    mutants.emplace_back(file, caught);
  }
  for (const auto& [name, caught] : mutants)
    if (!caught) o.fail("mutant " + name + " not caught");
  if (o.ok)
    o.detail = std::to_string(checks) + " checks, " + std::to_string(mutants.size()) + " mutants caught";
  return o;
}

Outcome baer_structure() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& [M, N] : pairs_up_to(16)) {
    const ExtClassification c = enumerate_extensions(M, N);
    if (!c.baer_table) {
      o.fail(pair_name(M, N) + ": no table");
      continue;
    }
    const LawReport r = check_abelian_table(*c.baer_table, c.split_index);
    if (!r.passed()) o.fail(pair_name(M, N) + ": table is not an abelian group");
    if (invariant_factors_of_table(*c.baer_table, c.split_index) != ext_by_resolution(M, N).invariant_factors)
      o.fail(pair_name(M, N) + ": invariant factors differ");
    ++n;
  }
  const RingDescriptor Z = RingDescriptor::integers();
  const Module Z2(Z, {2});
  const Module Z4(Z, {4});
  const Extension e = make_extension(Z4, Morphism(Z4, Z2, {{1}}), Morphism(Z2, Z4, {{2}}));
  const ExtClassification c = enumerate_extensions(Z2, Z2);
  if (classify(c, baer_sum(e, e)) != c.split_index) o.fail("[Z/4]+[Z/4] is not split");
  if (o.ok) o.detail = std::to_string(n) + " tables";
  return o;
}

Outcome universal_properties() {
  Outcome o;
  std::size_t cones = 0, diagrams = 0;
  auto tests_for = [](const RingDescriptor& R) {
    std::vector<Module> ts;
    for (const auto& m : builtin().modules)
      if (m.ring() == R && m.order() <= 8) ts.push_back(m);
    return ts;
  };
  for (const auto& E : builtin().extensions) {
    const DirectSum s = direct_sum(E.M(), E.N());
    const std::vector<Morphism> others{E.f, s.project_left};
    for (const auto& g : others) {
      const FiberProduct fp = fiber_product(E.f, g);
      ++diagrams;
      for (const auto& T : tests_for(E.P.ring())) {
        const auto u = check_fiber_product_universal(fp, T);
        cones += u.cones;
        if (!u.ok) o.fail("fiber product over " + E.P.to_string() + ": " + u.failure);
      }
    }
  }
  for (const auto& C : builtin().coextensions) {
    const DirectSum s = direct_sum(C.M(), C.N());
    const std::vector<Morphism> others{C.f, s.inject_right};
    for (const auto& g : others) {
      const Pushout po = pushout(C.f, g);
      ++diagrams;
      for (const auto& T : tests_for(C.P.ring())) {
        const auto u = check_pushout_universal(po, T);
        cones += u.cones;
        if (!u.ok) o.fail("pushout under " + C.P.to_string() + ": " + u.failure);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(diagrams) + " diagrams, " + std::to_string(cones) + " cones";
  return o;
}

std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return {-1, out};
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = ::pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract() {
  Outcome o;
  const std::string cmd = std::string("\"") + HOMEXT_BINARY + "\" verify --suite all --corpus builtin --json";
  const auto [code1, out1] = run(cmd);
  const auto [code2, out2] = run(cmd);
  if (code1 != 0 || code2 != 0) o.fail("exit codes " + std::to_string(code1) + ", " + std::to_string(code2));
  if (out1 != out2) o.fail("reports differ between runs");
  if (out1.empty()) o.fail("empty report");
  if (o.ok) {
    const Json j = parse_json(out1);
    o.detail = std::to_string(out1.size()) + " bytes, " + j["summary"]["total"].dump() + " checks";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 cross-validation", cross_validation},
      {"2 equivalence suites", equivalences},
      {"3 law suites and mutants", law_suites},
      {"4 baer structure", baer_structure},
      {"5 universal properties", universal_properties},
      {"6 cli contract", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
