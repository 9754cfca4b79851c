#include "homext/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "homext/duality.hpp"
#include "homext/error.hpp"

namespace homext {

namespace {

using Task = std::function<std::vector<CaseResult>()>;

std::string pair_id(const Module& M, const Module& N) {
  return M.ring().to_string() + "|M=" + M.to_string() + "|N=" + N.to_string();
}

std::string item_id(const Module& M, const Module& N, const Module& P, std::size_t k) {
  return pair_id(M, N) + "|P=" + P.to_string() + "|#" + std::to_string(k);
}

void append_report(std::vector<CaseResult>& out, const std::string& suite, const std::string& id,
                   const LawReport& report, const std::string& prefix = {}) {
  for (const auto& c : report.checks()) {
    CaseResult r{suite, id, prefix + c.law, c.passed, true, std::nullopt};
    if (!c.passed) r.counterexample = c.counterexample;
    out.push_back(std::move(r));
  }
}

void append(std::vector<CaseResult>& out, const std::string& suite, const std::string& id,
            const std::string& law, bool ok, const std::string& cex = {}, bool exhaustive = true) {
  CaseResult r{suite, id, law, ok, exhaustive, std::nullopt};
  if (!ok) r.counterexample = cex;
  out.push_back(std::move(r));
}

// Wraps a task so that construction errors are reported as failures.
Task guarded(const std::string& suite, const std::string& id, std::function<void(std::vector<CaseResult>&)> body) {
  return [=] {
    std::vector<CaseResult> out;
    try {
      body(out);
    } catch (const Error& e) {
      append(out, suite, id, "construction", false, e.what());
    }
    return out;
  };
}

void bijection_case(std::vector<CaseResult>& out, const std::string& suite, const std::string& id,
                    const HomBijectionReport& r) {
  std::string cex;
  if (!r.equal()) {
    std::vector<std::uint64_t> diff;
    std::set_symmetric_difference(r.left.begin(), r.left.end(), r.right.begin(), r.right.end(),
                                  std::back_inserter(diff));
    cex = "hom index " + std::to_string(diff.front()) + " is a morphism on one side only";
  }
  append(out, suite, id, "hom-bijection", r.equal(), cex, r.exhaustive);
}

bool same_pair(const Module& M1, const Module& N1, const Module& M2, const Module& N2) {
  return M1 == M2 && N1 == N2;
}

void group_object_tasks(const Corpus& c, std::vector<Task>& tasks) {
  const std::string suite = "group-object";
  for (const auto& M : c.modules)
    for (const auto& N : c.modules) {
      if (!(M.ring() == N.ring())) continue;
      const std::string id = pair_id(M, N);
      tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
        append_report(out, suite, id, check_group_axioms(group_object(M, N)));
      }));
    }
}

void cogroup_tasks(const Corpus& c, const VerifyOptions& opt, std::vector<Task>& tasks) {
  const std::string suite = "cogroup";
  for (const auto& M : c.modules)
    for (const auto& N : c.modules) {
      if (!(M.ring() == N.ring()) || M.order() * N.order() > kCogroupPairBound) continue;
      std::vector<Morphism> from_corpus;
      for (const auto& E : c.extensions)
        if (same_pair(E.M(), E.N(), M, N)) from_corpus.push_back(theta(E).f);
      for (const auto& C : c.coextensions)
        if (same_pair(C.M(), C.N(), M, N)) from_corpus.push_back(C.f);
      const std::string id = pair_id(M, N);
      tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
        const CogroupStructure C = cogroup(M, N);
        std::vector<Morphism> candidates{Morphism::identity(N), C.include_N(),
                                         Morphism::zero(N, Module::zero(N.ring()))};
        candidates.insert(candidates.end(), from_corpus.begin(), from_corpus.end());
        std::vector<Morphism> objects;
        bool exhaustive = true;
        for (auto& f : candidates) {
          if (std::find(objects.begin(), objects.end(), f) != objects.end()) continue;
          if (HomSet(C.sum.sum, f.target()).size() > opt.cap) {
            exhaustive = false;
            continue;
          }
          objects.push_back(std::move(f));
        }
        const std::size_t first = out.size();
        append_report(out, suite, id, check_cogroup_axioms(C, objects));
        for (std::size_t k = first; k < out.size(); ++k) out[k].exhaustive = exhaustive;
      }));
    }
}

void torsor_tasks(const Corpus& c, std::vector<Task>& tasks) {
  const std::string suite = "torsor";
  for (std::size_t k = 0; k < c.extensions.size(); ++k) {
    const Extension E = c.extensions[k];
    const std::string id = item_id(E.M(), E.N(), E.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      const TorsorStructure T = torsor_from_extension(E);
      append_report(out, suite, id, check_torsor_axioms(T));
      append_report(out, suite, id, check_torsor_lemmas(T));
    }));
  }
  for (std::size_t k = 0; k < c.torsors.size(); ++k) {
    const TorsorStructure T = c.torsors[k];
    const std::string id = "torsor|" + item_id(T.M(), T.N(), T.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      append_report(out, suite, id, check_torsor_axioms(T));
      append_report(out, suite, id, check_torsor_lemmas(T));
    }));
  }
}

void cotorsor_tasks(const Corpus& c, std::vector<Task>& tasks) {
  const std::string suite = "cotorsor";
  for (std::size_t k = 0; k < c.extensions.size(); ++k) {
    const Extension E = c.extensions[k];
    const std::string id = "theta|" + item_id(E.M(), E.N(), E.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      append_report(out, suite, id, check_cotorsor_axioms(cotorsor_from_coextension(theta(E))));
    }));
  }
  for (std::size_t k = 0; k < c.coextensions.size(); ++k) {
    const Coextension C = c.coextensions[k];
    const std::string id = item_id(C.M(), C.N(), C.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      append_report(out, suite, id, check_cotorsor_axioms(cotorsor_from_coextension(C)));
    }));
  }
  for (std::size_t k = 0; k < c.cotorsors.size(); ++k) {
    const CotorsorStructure T = c.cotorsors[k];
    const std::string id = "cotorsor|" + item_id(T.M(), T.N(), T.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      append_report(out, suite, id, check_cotorsor_axioms(T));
    }));
  }
}

void psi_tasks(const Corpus& c, const VerifyOptions& opt, std::vector<Task>& tasks) {
  const std::string suite = "psi";
  const auto& xs = c.extensions;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Extension E = xs[k];
    const std::string id = item_id(E.M(), E.N(), E.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      const TorsorStructure T = torsor_from_extension(E);
      const Extension back = extension_from_torsor(T);
      append(out, suite, id, "roundtrip-extension", back == E, "got " + back.alpha.to_string());
      const TorsorStructure again = torsor_from_extension(back);
      append(out, suite, id, "roundtrip-torsor", again == T, "got " + again.tau.to_string());
    }));
  }
  for (std::size_t k = 0; k < c.torsors.size(); ++k) {
    const TorsorStructure T = c.torsors[k];
    const std::string id = "torsor|" + item_id(T.M(), T.N(), T.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      const TorsorStructure again = torsor_from_extension(extension_from_torsor(T));
      append(out, suite, id, "roundtrip-torsor", again == T, "got " + again.tau.to_string());
    }));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (!same_pair(xs[i].M(), xs[i].N(), xs[j].M(), xs[j].N())) continue;
      const Extension E = xs[i];
      const Extension F = xs[j];
      const std::string id = pair_id(E.M(), E.N()) + "|#" + std::to_string(i) + "->#" + std::to_string(j);
      tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
        bijection_case(out, suite, id, psi_hom_bijection(E, F, opt.cap, opt.seed));
      }));
    }
}

void phi_tasks(const Corpus& c, const VerifyOptions& opt, std::vector<Task>& tasks) {
  const std::string suite = "phi";
  const auto& xs = c.coextensions;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Coextension C = xs[k];
    const std::string id = item_id(C.M(), C.N(), C.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      const CotorsorStructure T = cotorsor_from_coextension(C);
      const Coextension back = coextension_from_cotorsor(T);
      append(out, suite, id, "roundtrip-coextension", back == C, "got " + back.alpha.to_string());
      const CotorsorStructure again = cotorsor_from_coextension(back);
      append(out, suite, id, "roundtrip-cotorsor", again == T, "got " + again.tau.to_string());
    }));
  }
  for (std::size_t k = 0; k < c.cotorsors.size(); ++k) {
    const CotorsorStructure T = c.cotorsors[k];
    const std::string id = "cotorsor|" + item_id(T.M(), T.N(), T.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      const CotorsorStructure again = cotorsor_from_coextension(coextension_from_cotorsor(T));
      append(out, suite, id, "roundtrip-cotorsor", again == T, "got " + again.tau.to_string());
    }));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (!same_pair(xs[i].M(), xs[i].N(), xs[j].M(), xs[j].N())) continue;
      const Coextension E = xs[i];
      const Coextension F = xs[j];
      const std::string id = pair_id(E.M(), E.N()) + "|#" + std::to_string(i) + "->#" + std::to_string(j);
      tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
        bijection_case(out, suite, id, phi_hom_bijection(E, F, opt.cap, opt.seed));
      }));
    }
}

void theta_tasks(const Corpus& c, const VerifyOptions& opt, std::vector<Task>& tasks) {
  const std::string suite = "theta";
  const auto& xs = c.extensions;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Extension E = xs[k];
    const std::string id = item_id(E.M(), E.N(), E.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      const Extension back = theta_inverse(theta(E));
      append(out, suite, id, "roundtrip-extension", back == E, "got f=" + back.f.to_string());
    }));
  }
  for (std::size_t k = 0; k < c.coextensions.size(); ++k) {
    const Coextension C = c.coextensions[k];
    const std::string id = "coextension|" + item_id(C.M(), C.N(), C.P, k);
    tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
      const Coextension back = theta(theta_inverse(C));
      append(out, suite, id, "roundtrip-coextension", back == C, "got alpha=" + back.alpha.to_string());
    }));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (!same_pair(xs[i].M(), xs[i].N(), xs[j].M(), xs[j].N())) continue;
      const Extension E = xs[i];
      const Extension F = xs[j];
      const std::string id = pair_id(E.M(), E.N()) + "|#" + std::to_string(i) + "->#" + std::to_string(j);
      tasks.push_back(guarded(suite, id, [=](std::vector<CaseResult>& out) {
        bijection_case(out, suite, id, theta_hom_bijection(E, F, opt.cap, opt.seed));
      }));
    }
}

}  // namespace

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; }));
}

std::size_t VerificationReport::failed_count() const { return cases.size() - passed_count(); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group-object", "cogroup", "torsor", "cotorsor", "psi", "phi", "theta"};
  return names;
}

VerificationReport run_verification(const std::string& suite, const Corpus& corpus, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorKind::ParseError, "unknown suite '" + suite + "'");
  auto wanted = [&](const char* name) { return suite == "all" || suite == name; };

  std::vector<Task> tasks;
  if (wanted("group-object")) group_object_tasks(corpus, tasks);
  if (wanted("cogroup")) cogroup_tasks(corpus, options, tasks);
  if (wanted("torsor")) torsor_tasks(corpus, tasks);
  if (wanted("cotorsor")) cotorsor_tasks(corpus, tasks);
  if (wanted("psi")) psi_tasks(corpus, options, tasks);
  if (wanted("phi")) phi_tasks(corpus, options, tasks);
  if (wanted("theta")) theta_tasks(corpus, options, tasks);

  std::vector<std::vector<CaseResult>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::int64_t t = 0; t < count; ++t) {
    const auto k = static_cast<std::size_t>(t);
    try {
      results[k] = tasks[k]();
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerificationReport report{suite, options.seed, {}};
  for (auto& r : results)
    for (auto& c : r) report.cases.push_back(std::move(c));
  return report;
}

Json to_json(const VerificationReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"suite", c.suite},
                         {"case", c.case_id},
                         {"law", c.law},
                         {"status", c.passed ? "PASS" : "FAIL"},
                         {"exhaustive", c.exhaustive},
                         {"counterexample", c.counterexample ? Json(*c.counterexample) : Json(nullptr)}});
  }
  return Json{{"suite", r.suite},
              {"seed", r.seed},
              {"cases", std::move(cases)},
              {"summary", {{"total", r.cases.size()}, {"passed", r.passed_count()}, {"failed", r.failed_count()}}}};
}

}  // namespace homext
