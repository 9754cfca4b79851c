#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homext/corpus.hpp"
#include "homext/serialize.hpp"

namespace homext {

struct CaseResult {
  std::string suite;
  std::string case_id;
  std::string law;
  bool passed = true;
  bool exhaustive = true;
  std::optional<std::string> counterexample;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool passed() const { return failed_count() == 0; }
};

/// group-object, cogroup, torsor, cotorsor, psi, phi, theta.
const std::vector<std::string>& suite_names();

/// Module pairs with |M| * |N| above this are skipped by the cogroup suite.
inline constexpr std::int64_t kCogroupPairBound = 8;

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultHomCap;
  bool parallel = true;
};

/// Runs one suite or "all" over the corpus. Cases are independent and may run
/// in parallel; the report lists them in a fixed order. Throws ParseError for
/// an unknown suite name.
VerificationReport run_verification(const std::string& suite, const Corpus& corpus,
                                    const VerifyOptions& options = {});

Json to_json(const VerificationReport& r);

}  // namespace homext
