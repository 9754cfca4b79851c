#pragma once

#include <cstdint>
#include <vector>

#include "homext/morphism.hpp"

namespace homext {

/// Two filters run over the same hom-set. Fullness plus faithfulness of a
/// functor that is the identity on underlying maps amounts to the two
/// filtered index sets being equal.
struct HomBijectionReport {
  std::uint64_t hom_size = 0;
  bool exhaustive = true;
  std::vector<std::uint64_t> left;   // indices passing the source-category predicate
  std::vector<std::uint64_t> right;  // indices passing the target-category predicate

  bool equal() const { return left == right; }
};

template <class LeftPred, class RightPred>
HomBijectionReport compare_hom_filters(const HomSet& homs, LeftPred&& left_pred,
                                       RightPred&& right_pred, std::uint64_t cap = kDefaultHomCap,
                                       std::uint64_t seed = 0) {
  HomBijectionReport r;
  r.hom_size = homs.size();
  HomSelection sel = select_homs(homs, cap, seed);
  r.exhaustive = sel.exhaustive;
  for (std::uint64_t i : sel.indices) {
    const Morphism h = homs.at(i);
    if (left_pred(h)) r.left.push_back(i);
    if (right_pred(h)) r.right.push_back(i);
  }
  return r;
}

}  // namespace homext
