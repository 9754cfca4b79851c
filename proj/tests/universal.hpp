#pragma once

#include <map>
#include <string>
#include <utility>

#include "homext/limits.hpp"

namespace homext::testing {

struct UniversalOutcome {
  bool ok = true;
  std::size_t cones = 0;
  std::string failure;
};

// Every cone (a, b) from T over the cospan has exactly one mediating map into
// the fiber product, and every map into it is mediating for its own cone.
inline UniversalOutcome check_fiber_product_universal(const FiberProduct& fp, const Module& T) {
  UniversalOutcome out;
  const Module& P = fp.left_map.source();
  const Module& Q = fp.right_map.source();
  std::map<std::pair<Matrix, Matrix>, int> mediating;
  for (const auto& u : hom_enumerate(T, fp.module))
    ++mediating[{compose(fp.project_left, u).matrix(), compose(fp.project_right, u).matrix()}];
  const auto as = hom_enumerate(T, P);
  const auto bs = hom_enumerate(T, Q);
  for (const auto& a : as)
    for (const auto& b : bs) {
      if (!(compose(fp.left_map, a) == compose(fp.right_map, b))) continue;
      ++out.cones;
      auto it = mediating.find({a.matrix(), b.matrix()});
      const int n = it == mediating.end() ? 0 : it->second;
      if (n != 1 && out.ok) {
        out.ok = false;
        out.failure = "T=" + T.to_string() + " a=" + a.to_string() + " b=" + b.to_string() +
                      " has " + std::to_string(n) + " mediating maps";
      }
      if (n == 1 && out.ok) {
        const Morphism u = fp.lift(a, b);
        if (!(compose(fp.project_left, u) == a) || !(compose(fp.project_right, u) == b)) {
          out.ok = false;
          out.failure = "lift disagrees with the mediating map for a=" + a.to_string();
        }
      }
    }
  std::size_t total = 0;
  for (const auto& [key, n] : mediating) total += static_cast<std::size_t>(n);
  if (out.ok && total != out.cones) {
    out.ok = false;
    out.failure = "T=" + T.to_string() + ": " + std::to_string(total) + " maps against " +
                  std::to_string(out.cones) + " cones";
  }
  return out;
}

// Dual: every cocone (a, b) into T factors uniquely through the pushout.
inline UniversalOutcome check_pushout_universal(const Pushout& po, const Module& T) {
  UniversalOutcome out;
  const Module& P = po.left_map.target();
  const Module& Q = po.right_map.target();
  std::map<std::pair<Matrix, Matrix>, int> mediating;
  for (const auto& u : hom_enumerate(po.module, T))
    ++mediating[{compose(u, po.include_left).matrix(), compose(u, po.include_right).matrix()}];
  for (const auto& a : hom_enumerate(P, T))
    for (const auto& b : hom_enumerate(Q, T)) {
      if (!(compose(a, po.left_map) == compose(b, po.right_map))) continue;
      ++out.cones;
      auto it = mediating.find({a.matrix(), b.matrix()});
      const int n = it == mediating.end() ? 0 : it->second;
      if (n != 1 && out.ok) {
        out.ok = false;
        out.failure = "T=" + T.to_string() + " a=" + a.to_string() + " b=" + b.to_string() +
                      " has " + std::to_string(n) + " mediating maps";
      }
      if (n == 1 && out.ok) {
        const Morphism d = po.descend(a, b);
        if (!(compose(d, po.include_left) == a) || !(compose(d, po.include_right) == b)) {
          out.ok = false;
          out.failure = "descend disagrees with the mediating map for a=" + a.to_string();
        }
      }
    }
  std::size_t total = 0;
  for (const auto& [key, n] : mediating) total += static_cast<std::size_t>(n);
  if (out.ok && total != out.cones) {
    out.ok = false;
    out.failure = "T=" + T.to_string() + ": " + std::to_string(total) + " maps against " +
                  std::to_string(out.cones) + " cocones";
  }
  return out;
}

}  // namespace homext::testing
