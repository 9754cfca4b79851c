#pragma once

#include <utility>

#include "homext/module.hpp"
#include "homext/morphism.hpp"
#include "homext/subquotient.hpp"

namespace homext {

/// M + N renormalized to invariant-factor form, with the four canonical maps
/// tracked through the renormalizing isomorphism. When the concatenated
/// factor list sorts into a chain the basis is a permutation of the raw one.
struct DirectSum {
  Module left;
  Module right;
  Module sum;
  Morphism inject_left;    // i_M
  Morphism inject_right;   // i_N
  Morphism project_left;   // pi_M
  Morphism project_right;  // pi_N

  /// i_M(a) + i_N(b)
  ModElement pair(const ModElement& a, const ModElement& b) const;
  /// <a, b> : X -> M + N for a : X -> M, b : X -> N.
  Morphism pairing(const Morphism& a, const Morphism& b) const;
};

DirectSum direct_sum(const Module& left, const Module& right);

/// P x_M Q = {(p, q) | f(p) = g(q)} with its projections and structure map.
struct FiberProduct {
  Morphism left_map;   // f : P -> M
  Morphism right_map;  // g : Q -> M
  Module module;
  Morphism project_left;
  Morphism project_right;
  Morphism structure;  // (f x g)(p, q) = f(p) = g(q)
  Subquotient layout;  // over the raw product P + Q

  /// The element (p, q); requires f(p) = g(q).
  ModElement pair(const ModElement& p, const ModElement& q) const;
  /// Mediating map X -> P x_M Q for a : X -> P, b : X -> Q with f a = g b.
  Morphism lift(const Morphism& a, const Morphism& b) const;
};

FiberProduct fiber_product(const Morphism& f, const Morphism& g);

/// P amalg_N Q = coker((f, -g) : N -> P + Q) with coprojections and
/// structure map.
struct Pushout {
  Morphism left_map;   // f : N -> P
  Morphism right_map;  // g : N -> Q
  Module module;
  Morphism include_left;
  Morphism include_right;
  Morphism structure;  // (f amalg g)(n) = (f(n), 0) = (0, g(n))
  Subquotient layout;  // over the raw product P + Q

  /// Class of (p, q).
  ModElement class_of(const ModElement& p, const ModElement& q) const;
  /// A representative pair of x.
  std::pair<ModElement, ModElement> representative(const ModElement& x) const;
  /// Mediating map P amalg_N Q -> X for a : P -> X, b : Q -> X with
  /// a f = b g. Throws Incompatible otherwise.
  Morphism descend(const Morphism& a, const Morphism& b) const;
  /// Index of the class of raw pair (p, q) given by element indices.
  std::int64_t class_index(std::int64_t p_index, std::int64_t q_index) const;
};

Pushout pushout(const Morphism& f, const Morphism& g);

}  // namespace homext
