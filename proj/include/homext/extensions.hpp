#pragma once

#include "homext/law_report.hpp"
#include "homext/limits.hpp"
#include "homext/module.hpp"
#include "homext/morphism.hpp"

namespace homext {

/// An extension of M by N: a surjection f : P -> M together with alpha : N -> P
/// mapping N isomorphically onto ker(f).
struct Extension {
  Module P;
  Morphism f;
  Morphism alpha;

  const Module& M() const { return f.target(); }
  const Module& N() const { return alpha.source(); }

  bool operator==(const Extension& other) const {
    return P == other.P && f == other.f && alpha == other.alpha;
  }
};

/// Validates and builds an extension. Throws NotSurjective or
/// AlphaNotKernelIso.
Extension make_extension(Module P, Morphism f, Morphism alpha);

/// pi_M : M + N -> M with alpha the inclusion of N.
Extension trivial_extension(const Module& M, const Module& N);

/// h : E.P -> F.P is a morphism of extensions when F.f h = E.f and
/// h alpha_E = alpha_F.
bool is_extension_morphism(const Extension& E, const Extension& F, const Morphism& h);

/// The abelian group object structure on pi_M : M + N -> M in modules over M.
struct GroupObjectStructure {
  Extension carrier;
  DirectSum sum;
  FiberProduct square;  // (M + N) x_M (M + N)
  Morphism unit;        // e_N(m) = (m, 0)
  Morphism add;         // ((m, a), (m, b)) -> (m, a + b)
  Morphism inv;         // (m, n) -> (m, -n)
};

GroupObjectStructure group_object(const Module& M, const Module& N);

/// Exhaustive elementwise check of: structure maps over M, associativity,
/// left/right unit, left/right inverse and commutativity.
LawReport check_group_axioms(const GroupObjectStructure& G);

}  // namespace homext
