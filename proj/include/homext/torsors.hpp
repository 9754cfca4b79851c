#pragma once

#include "homext/extensions.hpp"
#include "homext/hom_bijection.hpp"
#include "homext/law_report.hpp"
#include "homext/limits.hpp"

namespace homext {

/// f : P -> M with an action tau : N + P -> P.
struct TorsorStructure {
  Module P;
  Morphism f;
  DirectSum action_domain;  // N + P
  Morphism tau;

  const Module& M() const { return f.target(); }
  const Module& N() const { return action_domain.left; }

  /// tau(n, p)
  ModElement act(const ModElement& n, const ModElement& p) const;

  bool operator==(const TorsorStructure& other) const {
    return P == other.P && f == other.f && N() == other.N() && tau == other.tau;
  }
};

/// Shape checks only (tau : N + P -> P, f : P -> M); axioms are checked
/// separately by check_torsor_axioms.
TorsorStructure make_torsor(Morphism f, const Module& N, Morphism tau);

/// beta_f(n, p) = f(p), as a map N + P -> M.
Morphism build_beta(const Morphism& f, const Module& N);

/// phi(n, p) = ((f(p), n), p) into (M + N) x_M P.
struct BetaComparison {
  DirectSum domain;     // N + P
  DirectSum trivial;    // M + N
  FiberProduct product; // pi_M x f
  Morphism phi;
};

BetaComparison beta_iso_product(const Morphism& f, const Module& N);

/// Laws: over-M, unit, existence and uniqueness of the acting element.
LawReport check_torsor_axioms(const TorsorStructure& T);

/// tau(n, p) = tau(n, 0) + p and tau(n1 + n2, p) = tau(n1, tau(n2, p)).
LawReport check_torsor_lemmas(const TorsorStructure& T);

/// tau(n, p) = alpha(n) + p.
TorsorStructure torsor_from_extension(const Extension& E);

bool is_torsor_morphism(const TorsorStructure& S, const TorsorStructure& T, const Morphism& h);

/// alpha(n) = tau(n, 0). Throws AxiomViolation when T is not a torsor.
Extension extension_from_torsor(const TorsorStructure& T);

/// Extension morphisms E -> F against torsor morphisms between the images.
HomBijectionReport psi_hom_bijection(const Extension& E, const Extension& F,
                                     std::uint64_t cap = kDefaultHomCap, std::uint64_t seed = 0);

}  // namespace homext
