#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homext/hom_bijection.hpp"
#include "homext/law_report.hpp"
#include "homext/limits.hpp"
#include "homext/subquotient.hpp"

namespace homext {

/// A coextension of N by M: an injection f : N -> P with an isomorphism
/// alpha : coker(f) -> M.
struct Coextension {
  Module P;
  Morphism f;
  Cokernel cokernel;
  Morphism alpha;

  const Module& N() const { return f.source(); }
  const Module& M() const { return alpha.target(); }

  /// alpha([p])
  ModElement alpha_of(const ModElement& p) const { return alpha(cokernel.projection(p)); }
  /// alpha o projection : P -> M
  Morphism alpha_on_P() const { return compose(alpha, cokernel.projection); }

  bool operator==(const Coextension& other) const {
    return P == other.P && f == other.f && alpha == other.alpha;
  }
};

/// alpha must start at cokernel(f).module. Throws NotInjective or
/// AlphaNotCokernelIso.
Coextension make_coextension(Morphism f, Morphism alpha);
/// alpha given on representatives, a : P -> M vanishing on f(N).
Coextension make_coextension_from_lift(Morphism f, const Morphism& alpha_on_P);

/// i_N : N -> M + N with alpha([(m, n)]) = m.
Coextension trivial_coextension(const Module& M, const Module& N);

/// h : E.P -> F.P with h E.f = F.f and alpha_F(h[p]) = alpha_E([p]); the
/// coset identity is checked on every representative p + f(n).
bool is_coextension_morphism(const Coextension& E, const Coextension& F, const Morphism& h);

/// Hom_{N/Mod}(i_N, f) for an object f : N -> P, with
/// (g + h)(m, n) = g(m, 0) + h(m, 0) + f(n).
struct HomGroup {
  Morphism object;  // f : N -> P
  DirectSum domain; // M + N
  std::vector<Morphism> elements;
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;

  std::size_t index_of(const Morphism& g) const;  // throws when absent
  Morphism add(const Morphism& g, const Morphism& h) const;
};

HomGroup hom_group(const Module& M, const Morphism& object);

/// Closure, associativity, identity (m, n) -> f(n), inverses, commutativity.
LawReport check_hom_group(const HomGroup& G);

/// The cogroup object structure on i_N : N -> M + N in modules under N.
struct CogroupStructure {
  Module M;
  Module N;
  DirectSum sum;     // M + N
  Pushout square;    // (M + N) amalg_N (M + N) along i_N, i_N
  Morphism counit;   // e_M(m, n) = n
  Morphism coadd;    // (m, n) -> [(m, n), (m, 0)]
  Morphism coinv;    // (m, n) -> (-m, n)

  const Morphism& include_N() const { return sum.inject_right; }
};

CogroupStructure cogroup(const Module& M, const Module& N);

/// (a) direct diagram checks: structure maps under N, counit laws,
///     coassociativity in the triple pushout, coinverse via the fold map,
///     cocommutativity;
/// (b) corepresented checks against hom_group for every object in `objects`
///     (maps out of N), plus functoriality of post-composition for every
///     morphism between them.
LawReport check_cogroup_axioms(const CogroupStructure& C, std::span<const Morphism> objects);

/// beta_f(n) = (0, f(n)) : N -> M + P.
Morphism build_beta_co(const Morphism& f, const Module& M);

/// phi(m, p) = ((m, 0), p) into (M + N) amalg_N P.
struct CoproductComparison {
  DirectSum domain;   // M + P
  DirectSum trivial;  // M + N
  Pushout coproduct;  // i_N amalg f
  Morphism phi;
};

CoproductComparison beta_iso_coproduct(const Morphism& f, const Module& M);

/// f : N -> P with a coaction tau : P -> M + P.
struct CotorsorStructure {
  Module P;
  Morphism f;
  DirectSum coaction_target;  // M + P
  Morphism tau;

  const Module& M() const { return coaction_target.left; }
  const Module& N() const { return f.source(); }

  bool operator==(const CotorsorStructure& other) const {
    return P == other.P && f == other.f && M() == other.M() && tau == other.tau;
  }
};

CotorsorStructure make_cotorsor(Morphism f, const Module& M, Morphism tau);

/// Laws: under-N, section, representative-independence, decomposition
/// existence and uniqueness over P amalg_N P.
LawReport check_cotorsor_axioms(const CotorsorStructure& T);

/// tau(p) = (alpha([p]), p).
CotorsorStructure cotorsor_from_coextension(const Coextension& E);

/// h under N with tau_T h = (id_M + h) tau_S.
bool is_cotorsor_morphism(const CotorsorStructure& S, const CotorsorStructure& T, const Morphism& h);

/// alpha([p]) = pi_M(tau(p)). Throws AxiomViolation when T is not a cotorsor.
Coextension coextension_from_cotorsor(const CotorsorStructure& T);

HomBijectionReport phi_hom_bijection(const Coextension& E, const Coextension& F,
                                     std::uint64_t cap = kDefaultHomCap, std::uint64_t seed = 0);

}  // namespace homext
