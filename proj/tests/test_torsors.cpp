#include <doctest.h>

#include "homext/error.hpp"
#include "homext/torsors.hpp"
#include "support.hpp"

using namespace homext;
using namespace homext::testing;

namespace {

Extension doubling() {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  return make_extension(Z4, Morphism(Z4, Z2, {{1}}), Morphism(Z2, Z4, {{2}}));
}

// h is a torsor morphism, checked pointwise.
bool torsor_morphism_oracle(const TorsorStructure& S, const TorsorStructure& T, const Morphism& h) {
  for (const auto& p : S.P.elements()) {
    if (!(T.f(h(p)) == S.f(p))) return false;
    for (const auto& n : S.N().elements())
      if (!(h(S.act(n, p)) == T.act(n, h(p)))) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("torsors") {

TEST_CASE("beta and the comparison map") {
  const Extension E = doubling();
  const Morphism beta = build_beta(E.f, E.N());
  const DirectSum d = direct_sum(E.N(), E.P);
  CHECK(beta(d.pair(E.N().element({1}), E.P.element({3}))) == E.M().element({1}));

  const BetaComparison c = beta_iso_product(E.f, E.N());
  CHECK(c.product.module.order() == 8);
  CHECK(c.domain.sum.order() == 8);
  CHECK(is_isomorphism(c.phi));
  for (const auto& Ex : corpus().extensions) CHECK(is_isomorphism(beta_iso_product(Ex.f, Ex.N()).phi));
}

TEST_CASE("action of an extension") {
  const TorsorStructure T = torsor_from_extension(doubling());
  const Module& P = T.P;
  for (const auto& p : P.elements()) {
    CHECK(T.act(T.N().element({1}), p) == p + P.element({2}));
    CHECK(T.act(T.N().zero_element(), p) == p);
  }
}

TEST_CASE("axioms and lemmas hold on the corpus") {
  for (const auto& E : corpus().extensions) {
    const TorsorStructure T = torsor_from_extension(E);
    const LawReport a = check_torsor_axioms(T);
    CHECK_MESSAGE(a.passed(), E.P.to_string());
    CHECK(a.passed("existence"));
    CHECK(a.passed("uniqueness"));
    CHECK(check_torsor_lemmas(T).passed());
    CHECK(extension_from_torsor(T) == E);
  }
}

TEST_CASE("an action that ignores N") {
  const Extension E = doubling();
  const DirectSum d = direct_sum(E.N(), E.P);
  const TorsorStructure T = make_torsor(E.f, E.N(), d.project_right);
  const LawReport r = check_torsor_axioms(T);
  CHECK(r.passed("unit"));
  CHECK(r.passed("over-M"));
  CHECK_FALSE(r.passed("uniqueness"));
  CHECK_FALSE(r.passed("existence"));
  CHECK_THROWS_AS(extension_from_torsor(T), Error);
}

TEST_CASE("an action that leaves the fiber") {
  const Extension E = trivial_extension(zmod({2}), zmod({2}));
  const DirectSum d = direct_sum(E.N(), E.P);
  const DirectSum s = direct_sum(E.M(), E.N());
  // tau(n, p) = p + (n, 0)
  const Morphism tau = d.project_right + compose(s.inject_left, d.project_left);
  const LawReport r = check_torsor_axioms(make_torsor(E.f, E.N(), tau));
  CHECK_FALSE(r.passed("over-M"));
}

TEST_CASE("shape checks") {
  const Extension E = doubling();
  CHECK_THROWS_AS(make_torsor(E.f, E.N(), Morphism::identity(E.P)), Error);
  const DirectSum d = direct_sum(E.N(), E.P);
  CHECK_THROWS_AS(make_torsor(E.f, E.N(), d.project_left), Error);
}

TEST_CASE("torsor morphisms agree with the pointwise oracle") {
  const Extension E = trivial_extension(zmod({2}), zmod({2}));
  const TorsorStructure T = torsor_from_extension(E);
  const Module& P = E.P;
  const Morphism shear(P, P, {{1, 0}, {1, 1}});
  for (const auto& x : P.elements()) {
    const auto& c = x.coords();
    CHECK(shear(x).coords() == Coords{c[0], (c[0] + c[1]) % 2});
  }
  CHECK(is_torsor_morphism(T, T, shear));
  for (const auto& h : hom_enumerate(P, P))
    CHECK(is_torsor_morphism(T, T, h) == torsor_morphism_oracle(T, T, h));

  const TorsorStructure D = torsor_from_extension(doubling());
  for (const auto& h : hom_enumerate(D.P, D.P))
    CHECK(is_torsor_morphism(D, D, h) == torsor_morphism_oracle(D, D, h));
}

TEST_CASE("hom bijection") {
  const Extension T = trivial_extension(zmod({2}), zmod({2}));
  const Extension D = doubling();
  const HomBijectionReport tt = psi_hom_bijection(T, T);
  CHECK(tt.equal());
  CHECK(tt.left.size() == 2);
  CHECK(tt.hom_size == 16);
  const HomBijectionReport td = psi_hom_bijection(T, D);
  CHECK(td.equal());
  CHECK(td.left.empty());
  const HomBijectionReport dd = psi_hom_bijection(D, D);
  CHECK(dd.equal());
  CHECK_FALSE(dd.left.empty());
  for (const auto& E : corpus().extensions)
    for (const auto& F : corpus().extensions)
      if (E.M() == F.M() && E.N() == F.N() && E.P.order() <= 8) CHECK(psi_hom_bijection(E, F).equal());
}

}  // TEST_SUITE
