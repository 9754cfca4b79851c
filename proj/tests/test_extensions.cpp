#include <doctest.h>

#include "homext/error.hpp"
#include "homext/extensions.hpp"
#include "support.hpp"

using namespace homext;
using namespace homext::testing;

namespace {

// The extension invariants, checked elementwise.
void check_is_extension(const Extension& E) {
  for (const auto& m : E.M().elements()) {
    bool hit = false;
    for (const auto& p : E.P.elements()) hit = hit || E.f(p) == m;
    CHECK(hit);
  }
  std::int64_t kernel_size = 0;
  for (const auto& p : E.P.elements()) kernel_size += E.f(p).is_zero() ? 1 : 0;
  CHECK(kernel_size == E.N().order());
  CHECK(compose(E.f, E.alpha).is_zero());
  CHECK(E.alpha.is_injective());
}

}  // namespace

TEST_SUITE("extensions") {

TEST_CASE("trivial extensions") {
  const Extension E = trivial_extension(zmod({2}), zmod({2}));
  CHECK(E.P.factors() == std::vector<std::int64_t>{2, 2});
  check_is_extension(E);

  const Extension Z = trivial_extension(Module::zero(kZ), zmod({4}));
  CHECK(Z.M().is_zero());
  CHECK(is_isomorphism(Z.alpha));

  const Extension crt = trivial_extension(zmod({2}), zmod({3}));
  CHECK(crt.P.factors() == std::vector<std::int64_t>{6});
  check_is_extension(crt);
  for (const auto& E2 : corpus().extensions) check_is_extension(E2);
}

TEST_CASE("validation") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  CHECK_NOTHROW(make_extension(Z4, Morphism(Z4, Z2, {{1}}), Morphism(Z2, Z4, {{2}})));
  try {
    make_extension(Z4, Morphism(Z4, Z2, {{1}}), Morphism::zero(Z2, Z4));
    FAIL("accepted alpha = 0");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlphaNotKernelIso);
  }
  try {
    make_extension(Z4, Morphism::zero(Z4, Z2), Morphism(Z2, Z4, {{2}}));
    FAIL("accepted f = 0");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSurjective);
  }
}

TEST_CASE("extension morphisms") {
  const Extension E = trivial_extension(zmod({2}), zmod({2}));
  CHECK(is_extension_morphism(E, E, Morphism::identity(E.P)));

  for (std::int64_t n : {2, 3}) {
    const Extension T = trivial_extension(zmod({2}), zmod({n}));
    const GroupObjectStructure G = group_object(zmod({2}), zmod({n}));
    CHECK(is_extension_morphism(T, T, G.inv) == (n == 2));
  }
  const Morphism collapse = compose(E.alpha, E.f);
  CHECK_FALSE(is_extension_morphism(E, E, collapse));
}

TEST_CASE("group object structure maps") {
  const RingDescriptor R = over(2);
  const GroupObjectStructure G = group_object(zmod({2}, R), zmod({2}, R));
  const DirectSum& s = G.sum;
  auto el = [&](std::int64_t m, std::int64_t n) { return s.pair(s.left.element({m}), s.right.element({n})); };
  CHECK(G.add(G.square.pair(el(1, 0), el(1, 1))) == el(1, 1));
  for (std::int64_t m : {0, 1}) CHECK(G.inv(el(m, 0)) == G.unit(s.left.element({m})));

  const GroupObjectStructure H = group_object(zmod({4}), zmod({4}));
  for (const auto& x : H.sum.sum.elements()) {
    const ModElement e = H.unit(H.carrier.f(x));
    CHECK(H.add(H.square.pair(e, x)) == x);
  }
}

TEST_CASE("group axioms hold on every corpus pair") {
  const auto& mods = corpus().modules;
  for (const auto& M : mods)
    for (const auto& N : mods) {
      if (!(M.ring() == N.ring()) || M.order() * N.order() > 16) continue;
      const LawReport r = check_group_axioms(group_object(M, N));
      CHECK_MESSAGE(r.passed(), (M.to_string() + " " + N.to_string()));
      CHECK(r.checks().size() == 9);
    }
  CHECK(check_group_axioms(group_object(zmod({2}), Module::zero(kZ))).passed());
}

TEST_CASE("corrupted addition drops the second summand") {
  GroupObjectStructure G = group_object(zmod({2}), zmod({2}));
  G.add = G.square.project_left;
  const LawReport r = check_group_axioms(G);
  CHECK(r.passed("associativity"));
  CHECK_FALSE(r.passed("left-unit"));
  CHECK_FALSE(r.find("left-unit")->counterexample.empty());
}

TEST_CASE("corrupted inverse is the identity") {
  GroupObjectStructure G = group_object(zmod({2}), zmod({3}));
  G.inv = Morphism::identity(G.sum.sum);
  const LawReport r = check_group_axioms(G);
  CHECK(r.passed("associativity"));
  CHECK_FALSE(r.passed("left-inverse"));
  CHECK_FALSE(r.passed("right-inverse"));
}

}  // TEST_SUITE
