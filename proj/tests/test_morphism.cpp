#include <doctest.h>

#include <set>

#include "homext/error.hpp"
#include "homext/morphism.hpp"
#include "homext/subquotient.hpp"
#include "support.hpp"

using namespace homext;
using namespace homext::testing;

TEST_SUITE("morphism") {

TEST_CASE("application") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  CHECK(Morphism(Z2, Z4, {{2}})(Z2.element({1})) == Z4.element({2}));
  CHECK(Morphism(Z4, Z2, {{1}})(Z4.element({3})) == Z2.element({1}));
  for (const auto& m : corpus().modules) {
    const Morphism id = Morphism::identity(m);
    for (const auto& x : m.elements()) CHECK(id(x) == x);
  }
  CHECK_THROWS_AS(Morphism(Z2, Z4, {{2}})(Z4.element({1})), Error);
}

TEST_CASE("well-definedness is checked") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  CHECK_THROWS_AS(Morphism(Z2, Z4, {{1}}), Error);
  CHECK_THROWS_AS(Morphism(Z2, Z4, {{2, 0}}), Error);
  CHECK_THROWS_AS(Morphism(Z2, zmod({2}, over(2)), {{1}}), Error);
}

TEST_CASE("small hom-sets") {
  const Module Z2 = zmod({2});
  const HomSet h(Z2, zmod({4}));
  REQUIRE(h.size() == 2);
  CHECK(h.at(0).matrix() == Matrix{{0}});
  CHECK(h.at(1).matrix() == Matrix{{2}});
  const HomSet z(Z2, zmod({3}));
  REQUIRE(z.size() == 1);
  CHECK(z.at(0).is_zero());
}

TEST_CASE("hom-set sizes agree with the generator-image oracle") {
  const auto& mods = corpus().modules;
  for (const auto& a : mods)
    for (const auto& b : mods) {
      if (!(a.ring() == b.ring()) || a.order() * b.order() > 32) continue;
      const HomSet h(a, b);
      CHECK(static_cast<std::int64_t>(h.size()) == brute_hom_count(a.factors(), b.factors()));
      std::set<Matrix> distinct;
      for (const auto& f : h.all()) distinct.insert(f.matrix());
      CHECK(distinct.size() == h.size());
    }
}

TEST_CASE("every hom contains the identity and is additive") {
  for (const auto& m : corpus().modules) {
    if (m.order() > 4) continue;
    const HomSet h(m, m);
    bool has_identity = false;
    for (const auto& f : h.all()) {
      has_identity = has_identity || f == Morphism::identity(m);
      for (const auto& a : m.elements())
        for (const auto& b : m.elements()) CHECK(f(a + b) == f(a) + f(b));
    }
    CHECK(has_identity);
  }
}

TEST_CASE("composition applies right to left") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  const Morphism up(Z2, Z4, {{2}});
  const Morphism down(Z4, Z2, {{1}});
  CHECK(compose(down, up).is_zero());
  CHECK(compose(up, down) == Morphism(Z4, Z4, {{2}}));
  CHECK_THROWS_AS(compose(up, up), Error);
  const HomSet a(Z4, Z4);
  for (const auto& f : a.all())
    for (const auto& g : a.all())
      for (const auto& x : Z4.elements()) CHECK(compose(g, f)(x) == g(f(x)));
}

TEST_CASE("surjectivity and isomorphism") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  CHECK(Morphism::identity(Z4).is_surjective());
  CHECK_FALSE(Morphism(Z2, Z4, {{2}}).is_surjective());
  CHECK(is_isomorphism(Morphism(Z4, Z4, {{3}})));
  CHECK_FALSE(is_isomorphism(Morphism(Z4, Z4, {{2}})));
}

TEST_CASE("sampling is deterministic and marks itself") {
  const Module big = zmod({2, 2, 2});
  const HomSet h(big, big);
  REQUIRE(h.size() == 512);
  const HomSelection all = select_homs(h, kDefaultHomCap, 3);
  CHECK(all.exhaustive);
  CHECK(all.indices.size() == 512);
  const HomSelection a = select_homs(h, 50, 3);
  const HomSelection b = select_homs(h, 50, 3);
  const HomSelection c = select_homs(h, 50, 4);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.indices.size() == 50);
  CHECK(a.indices == b.indices);
  CHECK(a.indices != c.indices);
  CHECK(a.indices.front() == 0);
  CHECK(std::is_sorted(a.indices.begin(), a.indices.end()));
}

TEST_CASE("kernels") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  const Kernel k = kernel(Morphism(Z4, Z2, {{1}}));
  CHECK(k.module == Z2);
  CHECK(k.inclusion.image() == std::vector<ModElement>{Z4.element({0}), Z4.element({2})});
  for (const auto& m : corpus().modules) {
    CHECK(kernel(Morphism::identity(m)).module.is_zero());
    CHECK(kernel(Morphism::zero(m, Module::cyclic(m.ring(), 2))).module == m);
  }
  // the kernel is exactly the set of elements sent to zero
  for (const auto& m : corpus().modules) {
    if (!(m.ring() == kZ) || m.order() > 4) continue;
    for (const auto& f : hom_enumerate(m, zmod({2, 4}))) {
      const Kernel kf = kernel(f);
      std::size_t zeros = 0;
      for (const auto& x : m.elements()) zeros += f(x).is_zero() ? 1 : 0;
      CHECK(static_cast<std::size_t>(kf.module.order()) == zeros);
      CHECK(compose(f, kf.inclusion).is_zero());
      CHECK(kf.inclusion.is_injective());
    }
  }
}

TEST_CASE("cokernels") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  const Morphism twice(Z2, Z4, {{2}});
  const Cokernel c = cokernel(twice);
  CHECK(c.module == Z2);
  CHECK(c.projection(Z4.element({3})) == Z2.element({1}));
  for (const auto& m : corpus().modules) {
    CHECK(cokernel(Morphism::identity(m)).module.is_zero());
    CHECK(cokernel(Morphism::zero(Module::cyclic(m.ring(), 2), m)).module == m);
  }
  // factoring the reduction map through the cokernel
  const Morphism reduce(Z4, Z2, {{1}});
  const Morphism bar = c.factor(reduce);
  CHECK(compose(bar, c.projection) == reduce);
  CHECK_THROWS_AS(c.factor(Morphism::identity(Z4)), Error);
}

TEST_CASE("coset equality") {
  const Module Z2 = zmod({2});
  const Module Z4 = zmod({4});
  const Morphism twice(Z2, Z4, {{2}});
  CHECK(CosetElement(twice, Z4.element({1})) == CosetElement(twice, Z4.element({3})));
  CHECK_FALSE(CosetElement(twice, Z4.element({1})) == CosetElement(twice, Z4.element({2})));
  CHECK(CosetElement(twice, Z4.element({3})).canonical().representative() == Z4.element({1}));
}

}  // TEST_SUITE
