#include "homext/extensions.hpp"

#include "homext/error.hpp"

namespace homext {

Extension make_extension(Module P, Morphism f, Morphism alpha) {
  if (!(f.source() == P)) throw Error(ErrorKind::SourceMismatch, "f must start at P");
  if (!(alpha.target() == P)) throw Error(ErrorKind::TargetMismatch, "alpha must land in P");
  if (!f.is_surjective()) throw Error(ErrorKind::NotSurjective, "f = " + f.to_string());
  if (!alpha.is_injective())
    throw Error(ErrorKind::AlphaNotKernelIso, "alpha is not injective: " + alpha.to_string());
  if (!compose(f, alpha).is_zero())
    throw Error(ErrorKind::AlphaNotKernelIso, "image of alpha is not inside ker(f)");
  // injective into ker(f) with |N| = |ker f| = |P| / |M|
  if (alpha.source().order() * f.target().order() != P.order())
    throw Error(ErrorKind::AlphaNotKernelIso, "image of alpha is smaller than ker(f)");
  return Extension{std::move(P), std::move(f), std::move(alpha)};
}

Extension trivial_extension(const Module& M, const Module& N) {
  DirectSum s = direct_sum(M, N);
  return make_extension(s.sum, s.project_left, s.inject_right);
}

bool is_extension_morphism(const Extension& E, const Extension& F, const Morphism& h) {
  if (!(E.M() == F.M()) || !(E.N() == F.N())) return false;
  if (!(h.source() == E.P) || !(h.target() == F.P)) return false;
  return compose(F.f, h) == E.f && compose(h, E.alpha) == F.alpha;
}

GroupObjectStructure group_object(const Module& M, const Module& N) {
  DirectSum s = direct_sum(M, N);
  Extension carrier = make_extension(s.sum, s.project_left, s.inject_right);
  FiberProduct sq = fiber_product(s.project_left, s.project_left);
  Morphism unit = s.inject_left;
  // (x, y) -> i_M(pi_M x) + i_N(pi_N x + pi_N y)
  Morphism add = compose(s.inject_left, compose(s.project_left, sq.project_left)) +
                 compose(s.inject_right, compose(s.project_right, sq.project_left) +
                                             compose(s.project_right, sq.project_right));
  Morphism inv = compose(s.inject_left, s.project_left) - compose(s.inject_right, s.project_right);
  return GroupObjectStructure{std::move(carrier), s, std::move(sq), std::move(unit), std::move(add),
                              std::move(inv)};
}

LawReport check_group_axioms(const GroupObjectStructure& G) {
  LawReport report;
  const auto& pi = G.carrier.f;
  const Module& X = G.carrier.P;
  const Module& M = pi.target();

  // structure maps are morphisms over M
  for (const auto& m : M.elements()) {
    report.check("unit-over-M", pi(G.unit(m)) == m, [&] { return "m=" + m.to_string(); });
  }
  for (const auto& w : G.square.module.elements()) {
    report.check("add-over-M", pi(G.add(w)) == G.square.structure(w), [&] {
      return "pair=" + G.square.project_left(w).to_string() + "," +
             G.square.project_right(w).to_string();
    });
  }
  for (const auto& x : X.elements()) {
    report.check("inv-over-M", pi(G.inv(x)) == pi(x), [&] { return "x=" + x.to_string(); });
  }

  const auto elems = X.elements();
  auto add = [&](const ModElement& a, const ModElement& b) { return G.add(G.square.pair(a, b)); };

  for (const auto& x : elems) {
    const ModElement e = G.unit(pi(x));
    const ModElement l = add(e, x);
    report.check("left-unit", l == x, [&] { return "x=" + x.to_string() + " got " + l.to_string(); });
    const ModElement r = add(x, e);
    report.check("right-unit", r == x, [&] { return "x=" + x.to_string() + " got " + r.to_string(); });
    const ModElement li = add(G.inv(x), x);
    report.check("left-inverse", li == e,
                 [&] { return "x=" + x.to_string() + " got " + li.to_string(); });
    const ModElement ri = add(x, G.inv(x));
    report.check("right-inverse", ri == e,
                 [&] { return "x=" + x.to_string() + " got " + ri.to_string(); });
    for (const auto& y : elems) {
      if (!(pi(y) == pi(x))) continue;
      report.check("commutativity", add(x, y) == add(y, x),
                   [&] { return "x=" + x.to_string() + " y=" + y.to_string(); });
      for (const auto& z : elems) {
        if (!(pi(z) == pi(x))) continue;
        report.check("associativity", add(add(x, y), z) == add(x, add(y, z)), [&] {
          return "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
        });
      }
    }
  }
  return report;
}

}  // namespace homext
