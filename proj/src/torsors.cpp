#include "homext/torsors.hpp"

#include "homext/error.hpp"

namespace homext {

ModElement TorsorStructure::act(const ModElement& n, const ModElement& p) const {
  return tau(action_domain.pair(n, p));
}

TorsorStructure make_torsor(Morphism f, const Module& N, Morphism tau) {
  Module P = f.source();
  DirectSum dom = direct_sum(N, P);
  if (!(tau.source() == dom.sum))
    throw Error(ErrorKind::SourceMismatch, "tau must start at N + P = " + dom.sum.to_string());
  if (!(tau.target() == P)) throw Error(ErrorKind::TargetMismatch, "tau must land in P");
  return TorsorStructure{std::move(P), std::move(f), std::move(dom), std::move(tau)};
}

Morphism build_beta(const Morphism& f, const Module& N) {
  DirectSum dom = direct_sum(N, f.source());
  return compose(f, dom.project_right);
}

BetaComparison beta_iso_product(const Morphism& f, const Module& N) {
  const Module& P = f.source();
  const Module& M = f.target();
  DirectSum dom = direct_sum(N, P);
  DirectSum triv = direct_sum(M, N);
  FiberProduct prod = fiber_product(triv.project_left, f);
  // ((f(p), n), p)
  Morphism first = triv.pairing(compose(f, dom.project_right), dom.project_left);
  Morphism phi = prod.lift(first, dom.project_right);
  return BetaComparison{std::move(dom), std::move(triv), std::move(prod), std::move(phi)};
}

LawReport check_torsor_axioms(const TorsorStructure& T) {
  LawReport report;
  const auto Ps = T.P.elements();
  const auto Ns = T.N().elements();
  const ModElement zero_n = T.N().zero_element();

  for (const auto& p : Ps) {
    const ModElement u = T.act(zero_n, p);
    report.check("unit", u == p, [&] { return "p=" + p.to_string() + " got " + u.to_string(); });
  }
  for (const auto& p2 : Ps) {
    std::vector<std::vector<std::int64_t>> hits(Ps.size());
    for (std::size_t k = 0; k < Ns.size(); ++k) {
      const ModElement q = T.act(Ns[k], p2);
      report.check("over-M", T.f(q) == T.f(p2),
                   [&] { return "n=" + Ns[k].to_string() + " p=" + p2.to_string(); });
      hits[static_cast<std::size_t>(q.index())].push_back(static_cast<std::int64_t>(k));
    }
    for (const auto& p1 : Ps) {
      if (!(T.f(p1) == T.f(p2))) continue;
      const auto& h = hits[static_cast<std::size_t>(p1.index())];
      report.check("existence", !h.empty(),
                   [&] { return "p1=" + p1.to_string() + " p2=" + p2.to_string(); });
      report.check("uniqueness", h.size() <= 1, [&] {
        return "p1=" + p1.to_string() + " p2=" + p2.to_string() + " n=" + Ns[static_cast<std::size_t>(h[0])].to_string() +
               " and n=" + Ns[static_cast<std::size_t>(h[1])].to_string();
      });
    }
  }
  return report;
}

LawReport check_torsor_lemmas(const TorsorStructure& T) {
  LawReport report;
  const auto Ps = T.P.elements();
  const auto Ns = T.N().elements();
  const ModElement zero_p = T.P.zero_element();
  for (const auto& n : Ns) {
    const ModElement base = T.act(n, zero_p);
    for (const auto& p : Ps) {
      report.check("translation", T.act(n, p) == base + p,
                   [&] { return "n=" + n.to_string() + " p=" + p.to_string(); });
    }
  }
  for (const auto& n1 : Ns)
    for (const auto& n2 : Ns)
      for (const auto& p : Ps) {
        report.check("compatibility", T.act(n1 + n2, p) == T.act(n1, T.act(n2, p)), [&] {
          return "n1=" + n1.to_string() + " n2=" + n2.to_string() + " p=" + p.to_string();
        });
      }
  return report;
}

TorsorStructure torsor_from_extension(const Extension& E) {
  DirectSum dom = direct_sum(E.N(), E.P);
  Morphism tau = compose(E.alpha, dom.project_left) + dom.project_right;
  return TorsorStructure{E.P, E.f, std::move(dom), std::move(tau)};
}

bool is_torsor_morphism(const TorsorStructure& S, const TorsorStructure& T, const Morphism& h) {
  if (!(S.M() == T.M()) || !(S.N() == T.N())) return false;
  if (!(h.source() == S.P) || !(h.target() == T.P)) return false;
  if (!(compose(T.f, h) == S.f)) return false;
  // h tau_S = tau_T (id_N + h) as maps N + P -> Q
  Morphism id_h = T.action_domain.pairing(S.action_domain.project_left,
                                          compose(h, S.action_domain.project_right));
  return compose(h, S.tau) == compose(T.tau, id_h);
}

Extension extension_from_torsor(const TorsorStructure& T) {
  LawReport axioms = check_torsor_axioms(T);
  if (!axioms.passed()) {
    for (const auto& c : axioms.checks())
      if (!c.passed)
        throw Error(ErrorKind::AxiomViolation, "torsor " + c.law + " fails at " + c.counterexample);
  }
  Morphism alpha = compose(T.tau, T.action_domain.inject_left);
  return make_extension(T.P, T.f, std::move(alpha));
}

HomBijectionReport psi_hom_bijection(const Extension& E, const Extension& F, std::uint64_t cap,
                                     std::uint64_t seed) {
  const TorsorStructure S = torsor_from_extension(E);
  const TorsorStructure T = torsor_from_extension(F);
  return compare_hom_filters(
      HomSet(E.P, F.P), [&](const Morphism& h) { return is_extension_morphism(E, F, h); },
      [&](const Morphism& h) { return is_torsor_morphism(S, T, h); }, cap, seed);
}

}  // namespace homext
