#include "homext/cotorsors.hpp"

#include <array>
#include <limits>
#include <optional>
#include <map>
#include <set>

#include "homext/error.hpp"

namespace homext {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// First element where two parallel morphisms differ, or empty.
std::string first_difference(const Morphism& a, const Morphism& b) {
  for (const auto& x : a.source().elements()) {
    const ModElement ya = a(x);
    const ModElement yb = b(x);
    if (!(ya == yb)) return "x=" + x.to_string() + " lhs=" + ya.to_string() + " rhs=" + yb.to_string();
  }
  return {};
}

void check_equal(LawReport& report, const std::string& law, const Morphism& a, const Morphism& b) {
  const bool ok = a == b;
  report.check(law, ok, [&] { return first_difference(a, b); });
}

// Runs a law whose construction may be ill-defined (a cocone that does not
// commute), recording the failure instead of propagating it.
template <class Body>
void guarded(LawReport& report, const std::string& law, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    report.record(law, false, e.what());
  }
}

// First tuple in [0, k)^R, lexicographically, where `holds` fails.
template <std::size_t R, class Holds>
std::optional<std::array<std::size_t, R>> first_index_tuple(std::size_t k, Holds&& holds) {
  std::array<std::size_t, R> t{};
  if (k == 0) return std::nullopt;
  while (true) {
    if (!holds(t)) return t;
    std::size_t d = R;
    while (d > 0 && ++t[d - 1] == k) t[--d] = 0;
    if (d == 0) return std::nullopt;
  }
}

}  // namespace

Coextension make_coextension(Morphism f, Morphism alpha) {
  if (!f.is_injective()) throw Error(ErrorKind::NotInjective, "f = " + f.to_string());
  Cokernel cok = cokernel(f);
  if (!(alpha.source() == cok.module))
    throw Error(ErrorKind::AlphaNotCokernelIso,
                "alpha must start at coker(f) = " + cok.module.to_string());
  if (!is_isomorphism(alpha))
    throw Error(ErrorKind::AlphaNotCokernelIso, "alpha is not bijective: " + alpha.to_string());
  Module P = f.target();
  return Coextension{std::move(P), std::move(f), std::move(cok), std::move(alpha)};
}

Coextension make_coextension_from_lift(Morphism f, const Morphism& alpha_on_P) {
  if (!f.is_injective()) throw Error(ErrorKind::NotInjective, "f = " + f.to_string());
  if (!compose(alpha_on_P, f).is_zero())
    throw Error(ErrorKind::AlphaNotCokernelIso, "alpha does not vanish on the image of f");
  Cokernel cok = cokernel(f);
  Morphism alpha = cok.factor(alpha_on_P);
  return make_coextension(std::move(f), std::move(alpha));
}

Coextension trivial_coextension(const Module& M, const Module& N) {
  DirectSum s = direct_sum(M, N);
  return make_coextension_from_lift(s.inject_right, s.project_left);
}

bool is_coextension_morphism(const Coextension& E, const Coextension& F, const Morphism& h) {
  if (!(E.M() == F.M()) || !(E.N() == F.N())) return false;
  if (!(h.source() == E.P) || !(h.target() == F.P)) return false;
  if (!(compose(h, E.f) == F.f)) return false;
  const auto Ns = E.N().elements();
  for (const auto& p : E.P.elements()) {
    const ModElement hp = h(p);
    if (!(F.alpha_of(hp) == E.alpha_of(p))) return false;
    // h(p + f(n)) = h(p) + g(n): h is well defined on classes
    for (const auto& n : Ns)
      if (!(h(p + E.f(n)) == hp + F.f(n))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::size_t HomGroup::index_of(const Morphism& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return i;
  throw Error(ErrorKind::Incompatible, "morphism is not in the hom group: " + g.to_string());
}

Morphism HomGroup::add(const Morphism& g, const Morphism& h) const {
  const Morphism collapse = compose(domain.inject_left, domain.project_left);
  return compose(g, collapse) + compose(h, collapse) + compose(object, domain.project_right);
}

HomGroup hom_group(const Module& M, const Morphism& object) {
  HomGroup G{object, direct_sum(M, object.source()), {}, 0, {}, {}};
  const Morphism& iN = G.domain.inject_right;
  HomSet homs(G.domain.sum, object.target());
  std::map<Matrix, std::size_t> lookup;
  for (std::uint64_t i = 0; i < homs.size(); ++i) {
    Morphism g = homs.at(i);
    if (!(compose(g, iN) == object)) continue;
    lookup.emplace(g.matrix(), G.elements.size());
    G.elements.push_back(std::move(g));
  }
  auto find = [&](const Morphism& g) {
    auto it = lookup.find(g.matrix());
    return it == lookup.end() ? npos : it->second;
  };
  G.identity = find(compose(object, G.domain.project_right));
  const std::size_t k = G.elements.size();
  G.table.assign(k, std::vector<std::size_t>(k, npos));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) G.table[i][j] = find(G.add(G.elements[i], G.elements[j]));
  G.inverse.assign(k, npos);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (G.table[i][j] == G.identity) G.inverse[i] = j;
  return G;
}

LawReport check_hom_group(const HomGroup& G) {
  LawReport report;
  const std::size_t k = G.elements.size();
  report.check("identity-present", G.identity != npos,
               [&] { return std::string("(m,n) -> f(n) is not a morphism under N"); });
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      report.check("closure", G.table[i][j] != npos,
                   [&] { return "g=" + G.elements[i].to_string() + " h=" + G.elements[j].to_string(); });
  if (!report.passed()) return report;
  for (std::size_t i = 0; i < k; ++i) {
    report.check("identity", G.table[G.identity][i] == i && G.table[i][G.identity] == i,
                 [&] { return "g=" + G.elements[i].to_string(); });
    report.check("inverse", G.inverse[i] != npos, [&] { return "g=" + G.elements[i].to_string(); });
  }
  auto name = [&](std::size_t i) { return G.elements[i].to_string(); };
  const auto noncommuting = first_index_tuple<2>(k, [&](const auto& t) {
    return G.table[t[0]][t[1]] == G.table[t[1]][t[0]];
  });
  report.check("commutativity", !noncommuting, [&] { return "g=" + name((*noncommuting)[0]) + " h=" + name((*noncommuting)[1]); });
  const auto nonassociative = first_index_tuple<3>(k, [&](const auto& t) {
    return G.table[G.table[t[0]][t[1]]][t[2]] == G.table[t[0]][G.table[t[1]][t[2]]];
  });
  report.check("associativity", !nonassociative, [&] {
    const auto& t = *nonassociative;
    return "g=" + name(t[0]) + " h=" + name(t[1]) + " k=" + name(t[2]);
  });
  return report;
}

// ---------------------------------------------------------------------------

CogroupStructure cogroup(const Module& M, const Module& N) {
  DirectSum s = direct_sum(M, N);
  Pushout sq = pushout(s.inject_right, s.inject_right);
  Morphism counit = s.project_right;
  Morphism coadd =
      sq.include_left + compose(sq.include_right, compose(s.inject_left, s.project_left));
  Morphism coinv =
      compose(s.inject_right, s.project_right) - compose(s.inject_left, s.project_left);
  return CogroupStructure{M, N, s, std::move(sq), std::move(counit), std::move(coadd), std::move(coinv)};
}

LawReport check_cogroup_axioms(const CogroupStructure& C, std::span<const Morphism> objects) {
  LawReport report;
  const DirectSum& s = C.sum;
  const Morphism& iN = C.include_N();
  const Morphism id = Morphism::identity(s.sum);
  const Morphism collapse = compose(s.inject_left, s.project_left);  // (m, n) -> (m, 0)
  const Morphism unit_path = compose(iN, C.counit);                   // (m, n) -> (0, n)

  // (a) direct diagram checks
  check_equal(report, "counit-under-N", compose(C.counit, iN), Morphism::identity(C.N));
  check_equal(report, "coadd-under-N", compose(C.coadd, iN), C.square.structure);
  check_equal(report, "coinv-under-N", compose(C.coinv, iN), iN);

  for (const auto& x : s.sum.elements()) {
    const ModElement y = C.coadd(x);
    const ModElement a = C.square.class_of(x, collapse(x));
    const ModElement b = C.square.class_of(collapse(x), x);
    report.check("coadd-representatives", y == a && a == b, [&] { return "x=" + x.to_string(); });
  }

  guarded(report, "left-counit", [&] {
    check_equal(report, "left-counit", compose(C.square.descend(unit_path, id), C.coadd), id);
  });
  guarded(report, "right-counit", [&] {
    check_equal(report, "right-counit", compose(C.square.descend(id, unit_path), C.coadd), id);
  });
  guarded(report, "coassociativity", [&] {
    Pushout triple = pushout(C.square.structure, iN);
    const Morphism j1 = compose(triple.include_left, C.square.include_left);
    const Morphism j2 = compose(triple.include_left, C.square.include_right);
    const Morphism& j3 = triple.include_right;
    const Morphism lhs =
        compose(C.square.descend(compose(triple.include_left, C.coadd), j3), C.coadd);
    const Morphism rhs =
        compose(C.square.descend(j1, compose(C.square.descend(j2, j3), C.coadd)), C.coadd);
    check_equal(report, "coassociativity", lhs, rhs);
  });
  guarded(report, "left-coinverse", [&] {
    check_equal(report, "left-coinverse", compose(C.square.descend(C.coinv, id), C.coadd), unit_path);
  });
  guarded(report, "right-coinverse", [&] {
    check_equal(report, "right-coinverse", compose(C.square.descend(id, C.coinv), C.coadd), unit_path);
  });
  guarded(report, "cocommutativity", [&] {
    const Morphism swap = C.square.descend(C.square.include_right, C.square.include_left);
    check_equal(report, "cocommutativity", compose(swap, C.coadd), C.coadd);
  });

  // (b) corepresented checks
  std::vector<HomGroup> groups;
  for (const auto& f : objects) {
    if (!(f.source() == C.N)) continue;
    groups.push_back(hom_group(C.M, f));
    const HomGroup& G = groups.back();
    const std::string tag = " [f=" + f.to_string() + "]";
    const LawReport table = check_hom_group(G);
    for (const auto& c : table.checks())
      report.record("hom-group-" + c.law, c.passed, c.counterexample.empty() ? "" : c.counterexample + tag);
    if (!table.passed()) continue;

    report.check("corep-identity", G.elements[G.identity] == compose(f, C.counit),
                 [&] { return "identity differs from f o e_M" + tag; });
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
      report.check("corep-inverse", compose(G.elements[i], C.coinv) == G.elements[G.inverse[i]],
                   [&] { return "g=" + G.elements[i].to_string() + tag; });
      for (std::size_t j = 0; j < G.elements.size(); ++j) {
        guarded(report, "corep-addition", [&] {
          const Morphism via = compose(C.square.descend(G.elements[i], G.elements[j]), C.coadd);
          report.check("corep-addition", via == G.elements[G.table[i][j]], [&] {
            return "g=" + G.elements[i].to_string() + " h=" + G.elements[j].to_string() + tag;
          });
        });
      }
    }
  }

  // post-composition by w : f -> f' is a group homomorphism
  std::vector<std::map<Matrix, std::size_t>> lookup(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t i = 0; i < groups[g].elements.size(); ++i) lookup[g].emplace(groups[g].elements[i].matrix(), i);
  for (const auto& G : groups) {
    for (std::size_t hg = 0; hg < groups.size(); ++hg) {
      const HomGroup& H = groups[hg];
      if (G.elements.empty() || H.elements.empty()) continue;
      HomSet homs(G.object.target(), H.object.target());
      const HomSelection sel = select_homs(homs, kDefaultHomCap, 0);
      for (std::uint64_t wi : sel.indices) {
        const Morphism w = homs.at(wi);
        if (!(compose(w, G.object) == H.object)) continue;
        std::vector<std::size_t> image(G.elements.size(), npos);
        bool closed = true;
        for (std::size_t i = 0; i < G.elements.size() && closed; ++i) {
          auto it = lookup[hg].find(compose(w, G.elements[i]).matrix());
          closed = it != lookup[hg].end();
          if (closed) image[i] = it->second;
        }
        report.check("functoriality", closed, [&] { return "w=" + w.to_string() + " leaves the hom group"; });
        if (!closed) continue;
        const auto bad = first_index_tuple<2>(G.elements.size(), [&](const auto& t) {
          return image[G.table[t[0]][t[1]]] == H.table[image[t[0]]][image[t[1]]];
        });
        report.check("functoriality", !bad, [&] {
          return "w=" + w.to_string() + " g=" + G.elements[(*bad)[0]].to_string() +
                 " h=" + G.elements[(*bad)[1]].to_string();
        });
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

Morphism build_beta_co(const Morphism& f, const Module& M) {
  DirectSum t = direct_sum(M, f.target());
  return compose(t.inject_right, f);
}

CoproductComparison beta_iso_coproduct(const Morphism& f, const Module& M) {
  DirectSum dom = direct_sum(M, f.target());
  DirectSum triv = direct_sum(M, f.source());
  Pushout co = pushout(triv.inject_right, f);
  Morphism phi = compose(co.include_left, compose(triv.inject_left, dom.project_left)) +
                 compose(co.include_right, dom.project_right);
  return CoproductComparison{std::move(dom), std::move(triv), std::move(co), std::move(phi)};
}

CotorsorStructure make_cotorsor(Morphism f, const Module& M, Morphism tau) {
  Module P = f.target();
  DirectSum t = direct_sum(M, P);
  if (!(tau.source() == P)) throw Error(ErrorKind::SourceMismatch, "tau must start at P");
  if (!(tau.target() == t.sum))
    throw Error(ErrorKind::TargetMismatch, "tau must land in M + P = " + t.sum.to_string());
  return CotorsorStructure{std::move(P), std::move(f), std::move(t), std::move(tau)};
}

LawReport check_cotorsor_axioms(const CotorsorStructure& T) {
  LawReport report;
  const DirectSum& mp = T.coaction_target;
  const auto Ps = T.P.elements();
  const auto Ns = T.N().elements();
  const ModElement zero_m = T.M().zero_element();

  for (const auto& n : Ns) {
    const ModElement fn = T.f(n);
    report.check("under-N", T.tau(fn) == mp.pair(zero_m, fn), [&] { return "n=" + n.to_string(); });
  }
  for (const auto& p : Ps) {
    const ModElement back = mp.project_right(T.tau(p));
    report.check("section", back == p, [&] { return "p=" + p.to_string() + " got " + back.to_string(); });
  }

  // tau(p1) + (0, p2) evaluated on a representative pair
  auto decompose_value = [&](const ModElement& p1, const ModElement& p2) {
    return T.tau(p1) + mp.inject_right(p2);
  };
  for (const auto& p1 : Ps)
    for (const auto& p2 : Ps) {
      const ModElement v = decompose_value(p1, p2);
      for (const auto& n : Ns) {
        const ModElement fn = T.f(n);
        report.check("representative-independence", decompose_value(p1 + fn, p2 - fn) == v, [&] {
          return "p1=" + p1.to_string() + " p2=" + p2.to_string() + " n=" + n.to_string();
        });
      }
    }

  const Pushout pp = pushout(T.f, T.f);
  std::vector<std::set<std::int64_t>> classes(static_cast<std::size_t>(mp.sum.order()));
  std::vector<std::pair<ModElement, ModElement>> witness;
  for (const auto& p1 : Ps)
    for (const auto& p2 : Ps) {
      const std::int64_t cls = pp.class_index(p1.index(), p2.index());
      classes[static_cast<std::size_t>(decompose_value(p1, p2).index())].insert(cls);
    }
  for (std::int64_t v = 0; v < mp.sum.order(); ++v) {
    const auto& hits = classes[static_cast<std::size_t>(v)];
    const ModElement target = mp.sum.element_at(v);
    auto describe = [&] {
      return "(m,p)=(" + mp.project_left(target).to_string() + "," +
             mp.project_right(target).to_string() + ") classes=" + std::to_string(hits.size());
    };
    report.check("decomposition-existence", !hits.empty(), describe);
    report.check("decomposition-uniqueness", hits.size() <= 1, describe);
  }
  return report;
}

CotorsorStructure cotorsor_from_coextension(const Coextension& E) {
  DirectSum t = direct_sum(E.M(), E.P);
  Morphism tau = compose(t.inject_left, E.alpha_on_P()) + t.inject_right;
  return CotorsorStructure{E.P, E.f, std::move(t), std::move(tau)};
}

bool is_cotorsor_morphism(const CotorsorStructure& S, const CotorsorStructure& T, const Morphism& h) {
  if (!(S.M() == T.M()) || !(S.N() == T.N())) return false;
  if (!(h.source() == S.P) || !(h.target() == T.P)) return false;
  if (!(compose(h, S.f) == T.f)) return false;
  const Morphism id_h = T.coaction_target.pairing(S.coaction_target.project_left,
                                                  compose(h, S.coaction_target.project_right));
  return compose(T.tau, h) == compose(id_h, S.tau);
}

Coextension coextension_from_cotorsor(const CotorsorStructure& T) {
  LawReport axioms = check_cotorsor_axioms(T);
  for (const auto& c : axioms.checks())
    if (!c.passed)
      throw Error(ErrorKind::AxiomViolation, "cotorsor " + c.law + " fails at " + c.counterexample);
  return make_coextension_from_lift(T.f, compose(T.coaction_target.project_left, T.tau));
}

HomBijectionReport phi_hom_bijection(const Coextension& E, const Coextension& F, std::uint64_t cap,
                                     std::uint64_t seed) {
  const CotorsorStructure S = cotorsor_from_coextension(E);
  const CotorsorStructure T = cotorsor_from_coextension(F);
  return compare_hom_filters(
      HomSet(E.P, F.P), [&](const Morphism& h) { return is_coextension_morphism(E, F, h); },
      [&](const Morphism& h) { return is_cotorsor_morphism(S, T, h); }, cap, seed);
}

}  // namespace homext
