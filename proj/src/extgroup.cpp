#include "homext/extgroup.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "homext/cotorsors.hpp"
#include "homext/duality.hpp"
#include "homext/error.hpp"
#include "homext/subquotient.hpp"
#include "homext/torsors.hpp"

namespace homext {

namespace {

std::vector<std::pair<std::int64_t, int>> prime_factors(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Partitions of k into non-increasing parts.
void partitions(int k, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

// An extension rewritten through generators alpha(N) and lifts s_i of the
// generators of M. P is presented by N's relations plus o_i s_i = alpha(a_i).
struct Presentation {
  Extension ext;
  std::vector<ModElement> sections;      // s_i with f(s_i) = m_i
  std::vector<ModElement> relations;     // a_i with alpha(a_i) = o_i s_i
  std::vector<Coords> quotient_parts;    // coordinates of f(e_j)
  std::vector<ModElement> kernel_parts;  // n_j with e_j = alpha(n_j) + sum c_ji s_i
};

Presentation present(const Extension& E) {
  const Module& P = E.P;
  const Module& M = E.M();
  const Module& N = E.N();
  std::vector<std::int64_t> alpha_inverse(static_cast<std::size_t>(P.order()), -1);
  for (const auto& n : N.elements()) alpha_inverse[static_cast<std::size_t>(E.alpha(n).index())] = n.index();
  auto preimage = [&](const ModElement& p) {
    const std::int64_t k = alpha_inverse[static_cast<std::size_t>(p.index())];
    if (k < 0) throw std::logic_error("element outside the kernel");
    return N.element_at(k);
  };

  Presentation out{E, {}, {}, {}, {}};
  const auto Ps = P.elements();
  for (std::size_t i = 0; i < M.rank(); ++i) {
    const ModElement m = M.generator(i);
    auto it = std::find_if(Ps.begin(), Ps.end(), [&](const ModElement& p) { return E.f(p) == m; });
    if (it == Ps.end()) throw std::logic_error("f is not surjective");
    out.sections.push_back(*it);
    out.relations.push_back(preimage(it->scaled(M.factors()[i])));
  }
  for (std::size_t j = 0; j < P.rank(); ++j) {
    const ModElement e = P.generator(j);
    Coords c = E.f(e).coords();
    ModElement rest = e;
    for (std::size_t i = 0; i < c.size(); ++i) rest = rest - out.sections[i].scaled(c[i]);
    out.quotient_parts.push_back(std::move(c));
    out.kernel_parts.push_back(preimage(rest));
  }
  return out;
}

// h(alpha_E(n)) = alpha_F(n) is forced and h(s_i) ranges over the f_F-fiber of
// m_i; the relation o_i s_i = alpha(a_i) constrains each h(s_i) separately.
std::optional<Morphism> match(const Presentation& src, const Presentation& dst) {
  const Extension& E = src.ext;
  const Extension& F = dst.ext;
  if (!(E.M() == F.M()) || !(E.N() == F.N()) || E.P.order() != F.P.order()) return std::nullopt;
  const Module& M = E.M();
  const auto Ns = E.N().elements();
  std::vector<ModElement> images;
  for (std::size_t i = 0; i < M.rank(); ++i) {
    const ModElement want = F.alpha(src.relations[i]);
    std::optional<ModElement> hit;
    for (const auto& x : Ns) {
      ModElement t = dst.sections[i] + F.alpha(x);
      if (t.scaled(M.factors()[i]) == want) {
        hit = std::move(t);
        break;
      }
    }
    if (!hit) return std::nullopt;
    images.push_back(*hit);
  }
  std::vector<ModElement> cols;
  for (std::size_t j = 0; j < E.P.rank(); ++j) {
    ModElement v = F.alpha(src.kernel_parts[j]);
    for (std::size_t i = 0; i < images.size(); ++i) v = v + images[i].scaled(src.quotient_parts[j][i]);
    cols.push_back(std::move(v));
  }
  Morphism h = Morphism::from_generator_images(E.P, F.P, cols);
  if (!(compose(F.f, h) == E.f) || !(compose(h, E.alpha) == F.alpha) || !is_isomorphism(h))
    throw std::logic_error("extension isomorphism check failed: " + h.to_string());
  return h;
}

// Extension classes with fixed M and N are labelled by the relation tuple
// (a_i mod o_i N) of any presentation; precomputed coset tables make the
// label a vector of element indices.
struct ClassLabels {
  Module M;
  Module N;
  std::vector<std::vector<std::int64_t>> canonical;  // per generator of M
  std::vector<ElementaryAutomorphism> generators;
  std::vector<std::vector<std::int64_t>> moves;      // element permutation per generator

  ClassLabels(const Module& M_, const Module& N_) : M(M_), N(N_), generators(elementary_automorphisms(N_)) {
    const auto Ns = N.elements();
    for (std::int64_t o : M.factors()) {
      std::vector<std::int64_t> canon(Ns.size());
      for (const auto& x : Ns) {
        std::int64_t best = x.index();
        for (const auto& y : Ns) best = std::min(best, (x + y.scaled(o)).index());
        canon[static_cast<std::size_t>(x.index())] = best;
      }
      canonical.push_back(std::move(canon));
    }
    for (const auto& g : generators) {
      std::vector<std::int64_t> perm(Ns.size());
      for (const auto& x : Ns) perm[static_cast<std::size_t>(x.index())] = g.map(x).index();
      moves.push_back(std::move(perm));
    }
  }

  std::vector<std::int64_t> label(const Presentation& p) const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < p.relations.size(); ++i)
      out.push_back(canonical[i][static_cast<std::size_t>(p.relations[i].index())]);
    return out;
  }

  std::vector<std::int64_t> move(std::size_t g, const std::vector<std::int64_t>& y) const {
    std::vector<std::int64_t> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      out[i] = canonical[i][static_cast<std::size_t>(moves[g][static_cast<std::size_t>(y[i])])];
    return out;
  }
};

struct CandidateResult {
  std::vector<Presentation> reps;
  std::uint64_t seen = 0;
};

// Over a fixed f the kernel isomorphisms K.inclusion b, b in Aut(N), carry
// labels b^-1 (label of b = id): exactly one orbit of Aut(N), walked here
// through the elementary generators.
CandidateResult classes_over(const Module& P, const ClassLabels& labels, std::uint64_t aut_order) {
  CandidateResult out;
  std::set<std::vector<std::int64_t>> known;
  HomSet fs(P, labels.M);
  for (std::uint64_t i = 0; i < fs.size(); ++i) {
    Morphism f = fs.at(i);
    if (!f.is_surjective()) continue;
    Kernel K = kernel(f);
    if (!(K.module == labels.N)) continue;
    out.seen += aut_order;
    Presentation base = present(Extension{P, f, K.inclusion});
    std::vector<std::int64_t> start = labels.label(base);
    if (known.count(start)) continue;
    std::vector<std::pair<std::vector<std::int64_t>, Morphism>> queue;
    known.insert(start);
    queue.emplace_back(std::move(start), Morphism::identity(labels.N));
    out.reps.push_back(std::move(base));
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t g = 0; g < labels.generators.size(); ++g) {
        std::vector<std::int64_t> next = labels.move(g, queue[q].first);
        if (!known.insert(next).second) continue;
        Morphism b = compose(queue[q].second, labels.generators[g].inverse);
        Presentation pres = present(Extension{P, f, compose(K.inclusion, b)});
        if (labels.label(pres) != next) throw std::logic_error("class label moved unexpectedly");
        out.reps.push_back(std::move(pres));
        queue.emplace_back(std::move(next), std::move(b));
      }
    }
  }
  return out;
}

// P lies over M through `label`, and `inner` carries N onto the fibre over 0.
struct Fibration {
  std::function<ModElement(const ModElement&)> label;
  std::function<ModElement(const ModElement&)> inner;
};

// Maps P -> Q with h(inner_p(n)) = inner_q(n), searched over the images of
// lifts of M's generators, each drawn from the matching fibre of Q. Returns
// true as soon as `accept` takes one.
template <class Accept>
bool search_over_lifts(const Module& P, const Module& Q, const Module& M, const Module& N,
                       const Fibration& s, const Fibration& t, Accept&& accept) {
  const auto Ps = P.elements();
  const auto Qs = Q.elements();
  const auto Ns = N.elements();
  std::vector<ModElement> lifts;
  std::vector<std::vector<ModElement>> images(M.rank());
  for (std::size_t i = 0; i < M.rank(); ++i) {
    const ModElement m = M.generator(i);
    const auto it = std::find_if(Ps.begin(), Ps.end(), [&](const ModElement& p) { return s.label(p) == m; });
    if (it == Ps.end()) return false;
    lifts.push_back(*it);
    for (const auto& q : Qs)
      if (t.label(q) == m) images[i].push_back(q);
  }
  // e_j = inner_p(n_j) + sum_i c_ji lift_i
  std::vector<Coords> coeffs;
  std::vector<ModElement> fixed;
  for (std::size_t j = 0; j < P.rank(); ++j) {
    const ModElement e = P.generator(j);
    const Coords c = s.label(e).coords();
    ModElement rest = e;
    for (std::size_t i = 0; i < c.size(); ++i) rest = rest - lifts[i].scaled(c[i]);
    const auto it = std::find_if(Ns.begin(), Ns.end(), [&](const ModElement& n) { return s.inner(n) == rest; });
    if (it == Ns.end()) return false;
    coeffs.push_back(c);
    fixed.push_back(t.inner(*it));
  }
  std::vector<ModElement> chosen;
  auto step = [&](auto&& self, std::size_t i) -> bool {
    if (i == M.rank()) {
      std::vector<ModElement> gens;
      for (std::size_t j = 0; j < P.rank(); ++j) {
        ModElement q = fixed[j];
        for (std::size_t k = 0; k < chosen.size(); ++k) q = q + chosen[k].scaled(coeffs[j][k]);
        if (!q.scaled(P.factors()[j]).is_zero()) return false;
        gens.push_back(std::move(q));
      }
      return accept(Morphism::from_generator_images(P, Q, gens));
    }
    for (const auto& q : images[i]) {
      chosen.push_back(q);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return step(step, 0);
}

template <class T, class Iso>
std::size_t count_classes(const std::vector<T>& items, Iso&& iso) {
  std::vector<const T*> reps;
  for (const auto& x : items) {
    bool fresh = true;
    for (const T* r : reps)
      if (iso(x, *r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(&x);
  }
  return reps.size();
}

}  // namespace

std::vector<Module> abelian_groups_of_order(const RingDescriptor& ring, std::int64_t order) {
  if (order < 1) throw Error(ErrorKind::InvalidModule, "group order must be positive");
  std::vector<std::vector<std::int64_t>> shapes{{}};
  for (auto [p, k] : prime_factors(order)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(k, k, cur, parts);
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& s : shapes)
      for (const auto& part : parts) {
        auto t = s;
        for (int e : part) t.push_back(ipow(p, e));
        next.push_back(std::move(t));
      }
    shapes = std::move(next);
  }
  std::vector<Module> out;
  for (const auto& s : shapes) {
    const std::vector<std::int64_t> factors = invariant_factors_of(s);
    if (ring.kind == RingDescriptor::Kind::IntegersMod && !factors.empty() &&
        ring.modulus % factors.back() != 0)
      continue;
    out.emplace_back(ring, factors);
  }
  std::sort(out.begin(), out.end(),
            [](const Module& a, const Module& b) { return a.factors() < b.factors(); });
  return out;
}

std::vector<ElementaryAutomorphism> elementary_automorphisms(const Module& N) {
  std::vector<ElementaryAutomorphism> out;
  const auto& d = N.factors();
  auto images_with = [&](std::size_t j, const ModElement& image) {
    std::vector<ModElement> cols;
    for (std::size_t i = 0; i < N.rank(); ++i) cols.push_back(i == j ? image : N.generator(i));
    return Morphism::from_generator_images(N, N, cols);
  };
  for (std::size_t j = 0; j < d.size(); ++j) {
    for (std::int64_t u = 2; u < d[j]; ++u) {
      if (std::gcd(u, d[j]) != 1) continue;
      std::int64_t v = 1;
      while (u * v % d[j] != 1) ++v;
      out.push_back({images_with(j, N.generator(j).scaled(u)), images_with(j, N.generator(j).scaled(v))});
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k == j) continue;
      const std::int64_t c = d[k] / std::gcd(d[k], d[j]);
      if (c == d[k]) continue;
      out.push_back({images_with(j, N.generator(j) + N.generator(k).scaled(c)),
                     images_with(j, N.generator(j) - N.generator(k).scaled(c))});
    }
  }
  return out;
}

std::uint64_t automorphism_count(const Module& N) {
  std::map<std::int64_t, std::vector<int>> primary;
  for (std::int64_t d : N.factors())
    for (auto [p, e] : prime_factors(d)) primary[p].push_back(e);
  std::uint64_t total = 1;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end());
    const auto k = static_cast<int>(es.size());
    for (int j = 1; j <= k; ++j) {
      const int e = es[static_cast<std::size_t>(j - 1)];
      int hi = j, lo = j;
      while (hi < k && es[static_cast<std::size_t>(hi)] == e) ++hi;
      while (lo > 1 && es[static_cast<std::size_t>(lo - 2)] == e) --lo;
      total *= static_cast<std::uint64_t>(ipow(p, hi) - ipow(p, j - 1));
      total *= static_cast<std::uint64_t>(ipow(p, e * (k - hi)));
      total *= static_cast<std::uint64_t>(ipow(p, (e - 1) * (k - lo + 1)));
    }
  }
  return total;
}

std::int64_t default_extension_bound() {
  const char* env = std::getenv("HOMEXT_BOUND");
  if (env == nullptr || *env == '\0') return 64;
  std::int64_t v = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || ptr != end || v < 1)
    throw Error(ErrorKind::ParseError, std::string("HOMEXT_BOUND must be a positive integer, got ") + env);
  return v;
}

ExtClassification enumerate_extensions(const Module& M, const Module& N, const EnumerateOptions& options) {
  if (!(M.ring() == N.ring())) throw Error(ErrorKind::RingMismatch, "M and N must share a ring");
  const std::int64_t size = M.order() * N.order();
  if (size > options.bound)
    throw Error(ErrorKind::BoundExceeded, "|M|*|N| = " + std::to_string(size) +
                                              " exceeds the bound " + std::to_string(options.bound));

  const std::vector<Module> candidates = abelian_groups_of_order(M.ring(), size);
  const ClassLabels labels(M, N);
  const std::uint64_t aut_order = automorphism_count(N);

  std::vector<CandidateResult> results(candidates.size());
  std::vector<std::exception_ptr> errors(candidates.size());
  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::int64_t c = 0; c < count; ++c) {
    const auto k = static_cast<std::size_t>(c);
    try {
      results[k] = classes_over(candidates[k], labels, aut_order);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExtClassification out{M, N, {}, 0, std::nullopt, 0};
  std::map<std::vector<std::int64_t>, std::size_t> by_label;
  for (auto& r : results) {
    out.extensions_seen += r.seen;
    for (auto& p : r.reps) {
      if (!by_label.emplace(labels.label(p), out.classes.size()).second)
        throw std::logic_error("two candidates share a class label");
      out.classes.push_back(std::move(p.ext));
    }
  }
  auto index_of = [&](const Extension& E, const char* what) {
    auto it = by_label.find(labels.label(present(E)));
    if (it == by_label.end()) throw std::logic_error(what);
    return it->second;
  };
  out.split_index = index_of(trivial_extension(M, N), "the split extension was not enumerated");

  if (options.with_baer_table) {
    const std::size_t k = out.classes.size();
    GroupTable table(k, std::vector<std::size_t>(k, 0));
    std::vector<std::exception_ptr> row_errors(k);
    const auto rows = static_cast<std::int64_t>(k);
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (std::int64_t r = 0; r < rows; ++r) {
      const auto i = static_cast<std::size_t>(r);
      try {
        for (std::size_t j = 0; j < k; ++j)
          table[i][j] = index_of(baer_sum(out.classes[i], out.classes[j]), "Baer sum fits no enumerated class");
      } catch (...) {
        row_errors[i] = std::current_exception();
      }
    }
    for (const auto& e : row_errors)
      if (e) std::rethrow_exception(e);
    out.baer_table = std::move(table);
  }
  return out;
}

std::optional<Morphism> find_extension_isomorphism(const Extension& E, const Extension& F) {
  if (!(E.M() == F.M()) || !(E.N() == F.N()) || !(E.P == F.P)) return std::nullopt;
  return match(present(E), present(F));
}

std::size_t classify(const ExtClassification& c, const Extension& E) {
  const Presentation p = present(E);
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    if (c.classes[k].P == E.P && match(p, present(c.classes[k]))) return k;
  throw Error(ErrorKind::Incompatible, "extension fits no enumerated class");
}

std::int64_t ExtGroupDescriptor::order() const {
  std::int64_t r = 1;
  for (auto d : invariant_factors) r *= d;
  return r;
}

ExtGroupDescriptor ext_by_resolution(const Module& M, const Module& N) {
  if (!(M.ring() == N.ring())) throw Error(ErrorKind::RingMismatch, "M and N must share a ring");
  std::vector<std::int64_t> orders;
  for (std::int64_t a : M.factors())
    for (std::int64_t b : N.factors()) {
      if (M.ring().kind == RingDescriptor::Kind::Integers) {
        orders.push_back(std::gcd(a, b));
        continue;
      }
      // {x in Z/b : (n/a) x = 0} / a (Z/b), both cyclic subgroups of Z/b
      const std::int64_t n = M.ring().modulus;
      std::int64_t killed = 0;
      for (std::int64_t x = 0; x < b; ++x)
        if ((n / a) * x % b == 0) ++killed;
      const std::int64_t multiples = b / std::gcd(a, b);
      orders.push_back(killed / multiples);
    }
  return ExtGroupDescriptor{invariant_factors_of(orders)};
}

Extension baer_sum(const Extension& E1, const Extension& E2) {
  if (!(E1.M() == E2.M()) || !(E1.N() == E2.N()))
    throw Error(ErrorKind::Incompatible, "Baer sum needs extensions of the same M by the same N");
  const FiberProduct fp = fiber_product(E1.f, E2.f);
  const Morphism antidiagonal = fp.lift(E1.alpha, -E2.alpha);
  const Cokernel q = cokernel(antidiagonal);
  Morphism f = q.factor(compose(E1.f, fp.project_left));
  Morphism alpha = compose(q.projection, fp.lift(E1.alpha, Morphism::zero(E1.N(), E2.P)));
  return make_extension(q.module, std::move(f), std::move(alpha));
}

LawReport check_abelian_table(const GroupTable& table, std::size_t identity) {
  LawReport report;
  const std::size_t k = table.size();
  bool closed = identity < k;
  for (const auto& row : table) closed = closed && row.size() == k &&
                                       std::all_of(row.begin(), row.end(), [&](std::size_t v) { return v < k; });
  report.record("closure", closed, closed ? "" : "table is not a square table on its index set");
  if (!closed) return report;
  auto pair = [](std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); };
  for (std::size_t a = 0; a < k; ++a) {
    report.check("identity", table[identity][a] == a && table[a][identity] == a,
                 [&] { return "a=" + std::to_string(a); });
    report.check("inverse", std::count(table[a].begin(), table[a].end(), identity) == 1,
                 [&] { return "a=" + std::to_string(a); });
    for (std::size_t b = 0; b < k; ++b) {
      report.check("commutativity", table[a][b] == table[b][a], [&] { return pair(a, b); });
      for (std::size_t c = 0; c < k; ++c)
        report.check("associativity", table[table[a][b]][c] == table[a][table[b][c]],
                     [&] { return pair(a, b) + "," + std::to_string(c); });
    }
  }
  return report;
}

std::vector<std::int64_t> invariant_factors_of_table(const GroupTable& table, std::size_t identity) {
  const auto k = static_cast<std::int64_t>(table.size());
  std::vector<std::int64_t> order(table.size(), 1);
  for (std::size_t x = 0; x < table.size(); ++x) {
    std::size_t y = x;
    while (y != identity) {
      y = table[y][x];
      ++order[x];
    }
  }
  std::vector<std::int64_t> pieces;
  for (auto [p, e] : prime_factors(k)) {
    // killed[j] = |{x : p^j x = 0}|, rank_at_least[j] = #cyclic p-parts of order >= p^j
    std::vector<int> rank_at_least{0};
    std::int64_t previous = 1;
    for (int j = 1; j <= e; ++j) {
      const std::int64_t pj = ipow(p, j);
      const auto killed = std::count_if(order.begin(), order.end(), [&](std::int64_t o) { return pj % o == 0; });
      int r = 0;
      for (std::int64_t ratio = killed / previous; ratio > 1; ratio /= p) ++r;
      rank_at_least.push_back(r);
      previous = killed;
    }
    rank_at_least.push_back(0);
    for (int j = 1; j <= e; ++j)
      for (int c = 0; c < rank_at_least[j] - rank_at_least[j + 1]; ++c) pieces.push_back(ipow(p, j));
  }
  return invariant_factors_of(pieces);
}

CrossValidation cross_validate(const Module& M, const Module& N, const EnumerateOptions& options) {
  EnumerateOptions opts = options;
  opts.with_baer_table = true;
  CrossValidation out{enumerate_extensions(M, N, opts), ext_by_resolution(M, N), 0, 0, {}};
  LawReport& report = out.report;
  const auto& cls = out.classification;
  const auto k = static_cast<std::int64_t>(cls.classes.size());

  report.check("class-count", k == out.resolution.order(), [&] {
    return std::to_string(k) + " classes against |Ext| = " + std::to_string(out.resolution.order());
  });
  report.merge(check_abelian_table(*cls.baer_table, cls.split_index), "baer-");
  if (report.passed("baer-closure")) {
    const auto factors = invariant_factors_of_table(*cls.baer_table, cls.split_index);
    report.check("baer-invariant-factors", factors == out.resolution.invariant_factors, [&] {
      return "table " + Module(RingDescriptor::integers(), factors).to_string() + " against " +
             Module(RingDescriptor::integers(), out.resolution.invariant_factors).to_string();
    });
  }

  std::vector<TorsorStructure> torsors;
  std::vector<CotorsorStructure> cotorsors;
  for (const auto& E : cls.classes) {
    torsors.push_back(torsor_from_extension(E));
    cotorsors.push_back(cotorsor_from_coextension(theta(E)));
    const LawReport t = check_torsor_axioms(torsors.back());
    const LawReport c = check_cotorsor_axioms(cotorsors.back());
    report.check("torsor-axioms", t.passed(), [&] { return "class P=" + E.P.to_string(); });
    report.check("cotorsor-axioms", c.passed(), [&] { return "class P=" + E.P.to_string(); });
  }

  out.torsor_classes = count_classes(torsors, [](const TorsorStructure& S, const TorsorStructure& T) {
    if (!(S.P == T.P && S.M() == T.M() && S.N() == T.N())) return false;
    auto over = [](const TorsorStructure& X) {
      return Fibration{[&X](const ModElement& p) { return X.f(p); },
                       [&X](const ModElement& n) { return X.act(n, X.P.zero_element()); }};
    };
    return search_over_lifts(S.P, T.P, S.M(), S.N(), over(S), over(T), [&](const Morphism& h) {
      return is_torsor_morphism(S, T, h) && is_isomorphism(h);
    });
  });
  out.cotorsor_classes = count_classes(cotorsors, [](const CotorsorStructure& S, const CotorsorStructure& T) {
    if (!(S.P == T.P && S.M() == T.M() && S.N() == T.N())) return false;
    auto over = [](const CotorsorStructure& X) {
      const Morphism label = compose(X.coaction_target.project_left, X.tau);
      return Fibration{[label](const ModElement& p) { return label(p); },
                       [&X](const ModElement& n) { return X.f(n); }};
    };
    return search_over_lifts(S.P, T.P, S.M(), S.N(), over(S), over(T), [&](const Morphism& h) {
      return is_cotorsor_morphism(S, T, h) && is_isomorphism(h);
    });
  });
  report.check("torsor-class-count", static_cast<std::int64_t>(out.torsor_classes) == k, [&] {
    return std::to_string(out.torsor_classes) + " torsor classes against " + std::to_string(k);
  });
  report.check("cotorsor-class-count", static_cast<std::int64_t>(out.cotorsor_classes) == k, [&] {
    return std::to_string(out.cotorsor_classes) + " cotorsor classes against " + std::to_string(k);
  });
  return out;
}

}  // namespace homext
