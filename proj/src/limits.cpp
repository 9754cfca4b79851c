#include "homext/limits.hpp"

#include <algorithm>
#include <numeric>

#include "homext/error.hpp"

namespace homext {

namespace {

std::size_t as_index(std::int64_t i) { return static_cast<std::size_t>(i); }

CyclicProduct raw_product(const Module& a, const Module& b) {
  std::vector<std::int64_t> orders = a.factors();
  orders.insert(orders.end(), b.factors().begin(), b.factors().end());
  return CyclicProduct(std::move(orders));
}

Coords concat(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  Coords out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Coords head(const Coords& c, std::size_t n) { return Coords(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)); }
Coords tail(const Coords& c, std::size_t n) { return Coords(c.begin() + static_cast<std::ptrdiff_t>(n), c.end()); }

void require_same_ring(const Module& a, const Module& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorKind::RingMismatch, a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

DirectSum direct_sum(const Module& left, const Module& right) {
  require_same_ring(left, right);
  const CyclicProduct raw = raw_product(left, right);
  const std::size_t k = raw.rank();
  std::vector<char> zero(as_index(raw.size()), 0);
  zero[0] = 1;

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return raw.orders()[a] < raw.orders()[b]; });
  bool chain = true;
  for (std::size_t i = 1; i < k; ++i)
    if (raw.orders()[perm[i]] % raw.orders()[perm[i - 1]] != 0) chain = false;

  Subquotient sq = [&] {
    if (!chain) {
      std::vector<char> all(as_index(raw.size()), 1);
      return decompose_subquotient(left.ring(), raw, all, zero);
    }
    std::vector<Coords> gens;
    std::vector<std::int64_t> orders;
    for (std::size_t i : perm) {
      Coords e(k, 0);
      e[i] = 1;
      gens.push_back(std::move(e));
      orders.push_back(raw.orders()[i]);
    }
    return subquotient_from_basis(left.ring(), raw, std::move(gens), std::move(orders), zero);
  }();

  const Module& sum = sq.module;
  std::vector<Coords> il, ir, pl, pr;
  for (std::size_t j = 0; j < left.rank(); ++j)
    il.push_back(sq.class_of(concat(left.generator(j).coords(), Coords(right.rank(), 0)), raw).coords());
  for (std::size_t j = 0; j < right.rank(); ++j)
    ir.push_back(sq.class_of(concat(Coords(left.rank(), 0), right.generator(j).coords()), raw).coords());
  for (const auto& g : sq.generators) {
    pl.push_back(head(g, left.rank()));
    pr.push_back(tail(g, left.rank()));
  }
  return DirectSum{left,
                   right,
                   sum,
                   Morphism::from_generator_images(left, sum, il),
                   Morphism::from_generator_images(right, sum, ir),
                   Morphism::from_generator_images(sum, left, pl),
                   Morphism::from_generator_images(sum, right, pr)};
}

ModElement DirectSum::pair(const ModElement& a, const ModElement& b) const {
  return inject_left(a) + inject_right(b);
}

Morphism DirectSum::pairing(const Morphism& a, const Morphism& b) const {
  return compose(inject_left, a) + compose(inject_right, b);
}

// ---------------------------------------------------------------------------

FiberProduct fiber_product(const Morphism& f, const Morphism& g) {
  if (!(f.target() == g.target()))
    throw Error(ErrorKind::TargetMismatch, "fiber product needs a common target");
  const Module& P = f.source();
  const Module& Q = g.source();
  const CyclicProduct raw = raw_product(P, Q);
  std::vector<char> in_sub(as_index(raw.size()), 0);
  std::vector<char> zero(as_index(raw.size()), 0);
  zero[0] = 1;
  Coords x, fp, gq;
  for (std::int64_t i = 0; i < raw.size(); ++i) {
    raw.coords_at(i, x);
    f.apply_coords(std::span(x).first(P.rank()), fp);
    g.apply_coords(std::span(x).subspan(P.rank()), gq);
    if (fp == gq) in_sub[as_index(i)] = 1;
  }
  Subquotient sq = decompose_subquotient(P.ring(), raw, in_sub, zero);
  std::vector<Coords> pl, pr;
  for (const auto& gen : sq.generators) {
    pl.push_back(head(gen, P.rank()));
    pr.push_back(tail(gen, P.rank()));
  }
  Module m = sq.module;
  Morphism proj_p = Morphism::from_generator_images(m, P, pl);
  Morphism proj_q = Morphism::from_generator_images(m, Q, pr);
  Morphism structure = compose(f, proj_p);
  return FiberProduct{f, g, std::move(m), std::move(proj_p), std::move(proj_q), std::move(structure),
                      std::move(sq)};
}

ModElement FiberProduct::pair(const ModElement& p, const ModElement& q) const {
  if (!(p.parent() == left_map.source()) || !(q.parent() == right_map.source()))
    throw Error(ErrorKind::ParentMismatch, "fiber product pair");
  if (!(left_map(p) == right_map(q)))
    throw Error(ErrorKind::Incompatible, "f(p) != g(q) for p=" + p.to_string() + " q=" + q.to_string());
  const std::int64_t idx = layout.class_index[as_index(p.index() * right_map.source().order() + q.index())];
  return module.element_at(idx);
}

Morphism FiberProduct::lift(const Morphism& a, const Morphism& b) const {
  if (!(a.source() == b.source())) throw Error(ErrorKind::SourceMismatch, "fiber product lift");
  if (!(compose(left_map, a) == compose(right_map, b)))
    throw Error(ErrorKind::Incompatible, "cone does not commute over the base");
  std::vector<Coords> cols;
  for (std::size_t j = 0; j < a.source().rank(); ++j) {
    const ModElement e = a.source().generator(j);
    cols.push_back(pair(a(e), b(e)).coords());
  }
  return Morphism::from_generator_images(a.source(), module, cols);
}

// ---------------------------------------------------------------------------

Pushout pushout(const Morphism& f, const Morphism& g) {
  if (!(f.source() == g.source()))
    throw Error(ErrorKind::SourceMismatch, "pushout needs a common source");
  const Module& N = f.source();
  const Module& P = f.target();
  const Module& Q = g.target();
  const CyclicProduct raw = raw_product(P, Q);
  std::vector<char> all(as_index(raw.size()), 1);
  std::vector<char> rel(as_index(raw.size()), 0);
  Coords x, fn, gn;
  for (std::int64_t i = 0; i < N.order(); ++i) {
    N.shape().coords_at(i, x);
    f.apply_coords(x, fn);
    g.apply_coords(x, gn);
    rel[as_index(raw.index_of(concat(fn, Q.shape().negate(gn))))] = 1;
  }
  Subquotient sq = decompose_subquotient(P.ring(), raw, all, rel);
  std::vector<Coords> il, ir;
  for (std::size_t j = 0; j < P.rank(); ++j)
    il.push_back(sq.class_of(concat(P.generator(j).coords(), Coords(Q.rank(), 0)), raw).coords());
  for (std::size_t j = 0; j < Q.rank(); ++j)
    ir.push_back(sq.class_of(concat(Coords(P.rank(), 0), Q.generator(j).coords()), raw).coords());
  Module m = sq.module;
  Morphism inc_p = Morphism::from_generator_images(P, m, il);
  Morphism inc_q = Morphism::from_generator_images(Q, m, ir);
  Morphism structure = compose(inc_p, f);
  return Pushout{f, g, std::move(m), std::move(inc_p), std::move(inc_q), std::move(structure),
                 std::move(sq)};
}

std::int64_t Pushout::class_index(std::int64_t p_index, std::int64_t q_index) const {
  return layout.class_index[as_index(p_index * right_map.target().order() + q_index)];
}

ModElement Pushout::class_of(const ModElement& p, const ModElement& q) const {
  if (!(p.parent() == left_map.target()) || !(q.parent() == right_map.target()))
    throw Error(ErrorKind::ParentMismatch, "pushout class");
  return module.element_at(class_index(p.index(), q.index()));
}

std::pair<ModElement, ModElement> Pushout::representative(const ModElement& x) const {
  const Module& P = left_map.target();
  const Module& Q = right_map.target();
  const Coords raw = layout.lift(x, raw_product(P, Q));
  return {P.element(head(raw, P.rank())), Q.element(tail(raw, P.rank()))};
}

Morphism Pushout::descend(const Morphism& a, const Morphism& b) const {
  if (!(a.target() == b.target())) throw Error(ErrorKind::TargetMismatch, "pushout descent");
  if (!(a.source() == left_map.target()) || !(b.source() == right_map.target()))
    throw Error(ErrorKind::SourceMismatch, "pushout descent");
  if (!(compose(a, left_map) == compose(b, right_map)))
    throw Error(ErrorKind::Incompatible, "cocone does not commute under the base");
  std::vector<Coords> cols;
  const Module& P = left_map.target();
  const Module& Q = right_map.target();
  for (const auto& raw : layout.generators) {
    const ModElement p = P.element(head(raw, P.rank()));
    const ModElement q = Q.element(tail(raw, P.rank()));
    cols.push_back((a(p) + b(q)).coords());
  }
  return Morphism::from_generator_images(module, a.target(), cols);
}

}  // namespace homext
