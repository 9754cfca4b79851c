#include "homext/subquotient.hpp"

#include <algorithm>
#include <numeric>

#include "homext/error.hpp"

namespace homext {

namespace {

std::size_t as_index(std::int64_t i) { return static_cast<std::size_t>(i); }

// Smallest r >= 1 with r*x in the set given by `mask`, capped at `limit`.
std::int64_t order_modulo(const CyclicProduct& ambient, const Coords& x,
                          const std::vector<char>& mask, std::int64_t limit) {
  Coords acc = x;
  for (std::int64_t r = 1; r <= limit; ++r) {
    if (mask[as_index(ambient.index_of(acc))]) return r;
    acc = ambient.add(acc, x);
  }
  return limit + 1;
}

}  // namespace

Subquotient decompose_subquotient(const RingDescriptor& ring, const CyclicProduct& ambient,
                                  const std::vector<char>& in_sub,
                                  const std::vector<char>& in_base) {
  const std::int64_t n = ambient.size();
  std::vector<char> span = in_base;
  std::int64_t span_size = std::count(span.begin(), span.end(), char{1});
  const std::int64_t sub_size = std::count(in_sub.begin(), in_sub.end(), char{1});
  const std::int64_t exponent = [&] {
    std::int64_t e = 1;
    for (auto o : ambient.orders()) e = std::lcm(e, o);
    return e;
  }();

  std::vector<Coords> chosen;
  std::vector<std::int64_t> chosen_orders;
  Coords x;
  while (span_size < sub_size) {
    std::int64_t best = 0;
    Coords best_x;
    for (std::int64_t i = 0; i < n; ++i) {
      if (!in_sub[as_index(i)] || span[as_index(i)]) continue;
      ambient.coords_at(i, x);
      const std::int64_t q = order_modulo(ambient, x, span, exponent);
      if (q <= best) continue;
      if (order_modulo(ambient, x, in_base, exponent) != q) continue;
      best = q;
      best_x = x;
      if (best == exponent) break;
    }
    if (best == 0) throw Error(ErrorKind::InvalidModule, "subquotient decomposition failed");
    // span += <best_x>
    std::vector<char> next = span;
    Coords y;
    for (std::int64_t i = 0; i < n; ++i) {
      if (!span[as_index(i)]) continue;
      ambient.coords_at(i, y);
      for (std::int64_t r = 1; r < best; ++r) {
        y = ambient.add(y, best_x);
        next[as_index(ambient.index_of(y))] = 1;
      }
    }
    span.swap(next);
    span_size = std::count(span.begin(), span.end(), char{1});
    chosen.push_back(best_x);
    chosen_orders.push_back(best);
  }
  if (span != in_sub) throw Error(ErrorKind::InvalidModule, "subquotient is not closed");

  // Orders were found largest first; invariant-factor order is ascending.
  std::reverse(chosen.begin(), chosen.end());
  std::reverse(chosen_orders.begin(), chosen_orders.end());

  return subquotient_from_basis(ring, ambient, std::move(chosen), std::move(chosen_orders),
                               in_base);
}

Subquotient subquotient_from_basis(const RingDescriptor& ring, const CyclicProduct& ambient,
                                   std::vector<Coords> generators,
                                   std::vector<std::int64_t> orders,
                                   const std::vector<char>& in_base) {
  const std::int64_t n = ambient.size();
  Subquotient sq{Module(ring, std::move(orders)), std::move(generators),
                 std::vector<std::int64_t>(as_index(n), -1)};
  std::vector<std::int64_t> base_elems;
  for (std::int64_t i = 0; i < n; ++i)
    if (in_base[as_index(i)]) base_elems.push_back(i);
  Coords b;
  for (std::int64_t k = 0; k < sq.module.order(); ++k) {
    Coords rep = sq.lift(sq.module.element_at(k), ambient);
    for (auto bi : base_elems) {
      ambient.coords_at(bi, b);
      sq.class_index[as_index(ambient.index_of(ambient.add(rep, b)))] = k;
    }
  }
  return sq;
}

ModElement Subquotient::class_of(std::span<const std::int64_t> ambient_coords,
                                 const CyclicProduct& ambient) const {
  const std::int64_t k = class_index[as_index(ambient.index_of(ambient_coords))];
  if (k < 0) throw Error(ErrorKind::ParentMismatch, "element lies outside the subquotient");
  return module.element_at(k);
}

Coords Subquotient::lift(const ModElement& x, const CyclicProduct& ambient) const {
  Coords acc(ambient.rank(), 0);
  for (std::size_t i = 0; i < generators.size(); ++i)
    acc = ambient.add(acc, ambient.scale(x.coords()[i], generators[i]));
  return acc;
}

std::vector<char> image_mask(const Morphism& h) {
  std::vector<char> mask(as_index(h.target().order()), 0);
  for (const auto& y : h.image()) mask[as_index(y.index())] = 1;
  return mask;
}

Kernel kernel(const Morphism& f) {
  const auto& src = f.source();
  std::vector<char> in_ker(as_index(src.order()), 0);
  std::vector<char> zero(as_index(src.order()), 0);
  zero[0] = 1;
  Coords x, y;
  for (std::int64_t i = 0; i < src.order(); ++i) {
    src.shape().coords_at(i, x);
    f.apply_coords(x, y);
    if (f.target().shape().is_zero(y)) in_ker[as_index(i)] = 1;
  }
  Subquotient sq = decompose_subquotient(src.ring(), src.shape(), in_ker, zero);
  Morphism incl = Morphism::from_generator_images(sq.module, src, sq.generators);
  return Kernel{sq.module, std::move(incl)};
}

Cokernel cokernel(const Morphism& f) {
  const auto& tgt = f.target();
  std::vector<char> all(as_index(tgt.order()), 1);
  Subquotient sq = decompose_subquotient(tgt.ring(), tgt.shape(), all, image_mask(f));
  std::vector<Coords> cols;
  for (std::size_t j = 0; j < tgt.rank(); ++j)
    cols.push_back(sq.class_of(tgt.generator(j).coords(), tgt.shape()).coords());
  Morphism proj = Morphism::from_generator_images(tgt, sq.module, cols);
  Module q = sq.module;
  return Cokernel{f, std::move(q), std::move(proj), std::move(sq)};
}

ModElement Cokernel::lift(const ModElement& x) const {
  if (!(x.parent() == module)) throw Error(ErrorKind::ParentMismatch, "lift from cokernel");
  return of.target().element(layout.lift(x, of.target().shape()));
}

Morphism Cokernel::factor(const Morphism& a) const {
  if (!(a.source() == of.target()))
    throw Error(ErrorKind::SourceMismatch, "factor through cokernel");
  if (!compose(a, of).is_zero())
    throw Error(ErrorKind::Incompatible, "map does not vanish on the image");
  std::vector<Coords> cols;
  for (std::size_t i = 0; i < module.rank(); ++i)
    cols.push_back(a(lift(module.generator(i))).coords());
  return Morphism::from_generator_images(module, a.target(), cols);
}

// ---------------------------------------------------------------------------

CosetElement::CosetElement(Morphism quotient_of, ModElement representative)
    : quotient_of_(std::move(quotient_of)), representative_(std::move(representative)) {
  if (!(representative_.parent() == quotient_of_.target()))
    throw Error(ErrorKind::ParentMismatch, "coset representative must lie in the target");
}

CosetElement CosetElement::canonical() const {
  ModElement best = representative_;
  for (const auto& y : quotient_of_.image()) {
    ModElement cand = representative_ + y;
    if (cand < best) best = cand;
  }
  return CosetElement(quotient_of_, best);
}

bool CosetElement::operator==(const CosetElement& other) const {
  if (!(quotient_of_ == other.quotient_of_)) return false;
  ModElement diff = representative_ - other.representative_;
  auto img = quotient_of_.image();
  return std::binary_search(img.begin(), img.end(), diff);
}

}  // namespace homext
