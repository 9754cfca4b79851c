#pragma once

#include <cstdint>
#include <vector>

#include "homext/module.hpp"
#include "homext/morphism.hpp"

namespace homext {

/// A subquotient H/B of a cyclic product, decomposed into invariant-factor
/// form by enumeration.
struct Subquotient {
  Module module;
  /// Ambient coordinates of a lift of each generator of `module`.
  std::vector<Coords> generators;
  /// Ambient index -> element index in `module`; -1 outside H.
  std::vector<std::int64_t> class_index;

  ModElement class_of(std::span<const std::int64_t> ambient_coords, const CyclicProduct& ambient) const;
  /// Ambient coordinates of sum c_i * generator_i.
  Coords lift(const ModElement& x, const CyclicProduct& ambient) const;
};

/// Decomposes H/B where `in_sub` and `in_base` are membership masks over
/// the ambient indices, B a subgroup of H. Generators are picked greedily:
/// each step takes the first element whose order modulo B equals its order
/// modulo the span found so far, maximizing that order. The result is
/// deterministic.
Subquotient decompose_subquotient(const RingDescriptor& ring, const CyclicProduct& ambient,
                                  const std::vector<char>& in_sub,
                                  const std::vector<char>& in_base);

/// Subquotient for a known basis: `generators` (with `orders`, already an
/// invariant-factor chain) span H/B directly.
Subquotient subquotient_from_basis(const RingDescriptor& ring, const CyclicProduct& ambient,
                                   std::vector<Coords> generators,
                                   std::vector<std::int64_t> orders,
                                   const std::vector<char>& in_base);

/// Membership mask of the image of h.
std::vector<char> image_mask(const Morphism& h);

struct Kernel {
  Module module;
  Morphism inclusion;  // module -> source of the quotiented morphism
};

Kernel kernel(const Morphism& f);

struct Cokernel {
  Morphism of;          // the morphism whose image is quotiented out
  Module module;
  Morphism projection;  // of.target() -> module
  Subquotient layout;

  /// Lift of x to of.target().
  ModElement lift(const ModElement& x) const;
  /// The unique a' : module -> a.target() with a' o projection = a.
  /// Requires a o of = 0.
  Morphism factor(const Morphism& a) const;
};

Cokernel cokernel(const Morphism& f);

/// An element of coker(f) written through a representative in f's target.
class CosetElement {
 public:
  CosetElement(Morphism quotient_of, ModElement representative);

  const Morphism& quotient_of() const { return quotient_of_; }
  const ModElement& representative() const { return representative_; }

  /// Same coset, lexicographically smallest representative.
  CosetElement canonical() const;

  bool operator==(const CosetElement& other) const;

 private:
  Morphism quotient_of_;
  ModElement representative_;
};

}  // namespace homext
