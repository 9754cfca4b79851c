#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homext/module.hpp"

namespace homext {

/// Row-major integer matrix: rows index target factors, columns source factors.
using Matrix = std::vector<std::vector<std::int64_t>>;

/// A module homomorphism between invariant-factor presentations.
///
/// Entry (i, j) is the i-th coordinate of the image of the j-th source
/// generator, reduced mod e_i. Construction checks well-definedness:
/// e_i | matrix[i][j] * d_j for source factors d and target factors e.
class Morphism {
 public:
  Morphism(Module source, Module target, Matrix matrix);

  static Morphism identity(const Module& m);
  static Morphism zero(const Module& source, const Module& target);
  /// Column j is the image of the j-th source generator.
  static Morphism from_generator_images(const Module& source, const Module& target,
                                        std::span<const ModElement> images);
  static Morphism from_generator_images(const Module& source, const Module& target,
                                        std::span<const Coords> images);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  ModElement operator()(const ModElement& a) const;
  /// Unchecked fast path on source coordinates.
  Coords apply_coords(std::span<const std::int64_t> coords) const;
  void apply_coords(std::span<const std::int64_t> coords, Coords& out) const;

  bool operator==(const Morphism& other) const;

  Morphism operator+(const Morphism& other) const;
  Morphism operator-(const Morphism& other) const;
  Morphism operator-() const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;

  /// Elements in the image, sorted by index in the target.
  std::vector<ModElement> image() const;

  std::string to_string() const;

 private:
  Module source_;
  Module target_;
  Matrix matrix_;
};

ModElement apply(const Morphism& h, const ModElement& a);

/// g o f
Morphism compose(const Morphism& g, const Morphism& f);

/// True iff h is a bijection on elements, checked by enumeration.
bool is_isomorphism(const Morphism& h);

/// All homomorphisms source -> target in lexicographic matrix order
/// (row-major entries, first entry most significant). Supports random
/// access so large sets can be sampled.
class HomSet {
 public:
  HomSet(Module source, Module target);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }

  /// Number of morphisms, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  Morphism at(std::uint64_t index) const;
  std::vector<Morphism> all() const;

 private:
  Module source_;
  Module target_;
  std::vector<std::int64_t> steps_;   // per entry, row-major
  std::vector<std::int64_t> counts_;  // number of admissible values per entry
  std::uint64_t size_ = 1;
};

std::vector<Morphism> hom_enumerate(const Module& source, const Module& target);

/// Indices into a HomSet: all of them when size <= cap, otherwise `cap`
/// distinct indices drawn deterministically from `seed`, sorted.
struct HomSelection {
  std::vector<std::uint64_t> indices;
  bool exhaustive = true;
};
HomSelection select_homs(const HomSet& homs, std::uint64_t cap, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultHomCap = 10'000;

}  // namespace homext
