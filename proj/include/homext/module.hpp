#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace homext {

using Coords = std::vector<std::int64_t>;

/// The base ring: the integers, or the integers modulo n (n >= 2).
struct RingDescriptor {
  enum class Kind { Integers, IntegersMod };

  Kind kind = Kind::Integers;
  std::int64_t modulus = 0;  // 0 for the integers

  static RingDescriptor integers() { return {}; }
  static RingDescriptor integers_mod(std::int64_t n);

  bool operator==(const RingDescriptor&) const = default;

  /// "Z" or "Z/n".
  std::string to_string() const;
};

/// Mixed-radix product Z/o_1 + ... + Z/o_k with no divisibility requirement.
/// Used as the ambient group for direct sums before renormalization.
/// Element index order is lexicographic on coordinates (first coordinate most
/// significant).
class CyclicProduct {
 public:
  CyclicProduct() = default;
  explicit CyclicProduct(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t size() const { return size_; }

  std::int64_t index_of(std::span<const std::int64_t> coords) const;
  Coords coords_at(std::int64_t index) const;
  void coords_at(std::int64_t index, Coords& out) const;

  Coords add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;
  Coords negate(std::span<const std::int64_t> a) const;
  Coords scale(std::int64_t c, std::span<const std::int64_t> a) const;
  Coords reduce(std::span<const std::int64_t> a) const;
  bool is_zero(std::span<const std::int64_t> a) const;

  /// Smallest r >= 1 with r*a = 0.
  std::int64_t order_of(std::span<const std::int64_t> a) const;

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_ = 1;
};

class ModElement;

/// A finite module over Z or Z/n in invariant-factor form
/// d_1 | d_2 | ... | d_k, each d_i >= 2. The zero module has no factors.
/// Over Z/n every d_i must divide n.
///
/// Modules are immutable handles; copies share storage.
class Module {
 public:
  Module();  // zero module over Z
  Module(RingDescriptor ring, std::vector<std::int64_t> factors);

  static Module zero(RingDescriptor ring);
  static Module cyclic(RingDescriptor ring, std::int64_t d);
  /// Normalizes an arbitrary list of cyclic orders (1 allowed) to invariant
  /// factors. No maps are tracked; see direct_sum for that.
  static Module from_cyclic_orders(RingDescriptor ring,
                                   std::span<const std::int64_t> orders);

  const RingDescriptor& ring() const { return data_->ring; }
  const std::vector<std::int64_t>& factors() const { return data_->shape.orders(); }
  const CyclicProduct& shape() const { return data_->shape; }
  std::size_t rank() const { return factors().size(); }
  std::int64_t order() const { return data_->shape.size(); }
  std::int64_t exponent() const;
  bool is_zero() const { return rank() == 0; }

  ModElement zero_element() const;
  ModElement element(Coords coords) const;
  ModElement element_at(std::int64_t index) const;
  ModElement generator(std::size_t j) const;
  std::vector<ModElement> elements() const;

  bool operator==(const Module& other) const;

  /// "Z/2+Z/4", or "0" for the zero module.
  std::string to_string() const;

 private:
  struct Data {
    RingDescriptor ring;
    CyclicProduct shape;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of a Module, stored as its canonical coordinate vector.
class ModElement {
 public:
  ModElement(Module parent, Coords coords);

  const Module& parent() const { return parent_; }
  const Coords& coords() const { return coords_; }
  std::int64_t index() const { return parent_.shape().index_of(coords_); }
  bool is_zero() const;

  ModElement operator+(const ModElement& other) const;
  ModElement operator-(const ModElement& other) const;
  ModElement operator-() const;
  ModElement scaled(std::int64_t c) const;

  bool operator==(const ModElement& other) const;
  std::strong_ordering operator<=>(const ModElement& other) const {
    return coords_ <=> other.coords_;
  }

  std::string to_string() const;

 private:
  Module parent_;
  Coords coords_;
};

ModElement element_add(const ModElement& a, const ModElement& b);

std::string coords_to_string(std::span<const std::int64_t> coords);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);

/// Invariant factors of a finite abelian group given by arbitrary cyclic
/// orders, computed through the primary decomposition.
std::vector<std::int64_t> invariant_factors_of(std::span<const std::int64_t> orders);

}  // namespace homext
