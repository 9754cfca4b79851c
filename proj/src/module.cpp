#include "homext/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "homext/error.hpp"

namespace homext {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

RingDescriptor RingDescriptor::integers_mod(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidRing, "modulus must be >= 2, got " + std::to_string(n));
  return {Kind::IntegersMod, n};
}

std::string RingDescriptor::to_string() const {
  return kind == Kind::Integers ? "Z" : "Z/" + std::to_string(modulus);
}

// ---------------------------------------------------------------------------

CyclicProduct::CyclicProduct(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  strides_.assign(orders_.size(), 1);
  size_ = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    if (orders_[i] < 1) throw Error(ErrorKind::InvalidModule, "cyclic order must be positive");
    strides_[i] = size_;
    size_ *= orders_[i];
  }
}

std::int64_t CyclicProduct::index_of(std::span<const std::int64_t> coords) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx += floor_mod(coords[i], orders_[i]) * strides_[i];
  return idx;
}

Coords CyclicProduct::coords_at(std::int64_t index) const {
  Coords c;
  coords_at(index, c);
  return c;
}

void CyclicProduct::coords_at(std::int64_t index, Coords& out) const {
  out.resize(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = index / strides_[i];
    index %= strides_[i];
  }
}

Coords CyclicProduct::add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  Coords r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(a[i] + b[i], orders_[i]);
  return r;
}

Coords CyclicProduct::negate(std::span<const std::int64_t> a) const {
  Coords r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(-a[i], orders_[i]);
  return r;
}

Coords CyclicProduct::scale(std::int64_t c, std::span<const std::int64_t> a) const {
  Coords r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(floor_mod(c, orders_[i]) * a[i], orders_[i]);
  return r;
}

Coords CyclicProduct::reduce(std::span<const std::int64_t> a) const {
  Coords r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(a[i], orders_[i]);
  return r;
}

bool CyclicProduct::is_zero(std::span<const std::int64_t> a) const {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (floor_mod(a[i], orders_[i]) != 0) return false;
  return true;
}

std::int64_t CyclicProduct::order_of(std::span<const std::int64_t> a) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t x = floor_mod(a[i], orders_[i]);
    std::int64_t oi = orders_[i] / std::gcd(orders_[i], x);
    ord = std::lcm(ord, oi);
  }
  return ord;
}

// ---------------------------------------------------------------------------

namespace {

std::map<std::int64_t, int> factorize(std::int64_t n) {
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

std::vector<std::int64_t> invariant_factors_of(std::span<const std::int64_t> orders) {
  // prime -> exponents of the primary cyclic pieces
  std::map<std::int64_t, std::vector<int>> primary;
  for (std::int64_t o : orders) {
    if (o < 1) throw Error(ErrorKind::InvalidModule, "cyclic order must be positive");
    for (auto [p, e] : factorize(o)) primary[p].push_back(e);
  }
  std::size_t k = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<>());
    k = std::max(k, es.size());
  }
  // factors[0] is the largest invariant factor
  std::vector<std::int64_t> factors(k, 1);
  for (auto& [p, es] : primary) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (int t = 0; t < es[i]; ++t) factors[i] *= p;
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

Module::Module() : Module(RingDescriptor::integers(), {}) {}

Module::Module(RingDescriptor ring, std::vector<std::int64_t> factors) {
  if (ring.kind == RingDescriptor::Kind::IntegersMod && ring.modulus < 2)
    throw Error(ErrorKind::InvalidRing, "modulus must be >= 2");
  if (ring.kind == RingDescriptor::Kind::Integers && ring.modulus != 0)
    throw Error(ErrorKind::InvalidRing, "the integers carry no modulus");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2)
      throw Error(ErrorKind::InvalidModule, "invariant factors must be >= 2");
    if (i > 0 && factors[i] % factors[i - 1] != 0)
      throw Error(ErrorKind::InvalidModule, "invariant factors must form a divisibility chain");
    if (ring.kind == RingDescriptor::Kind::IntegersMod && ring.modulus % factors[i] != 0)
      throw Error(ErrorKind::InvalidModule,
                  "factor " + std::to_string(factors[i]) + " does not divide the ring modulus " +
                      std::to_string(ring.modulus));
  }
  data_ = std::make_shared<const Data>(Data{ring, CyclicProduct(std::move(factors))});
}

Module Module::zero(RingDescriptor ring) { return Module(ring, {}); }

Module Module::cyclic(RingDescriptor ring, std::int64_t d) {
  if (d == 1) return zero(ring);
  return Module(ring, {d});
}

Module Module::from_cyclic_orders(RingDescriptor ring, std::span<const std::int64_t> orders) {
  return Module(ring, invariant_factors_of(orders));
}

std::int64_t Module::exponent() const { return factors().empty() ? 1 : factors().back(); }

ModElement Module::zero_element() const { return ModElement(*this, Coords(rank(), 0)); }

ModElement Module::element(Coords coords) const { return ModElement(*this, std::move(coords)); }

ModElement Module::element_at(std::int64_t index) const {
  return ModElement(*this, shape().coords_at(index));
}

ModElement Module::generator(std::size_t j) const {
  Coords c(rank(), 0);
  c.at(j) = 1;
  return ModElement(*this, std::move(c));
}

std::vector<ModElement> Module::elements() const {
  std::vector<ModElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::int64_t i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

bool Module::operator==(const Module& other) const {
  if (data_ == other.data_) return true;
  return ring() == other.ring() && factors() == other.factors();
}

std::string Module::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < rank(); ++i) os << (i ? "+" : "") << "Z/" << factors()[i];
  return os.str();
}

// ---------------------------------------------------------------------------

ModElement::ModElement(Module parent, Coords coords) : parent_(std::move(parent)) {
  if (coords.size() != parent_.rank())
    throw Error(ErrorKind::ParentMismatch, "coordinate vector has length " +
                                               std::to_string(coords.size()) + ", module rank is " +
                                               std::to_string(parent_.rank()));
  coords_ = parent_.shape().reduce(coords);
}

bool ModElement::is_zero() const { return parent_.shape().is_zero(coords_); }

static void require_same_parent(const ModElement& a, const ModElement& b) {
  if (!(a.parent() == b.parent()))
    throw Error(ErrorKind::ParentMismatch,
                "elements of " + a.parent().to_string() + " and " + b.parent().to_string());
}

ModElement ModElement::operator+(const ModElement& other) const {
  require_same_parent(*this, other);
  return ModElement(parent_, parent_.shape().add(coords_, other.coords_));
}

ModElement ModElement::operator-(const ModElement& other) const { return *this + (-other); }

ModElement ModElement::operator-() const {
  return ModElement(parent_, parent_.shape().negate(coords_));
}

ModElement ModElement::scaled(std::int64_t c) const {
  return ModElement(parent_, parent_.shape().scale(c, coords_));
}

bool ModElement::operator==(const ModElement& other) const {
  return parent_ == other.parent_ && coords_ == other.coords_;
}

std::string ModElement::to_string() const { return coords_to_string(coords_); }

ModElement element_add(const ModElement& a, const ModElement& b) { return a + b; }

std::string coords_to_string(std::span<const std::int64_t> coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

}  // namespace homext
