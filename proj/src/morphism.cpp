#include "homext/morphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "homext/error.hpp"

namespace homext {

Morphism::Morphism(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.ring() == target_.ring()))
    throw Error(ErrorKind::RingMismatch, "morphism between modules over " +
                                             source_.ring().to_string() + " and " +
                                             target_.ring().to_string());
  const auto& d = source_.factors();
  const auto& e = target_.factors();
  if (matrix_.size() != e.size())
    throw Error(ErrorKind::InvalidMorphism, "matrix has " + std::to_string(matrix_.size()) +
                                                " rows, target rank is " + std::to_string(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (matrix_[i].size() != d.size())
      throw Error(ErrorKind::InvalidMorphism, "matrix row " + std::to_string(i) + " has " +
                                                  std::to_string(matrix_[i].size()) +
                                                  " columns, source rank is " +
                                                  std::to_string(d.size()));
    for (std::size_t j = 0; j < d.size(); ++j) {
      std::int64_t& entry = matrix_[i][j];
      entry = floor_mod(entry, e[i]);
      if ((entry * d[j]) % e[i] != 0)
        throw Error(ErrorKind::InvalidMorphism,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                        std::to_string(entry) + " is not well defined: " + std::to_string(e[i]) +
                        " does not divide " + std::to_string(entry) + "*" + std::to_string(d[j]));
    }
  }
}

Morphism Morphism::identity(const Module& m) {
  Matrix a(m.rank(), std::vector<std::int64_t>(m.rank(), 0));
  for (std::size_t i = 0; i < m.rank(); ++i) a[i][i] = 1;
  return Morphism(m, m, std::move(a));
}

Morphism Morphism::zero(const Module& source, const Module& target) {
  return Morphism(source, target,
                  Matrix(target.rank(), std::vector<std::int64_t>(source.rank(), 0)));
}

Morphism Morphism::from_generator_images(const Module& source, const Module& target,
                                         std::span<const ModElement> images) {
  std::vector<Coords> cols;
  cols.reserve(images.size());
  for (const auto& x : images) {
    if (!(x.parent() == target))
      throw Error(ErrorKind::ParentMismatch, "generator image is not in " + target.to_string());
    cols.push_back(x.coords());
  }
  return from_generator_images(source, target, cols);
}

Morphism Morphism::from_generator_images(const Module& source, const Module& target,
                                         std::span<const Coords> images) {
  if (images.size() != source.rank())
    throw Error(ErrorKind::InvalidMorphism, "need one image per source generator");
  Matrix a(target.rank(), std::vector<std::int64_t>(source.rank(), 0));
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].size() != target.rank())
      throw Error(ErrorKind::InvalidMorphism, "generator image has wrong length");
    for (std::size_t i = 0; i < target.rank(); ++i) a[i][j] = images[j][i];
  }
  return Morphism(source, target, std::move(a));
}

void Morphism::apply_coords(std::span<const std::int64_t> coords, Coords& out) const {
  const auto& e = target_.factors();
  out.assign(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int64_t acc = 0;
    const auto& row = matrix_[i];
    for (std::size_t j = 0; j < row.size(); ++j) acc = (acc + row[j] * coords[j]) % e[i];
    out[i] = floor_mod(acc, e[i]);
  }
}

Coords Morphism::apply_coords(std::span<const std::int64_t> coords) const {
  Coords out;
  apply_coords(coords, out);
  return out;
}

ModElement Morphism::operator()(const ModElement& a) const {
  if (!(a.parent() == source_))
    throw Error(ErrorKind::ParentMismatch,
                "element of " + a.parent().to_string() + " applied to morphism out of " +
                    source_.to_string());
  return ModElement(target_, apply_coords(a.coords()));
}

ModElement apply(const Morphism& h, const ModElement& a) { return h(a); }

bool Morphism::operator==(const Morphism& other) const {
  return source_ == other.source_ && target_ == other.target_ && matrix_ == other.matrix_;
}

Morphism Morphism::operator+(const Morphism& other) const {
  if (!(source_ == other.source_)) throw Error(ErrorKind::SourceMismatch, "sum of morphisms");
  if (!(target_ == other.target_)) throw Error(ErrorKind::TargetMismatch, "sum of morphisms");
  Matrix a = matrix_;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += other.matrix_[i][j];
  return Morphism(source_, target_, std::move(a));
}

Morphism Morphism::operator-() const {
  Matrix a = matrix_;
  for (auto& row : a)
    for (auto& x : row) x = -x;
  return Morphism(source_, target_, std::move(a));
}

Morphism Morphism::operator-(const Morphism& other) const { return *this + (-other); }

bool Morphism::is_zero() const {
  for (const auto& row : matrix_)
    for (auto x : row)
      if (x != 0) return false;
  return true;
}

std::vector<ModElement> Morphism::image() const {
  std::vector<char> seen(static_cast<std::size_t>(target_.order()), 0);
  Coords x, y;
  for (std::int64_t i = 0; i < source_.order(); ++i) {
    source_.shape().coords_at(i, x);
    apply_coords(x, y);
    seen[static_cast<std::size_t>(target_.shape().index_of(y))] = 1;
  }
  std::vector<ModElement> out;
  for (std::int64_t i = 0; i < target_.order(); ++i)
    if (seen[static_cast<std::size_t>(i)]) out.push_back(target_.element_at(i));
  return out;
}

bool Morphism::is_injective() const {
  Coords x, y;
  for (std::int64_t i = 1; i < source_.order(); ++i) {
    source_.shape().coords_at(i, x);
    apply_coords(x, y);
    if (target_.shape().is_zero(y)) return false;
  }
  return true;
}

bool Morphism::is_surjective() const {
  return static_cast<std::int64_t>(image().size()) == target_.order();
}

std::string Morphism::to_string() const {
  std::ostringstream os;
  os << source_.to_string() << " -> " << target_.to_string() << " [";
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < matrix_[i].size(); ++j) os << (j ? " " : "") << matrix_[i][j];
  }
  os << ']';
  return os.str();
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorKind::Incompatible, "cannot compose " + g.to_string() + " after " + f.to_string());
  const auto& e = g.target().factors();
  const std::size_t mid = f.target().rank();
  const std::size_t cols = f.source().rank();
  Matrix a(e.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < mid; ++j) acc = (acc + g.matrix()[i][j] * f.matrix()[j][k]) % e[i];
      a[i][k] = acc;
    }
  return Morphism(f.source(), g.target(), std::move(a));
}

bool is_isomorphism(const Morphism& h) {
  if (h.source().order() != h.target().order()) return false;
  return h.is_injective();
}

// ---------------------------------------------------------------------------

HomSet::HomSet(Module source, Module target) : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.ring() == target_.ring()))
    throw Error(ErrorKind::RingMismatch, "Hom between modules over different rings");
  const auto& d = source_.factors();
  const auto& e = target_.factors();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      // admissible entries: multiples of e_i / gcd(e_i, d_j) in [0, e_i)
      std::int64_t g = std::gcd(e[i], d[j]);
      steps_.push_back(e[i] / g);
      counts_.push_back(g);
      if (size_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(g))
        size_ = std::numeric_limits<std::uint64_t>::max();
      else
        size_ *= static_cast<std::uint64_t>(g);
    }
}

Morphism HomSet::at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorKind::InvalidMorphism, "Hom index out of range");
  const std::size_t rows = target_.rank();
  const std::size_t cols = source_.rank();
  Matrix a(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t t = counts_.size(); t-- > 0;) {
    auto c = static_cast<std::uint64_t>(counts_[t]);
    a[t / cols][t % cols] = static_cast<std::int64_t>(index % c) * steps_[t];
    index /= c;
  }
  return Morphism(source_, target_, std::move(a));
}

std::vector<Morphism> HomSet::all() const {
  std::vector<Morphism> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

std::vector<Morphism> hom_enumerate(const Module& source, const Module& target) {
  return HomSet(source, target).all();
}

HomSelection select_homs(const HomSet& homs, std::uint64_t cap, std::uint64_t seed) {
  HomSelection sel;
  if (homs.size() <= cap) {
    sel.indices.resize(static_cast<std::size_t>(homs.size()));
    std::iota(sel.indices.begin(), sel.indices.end(), std::uint64_t{0});
    return sel;
  }
  sel.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, homs.size() - 1);
  std::set<std::uint64_t> chosen;
  chosen.insert(0);  // keep the zero map in every sample
  while (chosen.size() < cap) chosen.insert(dist(rng));
  sel.indices.assign(chosen.begin(), chosen.end());
  return sel;
}

}  // namespace homext
