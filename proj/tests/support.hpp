#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "homext/corpus.hpp"
#include "homext/morphism.hpp"

namespace homext::testing {

inline const RingDescriptor kZ = RingDescriptor::integers();

inline Module zmod(std::vector<std::int64_t> factors, RingDescriptor ring = kZ) {
  return Module(ring, std::move(factors));
}

inline RingDescriptor over(std::int64_t n) { return RingDescriptor::integers_mod(n); }

// Raw tuples over a product of cyclic groups, independent of the library.
using Tuple = std::vector<std::int64_t>;

inline std::vector<Tuple> all_tuples(const std::vector<std::int64_t>& orders) {
  std::vector<Tuple> out{{}};
  for (std::int64_t o : orders) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (std::int64_t v = 0; v < o; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

inline std::int64_t tuple_order(const Tuple& t, const std::vector<std::int64_t>& orders) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::int64_t o = orders[i] / std::gcd(orders[i], t[i]);
    r = std::lcm(r, o);
  }
  return r;
}

// Histogram of element orders; two finite abelian groups are isomorphic iff
// these agree.
inline std::map<std::int64_t, std::int64_t> order_histogram(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::int64_t> h;
  for (const auto& t : all_tuples(orders)) ++h[tuple_order(t, orders)];
  return h;
}

// |Hom(A, B)| by trying every assignment of generator images and keeping
// those killed by the generator orders.
inline std::int64_t brute_hom_count(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const auto targets = all_tuples(b);
  std::int64_t per_generator_total = 1;
  for (std::int64_t d : a) {
    std::int64_t ok = 0;
    for (const auto& t : targets) {
      bool killed = true;
      for (std::size_t i = 0; i < t.size(); ++i) killed = killed && (d * t[i]) % b[i] == 0;
      if (killed) ++ok;
    }
    per_generator_total *= ok;
  }
  return per_generator_total;
}

inline const Corpus& corpus() {
  static const Corpus c = builtin_corpus();
  return c;
}

}  // namespace homext::testing
