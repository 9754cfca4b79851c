#include "homext/serialize.hpp"

#include <cctype>
#include <charconv>

#include "homext/error.hpp"

namespace homext {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::int64_t parse_positive(const std::string& text, const std::string& what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 1)
    throw Error(ErrorKind::ParseError, "bad " + what + ": '" + text + "'");
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

// The X with X + P = total; unique by cancellation for finite abelian groups.
Module complement(const Module& total, const Module& P) {
  if (P.order() == 0 || total.order() % P.order() != 0)
    throw Error(ErrorKind::SourceMismatch, total.to_string() + " has no summand " + P.to_string());
  for (const auto& X : abelian_groups_of_order(total.ring(), total.order() / P.order()))
    if (direct_sum(X, P).sum == total) return X;
  throw Error(ErrorKind::SourceMismatch, total.to_string() + " has no summand " + P.to_string());
}

}  // namespace

RingDescriptor parse_ring(const std::string& text) {
  const std::string t = trim(text);
  if (t == "Z") return RingDescriptor::integers();
  if (t.rfind("Z/", 0) == 0) {
    const std::int64_t n = parse_positive(t.substr(2), "modulus");
    if (n < 2) throw Error(ErrorKind::InvalidRing, "modulus must be >= 2, got " + t);
    return RingDescriptor::integers_mod(n);
  }
  throw Error(ErrorKind::ParseError, "ring must be Z or Z/n, got '" + text + "'");
}

Module parse_module(const std::string& text, const RingDescriptor& ring) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    Module m = module_from_json(parse_json(t));
    if (!(m.ring() == ring))
      throw Error(ErrorKind::RingMismatch, "module over " + m.ring().to_string() + ", expected " + ring.to_string());
    return m;
  }
  if (t == "0") return Module::zero(ring);
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = t.find('+', pos);
    const std::string term = trim(t.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
    if (term.rfind("Z/", 0) != 0)
      throw Error(ErrorKind::ParseError, "expected a term Z/d in '" + text + "'");
    orders.push_back(parse_positive(term.substr(2), "cyclic order"));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return Module::from_cyclic_orders(ring, orders);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json to_json(const RingDescriptor& ring) {
  if (ring.kind == RingDescriptor::Kind::Integers) return Json{{"kind", "Z"}};
  return Json{{"kind", "Zmod"}, {"n", ring.modulus}};
}

Json to_json(const Module& m) { return Json{{"ring", to_json(m.ring())}, {"factors", m.factors()}}; }

Json to_json(const Morphism& h) {
  return Json{{"source", to_json(h.source())}, {"target", to_json(h.target())}, {"matrix", h.matrix()}};
}

Json to_json(const Extension& E) {
  return Json{{"P", to_json(E.P)}, {"f", to_json(E.f)}, {"alpha", to_json(E.alpha)}};
}

Json to_json(const Coextension& C) {
  return Json{{"P", to_json(C.P)}, {"f", to_json(C.f)}, {"alpha", to_json(C.alpha)}};
}

Json to_json(const TorsorStructure& T) {
  return Json{{"P", to_json(T.P)}, {"f", to_json(T.f)}, {"tau", to_json(T.tau)}};
}

Json to_json(const CotorsorStructure& T) {
  return Json{{"P", to_json(T.P)}, {"f", to_json(T.f)}, {"tau", to_json(T.tau)}};
}

RingDescriptor ring_from_json(const Json& j) {
  const auto kind = get_as<std::string>(field(j, "kind"), "ring kind");
  if (kind == "Z") return RingDescriptor::integers();
  if (kind == "Zmod") return RingDescriptor::integers_mod(get_as<std::int64_t>(field(j, "n"), "ring modulus"));
  throw Error(ErrorKind::InvalidRing, "unknown ring kind '" + kind + "'");
}

Module module_from_json(const Json& j) {
  return Module(ring_from_json(field(j, "ring")),
                get_as<std::vector<std::int64_t>>(field(j, "factors"), "module factors"));
}

Morphism morphism_from_json(const Json& j) {
  return Morphism(module_from_json(field(j, "source")), module_from_json(field(j, "target")),
                  get_as<Matrix>(field(j, "matrix"), "morphism matrix"));
}

Extension extension_from_json(const Json& j) {
  return make_extension(module_from_json(field(j, "P")), morphism_from_json(field(j, "f")),
                        morphism_from_json(field(j, "alpha")));
}

Coextension coextension_from_json(const Json& j) {
  Module P = module_from_json(field(j, "P"));
  Morphism f = morphism_from_json(field(j, "f"));
  if (!(f.target() == P)) throw Error(ErrorKind::TargetMismatch, "f must land in P");
  return make_coextension(std::move(f), morphism_from_json(field(j, "alpha")));
}

TorsorStructure torsor_from_json(const Json& j) {
  Module P = module_from_json(field(j, "P"));
  Morphism f = morphism_from_json(field(j, "f"));
  if (!(f.source() == P)) throw Error(ErrorKind::SourceMismatch, "f must start at P");
  Morphism tau = morphism_from_json(field(j, "tau"));
  Module N = complement(tau.source(), P);
  return make_torsor(std::move(f), N, std::move(tau));
}

CotorsorStructure cotorsor_from_json(const Json& j) {
  Module P = module_from_json(field(j, "P"));
  Morphism f = morphism_from_json(field(j, "f"));
  if (!(f.target() == P)) throw Error(ErrorKind::TargetMismatch, "f must land in P");
  Morphism tau = morphism_from_json(field(j, "tau"));
  Module M = complement(tau.target(), P);
  return make_cotorsor(std::move(f), M, std::move(tau));
}

Json to_json(const ExtClassification& c) {
  Json classes = Json::array();
  for (const auto& E : c.classes) classes.push_back(to_json(E));
  Json out{{"M", to_json(c.M)}, {"N", to_json(c.N)}};
  if (c.baer_table)
    out["ext_invariant_factors"] = invariant_factors_of_table(*c.baer_table, c.split_index);
  else
    out["ext_invariant_factors"] = nullptr;
  out["classes"] = std::move(classes);
  out["split_index"] = c.split_index;
  out["baer_table"] = c.baer_table ? Json(*c.baer_table) : Json(nullptr);
  return out;
}

Json to_json(const ExtGroupDescriptor& d) {
  return Json{{"invariant_factors", d.invariant_factors}, {"order", d.order()}};
}

}  // namespace homext
