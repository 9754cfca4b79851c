#include "homext/corpus.hpp"

#include <fstream>
#include <sstream>

#include "homext/duality.hpp"
#include "homext/error.hpp"
#include "homext/extgroup.hpp"
#include "homext/serialize.hpp"

namespace homext {

std::vector<RingDescriptor> builtin_rings() {
  return {RingDescriptor::integers(), RingDescriptor::integers_mod(2), RingDescriptor::integers_mod(4),
          RingDescriptor::integers_mod(6)};
}

std::vector<Module> small_modules(const RingDescriptor& ring, std::int64_t max_order) {
  std::vector<Module> out;
  for (std::int64_t order = 1; order <= max_order; ++order)
    for (auto& m : abelian_groups_of_order(ring, order)) out.push_back(std::move(m));
  return out;
}

Corpus builtin_corpus() {
  Corpus c;
  for (const auto& ring : builtin_rings()) {
    const auto mods = small_modules(ring, 8);
    c.modules.insert(c.modules.end(), mods.begin(), mods.end());
    for (const auto& M : mods)
      for (const auto& N : mods) {
        if (M.order() * N.order() > 8) continue;
        EnumerateOptions opts;
        opts.bound = 8;
        opts.with_baer_table = false;
        for (auto& E : enumerate_extensions(M, N, opts).classes) c.extensions.push_back(std::move(E));
      }
  }
  for (const auto& E : c.extensions) c.coextensions.push_back(theta(E));
  return c;
}

Corpus corpus_from_json(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "corpus must be a JSON object");
  Corpus c;
  auto each = [&](const char* key, auto&& fn) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (!it->is_array()) throw Error(ErrorKind::ParseError, std::string("corpus \"") + key + "\" must be an array");
    for (const auto& item : *it) fn(item);
  };
  each("modules", [&](const Json& x) { c.modules.push_back(module_from_json(x)); });
  each("extensions", [&](const Json& x) { c.extensions.push_back(extension_from_json(x)); });
  each("coextensions", [&](const Json& x) { c.coextensions.push_back(coextension_from_json(x)); });
  each("torsors", [&](const Json& x) { c.torsors.push_back(torsor_from_json(x)); });
  each("cotorsors", [&](const Json& x) { c.cotorsors.push_back(cotorsor_from_json(x)); });
  return c;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read corpus file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return corpus_from_json(ss.str());
}

}  // namespace homext
