#pragma once

#include <string>
#include <vector>

#include "homext/cotorsors.hpp"
#include "homext/extensions.hpp"
#include "homext/torsors.hpp"

namespace homext {

struct Corpus {
  std::vector<Module> modules;
  std::vector<Extension> extensions;
  std::vector<Coextension> coextensions;
  std::vector<TorsorStructure> torsors;
  std::vector<CotorsorStructure> cotorsors;
};

/// Z, Z/2, Z/4, Z/6.
std::vector<RingDescriptor> builtin_rings();

/// Every module over `ring` with at most `max_order` elements, zero included,
/// ordered by size then invariant factors.
std::vector<Module> small_modules(const RingDescriptor& ring, std::int64_t max_order);

/// Modules with at most 8 elements over the builtin rings; one extension per
/// isomorphism class for every pair with |M| * |N| <= 8; their theta images
/// as coextensions.
Corpus builtin_corpus();

/// {"modules":[...],"extensions":[...],"coextensions":[...],"torsors":[...],
///  "cotorsors":[...]}, every key optional.
Corpus corpus_from_json(const std::string& text);
Corpus load_corpus(const std::string& path);

}  // namespace homext
