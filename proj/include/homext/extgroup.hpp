#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homext/extensions.hpp"
#include "homext/law_report.hpp"

namespace homext {

/// All abelian groups of the given order (as modules over `ring`), one per
/// isomorphism type, sorted by invariant factors. Over Z/n only groups whose
/// exponent divides n are returned.
std::vector<Module> abelian_groups_of_order(const RingDescriptor& ring, std::int64_t order);

/// Unit scalings e_j -> u e_j and the smallest transvections e_j -> e_j + c e_k
/// on the invariant-factor generators, each paired with its inverse. Together
/// they generate Aut(N).
struct ElementaryAutomorphism {
  Morphism map;
  Morphism inverse;
};
std::vector<ElementaryAutomorphism> elementary_automorphisms(const Module& N);

/// |Aut(N)| from the exponents of the primary parts of N.
std::uint64_t automorphism_count(const Module& N);

/// Size bound on |M| * |N|: HOMEXT_BOUND when set, else 64.
std::int64_t default_extension_bound();

struct EnumerateOptions {
  std::int64_t bound = default_extension_bound();
  bool parallel = true;
  bool with_baer_table = true;
};

using GroupTable = std::vector<std::vector<std::size_t>>;

struct ExtClassification {
  Module M;
  Module N;
  std::vector<Extension> classes;  // first member of each class in enumeration order
  std::size_t split_index = 0;
  std::optional<GroupTable> baer_table;
  std::uint64_t extensions_seen = 0;  // every (P, f, alpha) covered, counted as valid f times |Aut(N)|
};

/// Every extension of M by N up to isomorphism. Candidate middle modules are
/// processed independently (in parallel when requested) and merged in
/// candidate order, so the result does not depend on scheduling.
/// Throws BoundExceeded when |M| * |N| > options.bound.
ExtClassification enumerate_extensions(const Module& M, const Module& N,
                                       const EnumerateOptions& options = {});

/// An h : E.P -> F.P with F.f h = E.f and h E.alpha = F.alpha, if one exists.
/// Such an h is always an isomorphism; this is re-checked.
std::optional<Morphism> find_extension_isomorphism(const Extension& E, const Extension& F);

/// Index of the class of E. Throws Incompatible when E fits no class.
std::size_t classify(const ExtClassification& c, const Extension& E);

struct ExtGroupDescriptor {
  std::vector<std::int64_t> invariant_factors;
  std::int64_t order() const;
};

/// Ext^1(M, N) from the cyclic decompositions of M and N.
ExtGroupDescriptor ext_by_resolution(const Module& M, const Module& N);

/// Fiber product of E1.f and E2.f modulo the antidiagonal image of N.
Extension baer_sum(const Extension& E1, const Extension& E2);

/// Closure, identity, inverses, commutativity and associativity of a table.
LawReport check_abelian_table(const GroupTable& table, std::size_t identity);

/// Invariant factors of a finite abelian group given by its table, from the
/// number of elements killed by each prime power.
std::vector<std::int64_t> invariant_factors_of_table(const GroupTable& table, std::size_t identity);

struct CrossValidation {
  ExtClassification classification;
  ExtGroupDescriptor resolution;
  std::size_t torsor_classes = 0;
  std::size_t cotorsor_classes = 0;
  LawReport report;
};

/// Enumeration against resolution, the Baer table against the resolution
/// group, and class counts of the transported torsors and cotorsors.
CrossValidation cross_validate(const Module& M, const Module& N, const EnumerateOptions& options = {});

}  // namespace homext
