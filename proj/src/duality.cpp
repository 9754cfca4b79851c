#include "homext/duality.hpp"

#include "homext/error.hpp"

namespace homext {

Coextension theta(const Extension& E) {
  return make_coextension_from_lift(E.alpha, E.f);
}

Morphism theta_morphism(const Extension& E, const Extension& F, const Morphism& h) {
  if (!is_extension_morphism(E, F, h))
    throw Error(ErrorKind::Incompatible, "not a morphism of extensions: " + h.to_string());
  if (!is_coextension_morphism(theta(E), theta(F), h))
    throw Error(ErrorKind::Incompatible, "not a morphism of coextensions: " + h.to_string());
  return h;
}

Extension theta_inverse(const Coextension& C) {
  Extension E = make_extension(C.P, C.alpha_on_P(), C.f);
  if (!(theta(E).f == C.f))
    throw Error(ErrorKind::AxiomViolation, "theta of the inverse does not return f");
  return E;
}

HomBijectionReport theta_hom_bijection(const Extension& E, const Extension& F, std::uint64_t cap,
                                       std::uint64_t seed) {
  const Coextension S = theta(E);
  const Coextension T = theta(F);
  return compare_hom_filters(
      HomSet(E.P, F.P), [&](const Morphism& h) { return is_extension_morphism(E, F, h); },
      [&](const Morphism& h) { return is_coextension_morphism(S, T, h); }, cap, seed);
}

}  // namespace homext
