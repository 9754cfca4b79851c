#pragma once

#include "homext/cotorsors.hpp"
#include "homext/extensions.hpp"
#include "homext/hom_bijection.hpp"

namespace homext {

/// f' = alpha_f : N -> P and alpha_{f'}([p]) = f(p).
Coextension theta(const Extension& E);

/// The same underlying map viewed between theta(E) and theta(F). Throws
/// Incompatible unless h is a morphism of extensions and of the image
/// coextensions.
Morphism theta_morphism(const Extension& E, const Extension& F, const Morphism& h);

/// g(p) = alpha_C([p]) and alpha_g(n) = f(n). Asserts that theta of the result
/// gives back C.f exactly.
Extension theta_inverse(const Coextension& C);

/// Extension morphisms E -> F against coextension morphisms between the images.
HomBijectionReport theta_hom_bijection(const Extension& E, const Extension& F,
                                       std::uint64_t cap = kDefaultHomCap, std::uint64_t seed = 0);

}  // namespace homext
