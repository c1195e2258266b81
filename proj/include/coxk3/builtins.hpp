#pragma once

// Built-in fixtures: the fans, degree matrices and base presentations that
// the verification harness and the CLI expose under `builtin:` names, so
// the reproduction runs need no external input files.

#include "coxk3/graded.hpp"
#include "coxk3/k3.hpp"
#include "coxk3/toric.hpp"

#include <string>

namespace coxk3::builtins {

toric::Fan p2();
toric::Fan p1xp1();
toric::Fan hirzebruch(long a);

/// Six-ray fan of the fourth Hirzebruch surface blown up in the two torus
/// fixed points of the zero section, rays ordered to match the published
/// degree matrix.
toric::Fan bl2_f4();

/// The three-dimensional ambient fan used for the third blow-up: seven
/// rays, ten maximal cones.
toric::Fan sigma0();

/// Lookup by CLI name: "builtin:F0", "builtin:F4", "builtin:P2",
/// "builtin:F<a>", "builtin:Bl2F4", "builtin:Sigma0".
toric::Fan fan_by_name(const std::string& name);

/// Published degree matrices, keyed "rhoX2i".."rhoX5ii", "f4bl3", "bl2f4".
IMat published_matrix(const std::string& key);

/// The published two-term relation of the rank-5 F4 chain as printed
/// (inconsistent with its own degree matrix; kept verbatim as a target).
Polynomial published_rhoX5ii_relation();

/// Cox presentations of the quotient surfaces in the bases used by the
/// published matrices; keys: "F0", "F4", "Bl1P2", "Bl1F0", "Bl1F4",
/// "Bl2F0", "Bl2F4", "Bl3F4", "dP5".
graded::GradedPresentation base_presentation(const std::string& key);

/// Cover input for each published case, keyed "rhoX2i".."rhoX5ii".
k3::CoverSpec cover_spec(const std::string& key);

}  // namespace coxk3::builtins
