#pragma once

// Certified evaluation of theta functions on the Siegel upper half space and
// of the modular quantities built from them: the elliptic discriminant,
// products of even theta constants, quartic surface models of abelian
// surfaces and their dual discriminants, and closed-form analytic torsion.

#include "certified.hpp"
#include "characteristic.hpp"
#include "checks.hpp"
#include "constants.hpp"
#include "degeneration.hpp"
#include "epstein.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "kummer.hpp"
#include "modular_g1.hpp"
#include "sampling.hpp"
#include "siegel_forms.hpp"
#include "siegel_point.hpp"
#include "theta.hpp"
#include "torsion.hpp"
#include "version.hpp"
