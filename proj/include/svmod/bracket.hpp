#pragma once

#include "svmod/generator.hpp"
#include "svmod/lincomb.hpp"

namespace svmod {

/// [g,h] in the Schrödinger-Virasoro algebra. Both generators must be tagged SV.
LinComb<Generator> sv_bracket(const Generator& g, const Generator& h);

/// [g,h] in W(2,2). Both generators must be tagged W22.
LinComb<Generator> w22_bracket(const Generator& g, const Generator& h);

/// Dispatch on the (shared) algebra tag.
LinComb<Generator> lie_bracket(const Generator& g, const Generator& h);

}  // namespace svmod
