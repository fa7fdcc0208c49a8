#pragma once

#include "gkz/numtypes.hpp"

namespace gkz {

// complex gamma via the g=7 Lanczos table with reflection for Re z < 1/2
Cplx cgamma(const Cplx& z);

// 1/Gamma with exact zeros at the poles
Cplx rcgamma(const Cplx& z);

}  // namespace gkz
