#pragma once

#include "vlr/core.hpp"

namespace vlr {

// Scaled complex error function w(z) = exp(-z^2) erfc(-iz) on the whole
// plane. Trapezoid summation with pole correction near the real axis,
// continued fraction for |z| >= 16; relative accuracy ~5e-16.
cplx faddeeva_w(cplx z);

} // namespace vlr
