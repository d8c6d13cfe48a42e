#pragma once

#include "origami/folds.hpp"

#include <utility>
#include <vector>

namespace origami::solvers {

using folds::Trace;

// Tangency x-coordinate s with s * s = r, constructed by the O5 fold with
// focus (0,1), directrix y = -1 and auxiliary point (0, -r/4); requires r > 0.
std::pair<ExactReal, Trace> sqrt_by_fold(const ExactReal& r);

// All real roots of mu^3 + a mu + b with multiplicities, ascending, as the
// slopes of the O6 folds between (y - a/2)^2 = 2bx and y = x^2/2.  The b = 0
// case factors mu (mu^2 + a) directly and produces an empty trace.
std::pair<std::vector<RootMult>, Trace> cubic_by_fold(const ExactReal& a,
                                                      const ExactReal& b);

// All real roots of 4x^3 - 3x = c (x = cos(theta) for c = cos(3 theta));
// requires -1 <= c <= 1.
std::vector<RootMult> trisect(const ExactReal& c);

// 2^(1/3), the Delian constant.
ExactReal duplicate_cube();

// All real roots of x^4 + a x^2 + b x + c with multiplicities, ascending; for
// b != 0 via the common points of the parabolas y = x^2 and
// (y + a/2)^2 = -b(x + (4c - a^2)/(4b)), else the biquadratic fallback.
std::vector<RootMult> quartic_roots(const ExactReal& a, const ExactReal& b,
                                    const ExactReal& c);

// cos(2 pi / 9), the largest root of the 9-gon Chebyshev cubic.
ExactReal ninegon_cos();

}  // namespace origami::solvers
