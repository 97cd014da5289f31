#pragma once

#include <cstdint>

#include "phaseless/bspline.hpp"
#include "phaseless/sample_set.hpp"

namespace phaseless {

/// x_i = N1 + (i-1)(N2-N1)/(K-1), 1 <= i <= K. Requires K >= 2.
SampleSet uniform_grid(const Window& window, std::int64_t k);

/// K interior points N1+1 + (i-1)(N2-N1-2)/(K-1) together with N1 + i/(m+1) and
/// N2 - i/(m+1), 0 <= i <= m. Requires N2 - N1 > 2 and K >= 2.
SampleSet example2_set(const Window& window, Degree m, std::int64_t k);

/// {n alpha + beta : n in Z} for alpha = p/q > 0 in lowest terms and beta >= 0:
/// period p with the q offsets (k alpha + beta) mod p, and no edits.
PeriodicSetDescriptor arithmetic_progression(const Rational& alpha, const Rational& beta);

}  // namespace phaseless
