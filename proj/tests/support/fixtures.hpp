#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phaseless/bspline.hpp"
#include "phaseless/linalg.hpp"
#include "phaseless/sample_set.hpp"

namespace phaseless::testing {

/// Shorthand for parse_rational in test tables.
Rational q(const std::string& text);
std::vector<Rational> qs(std::initializer_list<const char*> texts);

SampleSet sample_set(std::int64_t lo, std::int64_t hi, std::initializer_list<const char*> points);

/// lo, lo + 1/d, ..., hi.
std::vector<Rational> grid(std::int64_t lo, std::int64_t hi, std::int64_t d);

/// Every subset of `points` on `window`, in bitmask order.
std::vector<SampleSet> all_subsets(const Window& window, const std::vector<Rational>& points);

/// The exhaustive family of the oracle checks: windows [0,1] and [0,2], points on
/// the 1/4 grid, all subsets.
std::vector<SampleSet> quarter_grid_family();

/// Each point of the 1/d grid of `window` kept with probability `density`.
SampleSet random_grid_subset(std::mt19937_64& rng, const Window& window, std::int64_t d, double density);

/// Random subsets of a fine grid until one passes is_local_phaseless.
SampleSet random_phaseless_set(std::mt19937_64& rng, const Window& window, Degree m);

/// Random integer coefficients in [-bound, bound] on the window basis.
SplineFunction random_spline(std::mt19937_64& rng, Degree m, const Window& window, int bound);

/// Random spline that is nonzero and not separable.
SplineFunction random_nonseparable_spline(std::mt19937_64& rng, Degree m, const Window& window);

/// Random separable spline: two nonzero coefficient blocks split by m + 1 zero-gap.
/// Requires window length >= 2.
SplineFunction random_separable_spline(std::mt19937_64& rng, Degree m, const Window& window);

/// Random integer matrix with entries in [-bound, bound].
RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound);

/// n points evenly spaced across the closed window.
std::vector<Rational> probe_grid(const Window& window, int n);

/// phi_m by the truncated power formula (1/m!) sum_k (-1)^k C(m+1,k) (x-k)_+^m.
Rational bspline_truncated_power(int m, const Rational& x);

}  // namespace phaseless::testing
