#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "phaseless/bspline.hpp"
#include "phaseless/linalg.hpp"
#include "phaseless/sample_set.hpp"

namespace phaseless {

/// Phi = [phi_m(x_j - n)], rows indexed by shifts n = N1-m .. N2-1, columns by sample points.
struct CollocationMatrix {
    RationalMatrix entries;
    std::vector<std::int64_t> row_shifts;
    std::vector<Rational> col_points;
};

CollocationMatrix build_collocation(const SampleSet& samples, Degree m);

/// Same matrix for an arbitrary list of points against the shifts of `window`.
RationalMatrix collocation_entries(std::span<const Rational> points, Degree m, const Window& window);

/// Invertibility of [phi_m(t_i - n_j)] via the diagonal support criterion
/// phi_m(t_i - n_i) != 0 for all i. Shifts and points must be strictly increasing
/// and of equal length (std::invalid_argument otherwise).
bool schoenberg_whitney(Degree m, std::span<const std::int64_t> shifts, std::span<const Rational> points);

}  // namespace phaseless
