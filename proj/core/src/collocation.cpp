#include "phaseless/collocation.hpp"

#include <algorithm>
#include <stdexcept>

namespace phaseless {

RationalMatrix collocation_entries(std::span<const Rational> points, Degree m, const Window& window) {
    const auto rows = static_cast<std::size_t>(basis_size(m, window));
    const std::int64_t first_shift = window.lo() - m.value();
    RationalMatrix out(rows, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        // phi_m(x - n) != 0 only for x - m - 1 < n < x.
        const std::int64_t lo = std::max(first_shift, floor_to_int(points[j]) - m.value());
        const std::int64_t hi = std::min(window.hi() - 1, ceil_to_int(points[j]) - 1);
        for (std::int64_t n = lo; n <= hi; ++n) {
            out(static_cast<std::size_t>(n - first_shift), j) = eval_bspline(m, points[j] - n);
        }
    }
    return out;
}

CollocationMatrix build_collocation(const SampleSet& samples, Degree m) {
    CollocationMatrix out;
    out.entries = collocation_entries(samples.points(), m, samples.window());
    for (std::int64_t n = samples.window().lo() - m.value(); n < samples.window().hi(); ++n) {
        out.row_shifts.push_back(n);
    }
    out.col_points = samples.points();
    return out;
}

bool schoenberg_whitney(Degree m, std::span<const std::int64_t> shifts, std::span<const Rational> points) {
    if (shifts.size() != points.size()) {
        throw std::invalid_argument("schoenberg_whitney: shifts and points differ in length");
    }
    for (std::size_t i = 1; i < shifts.size(); ++i) {
        if (shifts[i - 1] >= shifts[i] || !(points[i - 1] < points[i])) {
            throw std::invalid_argument("schoenberg_whitney: shifts and points must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (eval_bspline(m, points[i] - shifts[i]) == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace phaseless
