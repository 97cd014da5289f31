#include "phaseless/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace phaseless {

SampleSet uniform_grid(const Window& window, std::int64_t k) {
    if (k < 2) {
        throw std::invalid_argument("uniform grid needs K >= 2");
    }
    std::vector<Rational> points;
    for (std::int64_t i = 1; i <= k; ++i) {
        points.push_back(Rational(window.lo()) + Rational(i - 1, k - 1) * window.length());
    }
    return SampleSet(window, std::move(points));
}

SampleSet example2_set(const Window& window, Degree m, std::int64_t k) {
    if (window.length() <= 2) {
        throw std::invalid_argument("example2 needs N1 < N2 - 2");
    }
    if (k < 2) {
        throw std::invalid_argument("example2 needs K >= 2");
    }
    std::vector<Rational> points;
    for (std::int64_t i = 1; i <= k; ++i) {
        points.push_back(Rational(window.lo() + 1) + Rational(i - 1, k - 1) * (window.length() - 2));
    }
    for (int i = 0; i <= m.value(); ++i) {
        points.push_back(Rational(window.lo()) + Rational(i, m.value() + 1));
        points.push_back(Rational(window.hi()) - Rational(i, m.value() + 1));
    }
    return SampleSet::from_unsorted(window, std::move(points));
}

PeriodicSetDescriptor arithmetic_progression(const Rational& alpha, const Rational& beta) {
    if (alpha <= 0) {
        throw std::invalid_argument("arithmetic progression needs alpha > 0");
    }
    if (beta < 0) {
        throw std::invalid_argument("arithmetic progression needs beta >= 0");
    }
    const Integer p = boost::multiprecision::numerator(alpha);
    const Integer q = boost::multiprecision::denominator(alpha);
    if (p > 1000000 || q > 1000000) {
        throw std::invalid_argument("arithmetic progression step has too large a numerator or denominator");
    }
    const auto period = p.convert_to<std::int64_t>();
    const auto count = q.convert_to<std::int64_t>();
    std::vector<Rational> offsets;
    for (std::int64_t k = 0; k < count; ++k) {
        const Rational x = alpha * k + beta;
        offsets.push_back(x - Rational(period) * floor_to_int(x / period));
    }
    std::sort(offsets.begin(), offsets.end());
    return PeriodicSetDescriptor(period, std::move(offsets));
}

}  // namespace phaseless
