#include "phaseless/bspline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace phaseless {

Degree::Degree(int m) : m_(m) {
    if (m < 1) {
        throw std::invalid_argument("spline degree must be >= 1, got " + std::to_string(m));
    }
}

Window::Window(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("window requires lo < hi, got [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    }
}

Rational eval_bspline(Degree degree, const Rational& x) {
    const int m = degree.value();
    if (x <= 0 || x >= m + 1) {
        return Rational(0);
    }
    // values[j] holds phi_k(x - j) for j = 0 .. m - k, starting from the
    // half-open indicator phi_0 = chi_[0,1).
    std::vector<Rational> values(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        Rational t = x - j;
        values[j] = (t >= 0 && t < 1) ? Rational(1) : Rational(0);
    }
    for (int k = 1; k <= m; ++k) {
        for (int j = 0; j + k <= m; ++j) {
            Rational t = x - j;
            values[j] = (t * values[j] + (Rational(k + 1) - t) * values[j + 1]) / k;
        }
    }
    return values[0];
}

SplineFunction::SplineFunction(Degree m, std::int64_t start, std::vector<Rational> coeffs,
                               std::optional<Window> window)
    : m_(m), start_(start), coeffs_(std::move(coeffs)), window_(window) {
    if (window_) {
        const auto expected = static_cast<std::size_t>(basis_size(m_, *window_));
        if (start_ != window_->lo() - m_.value() || coeffs_.size() != expected) {
            throw std::invalid_argument(
                "windowed spline needs coefficients for shifts N1-m .. N2-1 (" +
                std::to_string(expected) + " values starting at " +
                std::to_string(window_->lo() - m_.value()) + ")");
        }
    }
}

SplineFunction SplineFunction::on_window(Degree m, const Window& window, std::vector<Rational> coeffs) {
    return SplineFunction(m, window.lo() - m.value(), std::move(coeffs), window);
}

Rational SplineFunction::coeff(std::int64_t n) const {
    if (n < start_ || n > end()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(n - start_)];
}

bool SplineFunction::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

SplineFunction SplineFunction::negated() const {
    std::vector<Rational> flipped(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), flipped.begin(),
                   [](const Rational& c) { return Rational(-c); });
    return SplineFunction(m_, start_, std::move(flipped), window_);
}

Rational eval_spline(const SplineFunction& f, const Rational& x) {
    if (f.window() && !f.window()->contains(x)) {
        return Rational(0);
    }
    const int m = f.degree().value();
    // Only shifts n with x - m - 1 < n < x contribute.
    const std::int64_t lo = std::max(f.start(), floor_to_int(x) - m);
    const std::int64_t hi = std::min(f.end(), ceil_to_int(x) - 1);
    Rational sum(0);
    for (std::int64_t n = lo; n <= hi; ++n) {
        const Rational& c = f.coeffs()[static_cast<std::size_t>(n - f.start())];
        if (c != 0) {
            sum += c * eval_bspline(f.degree(), x - n);
        }
    }
    return sum;
}

namespace {

/// First (i, j) with coeffs[i], coeffs[j] nonzero, zeros strictly between, j - i >= m + 1.
std::optional<std::pair<std::size_t, std::size_t>> first_gap(std::span<const Rational> coeffs, Degree m) {
    std::optional<std::size_t> previous;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) {
            continue;
        }
        if (previous && j - *previous >= static_cast<std::size_t>(m.value()) + 1) {
            return std::make_pair(*previous, j);
        }
        previous = j;
    }
    return std::nullopt;
}

}  // namespace

bool has_separating_gap(std::span<const Rational> coeffs, Degree m) {
    return first_gap(coeffs, m).has_value();
}

bool is_separable(const SplineFunction& f) {
    if (!f.window()) {
        throw std::invalid_argument("separability is defined relative to a restriction window");
    }
    // A gap of m + 1 shifts inside N1-m .. N2-1 already forces N2 - N1 >= 2.
    return f.window()->length() >= 2 && has_separating_gap(f.coeffs(), f.degree());
}

std::optional<std::pair<SplineFunction, SplineFunction>> separable_split(const SplineFunction& f) {
    if (!is_separable(f)) {
        return std::nullopt;
    }
    const std::size_t left_end = first_gap(f.coeffs(), f.degree())->first;
    std::vector<Rational> left(f.coeffs().size()), right(f.coeffs().size());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        (i <= left_end ? left : right)[i] = f.coeffs()[i];
    }
    return std::make_pair(SplineFunction(f.degree(), f.start(), std::move(left), f.window()),
                          SplineFunction(f.degree(), f.start(), std::move(right), f.window()));
}

}  // namespace phaseless
