#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "phaseless/rational.hpp"

namespace phaseless {

/// Degree m >= 1 of the cardinal B-spline phi_m = chi_[0,1] * ... * chi_[0,1] (m+1 factors).
class Degree {
public:
    explicit Degree(int m);
    int value() const noexcept { return m_; }
    friend bool operator==(Degree, Degree) = default;

private:
    int m_;
};

/// Integer window [lo, hi] with lo < hi.
class Window {
public:
    Window(std::int64_t lo, std::int64_t hi);
    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept { return hi_; }
    std::int64_t length() const noexcept { return hi_ - lo_; }
    bool contains(const Rational& x) const { return x >= lo_ && x <= hi_; }
    friend bool operator==(const Window&, const Window&) = default;

private:
    std::int64_t lo_;
    std::int64_t hi_;
};

/// Number of shifts spanning V_m restricted to `window`: hi - lo + m.
inline std::int64_t basis_size(Degree m, const Window& window) {
    return window.length() + m.value();
}

/// phi_m(x), exact. Zero outside (0, m+1), strictly positive inside.
Rational eval_bspline(Degree m, const Rational& x);

/// Finite combination sum_n c_n phi_m(. - n), optionally restricted to a window.
///
/// Coefficients occupy the contiguous index range start .. start + coeffs.size() - 1.
/// When a window [N1, N2] is attached the range must be exactly N1 - m .. N2 - 1,
/// i.e. the coefficients are coordinates in the basis of V_m|[N1, N2].
class SplineFunction {
public:
    SplineFunction(Degree m, std::int64_t start, std::vector<Rational> coeffs,
                   std::optional<Window> window = std::nullopt);

    /// Spline on `window` with coefficients for shifts window.lo() - m .. window.hi() - 1.
    static SplineFunction on_window(Degree m, const Window& window, std::vector<Rational> coeffs);

    Degree degree() const noexcept { return m_; }
    std::int64_t start() const noexcept { return start_; }
    /// Index of the last coefficient. Equals start() - 1 for an empty sequence.
    std::int64_t end() const noexcept { return start_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const std::optional<Window>& window() const noexcept { return window_; }

    /// c_n, zero outside the stored range.
    Rational coeff(std::int64_t n) const;

    bool is_zero() const;
    SplineFunction negated() const;

    friend bool operator==(const SplineFunction&, const SplineFunction&) = default;

private:
    Degree m_;
    std::int64_t start_;
    std::vector<Rational> coeffs_;
    std::optional<Window> window_;
};

/// sum_n c_n phi_m(x - n), times the indicator of the closed window when one is attached.
Rational eval_spline(const SplineFunction& f, const Rational& x);

/// True iff some internal run of zero coefficients separates two nonzero ones by
/// a shift distance of at least m + 1. Throws std::invalid_argument without a window.
bool is_separable(const SplineFunction& f);

/// Same test on a bare coefficient vector over consecutive shifts.
bool has_separating_gap(std::span<const Rational> coeffs, Degree m);

/// For a separable f, the two coefficient blocks on either side of the first
/// separating gap. Their product vanishes identically and they sum to f.
std::optional<std::pair<SplineFunction, SplineFunction>> separable_split(const SplineFunction& f);

}  // namespace phaseless
