#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "phaseless/bspline.hpp"
#include "phaseless/rational.hpp"

namespace phaseless {

/// One endpoint of an interval on the real line.
struct Bound {
    Rational value;
    bool closed;
};

/// Interval with explicit endpoint inclusion; a missing bound means +-infinity.
struct Interval {
    std::optional<Bound> lo;
    std::optional<Bound> hi;

    static Interval closed(const Rational& a, const Rational& b) { return {Bound{a, true}, Bound{b, true}}; }
    static Interval open(const Rational& a, const Rational& b) { return {Bound{a, false}, Bound{b, false}}; }
    /// [a, b)
    static Interval closed_open(const Rational& a, const Rational& b) { return {Bound{a, true}, Bound{b, false}}; }
    /// (a, b]
    static Interval open_closed(const Rational& a, const Rational& b) { return {Bound{a, false}, Bound{b, true}}; }

    bool contains(const Rational& x) const;
    bool bounded() const noexcept { return lo.has_value() && hi.has_value(); }
};

/// Sorted finite set of distinct sample points inside an integer window [N1, N2].
class SampleSet {
public:
    /// Points must be strictly increasing and lie in the window.
    SampleSet(Window window, std::vector<Rational> points);
    /// Sorts; rejects duplicates and points outside the window.
    static SampleSet from_unsorted(Window window, std::vector<Rational> points);

    const Window& window() const noexcept { return window_; }
    const std::vector<Rational>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    /// Points in the closed sub-window [lo, hi], carried on that window.
    SampleSet restricted(const Window& sub) const;
    /// Copy without the point at `index`.
    SampleSet without(std::size_t index) const;

    friend bool operator==(const SampleSet&, const SampleSet&) = default;

private:
    Window window_;
    std::vector<Rational> points_;
};

/// Nonnegative count that may be +infinity.
struct ExtendedInt {
    std::int64_t value = 0;
    bool infinite = false;

    static ExtendedInt infinity() { return {0, true}; }
    static ExtendedInt finite(std::int64_t v) { return {v, false}; }
    friend bool operator==(const ExtendedInt&, const ExtendedInt&) = default;
};

/// Inclusive integer range [lo, hi], lo <= hi. Used for the edit window of a descriptor.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct Edit {
    enum class Kind { Add, Remove };
    Kind kind;
    Rational point;
    friend bool operator==(const Edit&, const Edit&) = default;
};

/// Finite description of an infinite point set:
///   { o + kP : o in offsets, k in Z }  plus added points, minus removed points,
/// with every edit confined to the integer range [L, R].
class PeriodicSetDescriptor {
public:
    PeriodicSetDescriptor(std::int64_t period, std::vector<Rational> offsets, std::vector<Edit> edits = {},
                          IntRange edit_window = {});

    std::int64_t period() const noexcept { return period_; }
    const std::vector<Rational>& offsets() const noexcept { return offsets_; }
    const std::vector<Edit>& edits() const noexcept { return edits_; }
    const IntRange& edit_window() const noexcept { return edit_window_; }

    /// Points of the periodic part per period.
    std::int64_t points_per_period() const noexcept { return static_cast<std::int64_t>(offsets_.size()); }
    bool generates(const Rational& x) const;  // periodic part only
    bool contains(const Rational& x) const;   // after edits

    /// All points of the set inside a bounded interval, sorted.
    std::vector<Rational> points_in(const Interval& interval) const;

    friend bool operator==(const PeriodicSetDescriptor&, const PeriodicSetDescriptor&) = default;

private:
    std::int64_t period_;
    std::vector<Rational> offsets_;
    std::vector<Edit> edits_;
    IntRange edit_window_;
};

/// #(E cap interval).
std::int64_t count(const SampleSet& samples, const Interval& interval);
std::int64_t count(std::span<const Rational> sorted_points, const Interval& interval);
/// Infinite exactly when the interval is unbounded and the periodic part is nonempty.
ExtendedInt count(const PeriodicSetDescriptor& set, const Interval& interval);

}  // namespace phaseless
