#include "phaseless/sample_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace phaseless {

bool Interval::contains(const Rational& x) const {
    if (lo && (lo->closed ? x < lo->value : x <= lo->value)) {
        return false;
    }
    if (hi && (hi->closed ? x > hi->value : x >= hi->value)) {
        return false;
    }
    return true;
}

SampleSet::SampleSet(Window window, std::vector<Rational> points) : window_(window), points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!window_.contains(points_[i])) {
            throw std::invalid_argument("sample point " + format_rational(points_[i]) + " outside window [" +
                                        std::to_string(window_.lo()) + ", " + std::to_string(window_.hi()) + "]");
        }
        if (i > 0 && !(points_[i - 1] < points_[i])) {
            throw std::invalid_argument("sample points must be strictly increasing");
        }
    }
}

SampleSet SampleSet::from_unsorted(Window window, std::vector<Rational> points) {
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
        throw std::invalid_argument("duplicate sample point");
    }
    return SampleSet(window, std::move(points));
}

SampleSet SampleSet::restricted(const Window& sub) const {
    std::vector<Rational> kept;
    for (const Rational& x : points_) {
        if (sub.contains(x)) {
            kept.push_back(x);
        }
    }
    return SampleSet(sub, std::move(kept));
}

SampleSet SampleSet::without(std::size_t index) const {
    std::vector<Rational> kept = points_;
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(index));
    return SampleSet(window_, std::move(kept));
}

std::int64_t count(std::span<const Rational> sorted_points, const Interval& interval) {
    auto first = sorted_points.begin();
    auto last = sorted_points.end();
    if (interval.lo) {
        first = interval.lo->closed ? std::lower_bound(first, last, interval.lo->value)
                                    : std::upper_bound(first, last, interval.lo->value);
    }
    if (interval.hi) {
        last = interval.hi->closed ? std::upper_bound(first, last, interval.hi->value)
                                   : std::lower_bound(first, last, interval.hi->value);
    }
    return first < last ? static_cast<std::int64_t>(last - first) : 0;
}

std::int64_t count(const SampleSet& samples, const Interval& interval) {
    return count(std::span<const Rational>(samples.points()), interval);
}

PeriodicSetDescriptor::PeriodicSetDescriptor(std::int64_t period, std::vector<Rational> offsets,
                                             std::vector<Edit> edits, IntRange edit_window)
    : period_(period), offsets_(std::move(offsets)), edits_(std::move(edits)), edit_window_(edit_window) {
    if (period_ < 1) {
        throw std::invalid_argument("descriptor period must be a positive integer");
    }
    if (edit_window_.lo > edit_window_.hi) {
        throw std::invalid_argument("descriptor edit window requires L <= R");
    }
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        if (offsets_[i] < 0 || offsets_[i] >= period_) {
            throw std::invalid_argument("offset " + format_rational(offsets_[i]) + " outside [0, period)");
        }
        if (i > 0 && !(offsets_[i - 1] < offsets_[i])) {
            throw std::invalid_argument("offsets must be sorted and distinct");
        }
    }
    std::vector<Rational> added, removed;
    for (const Edit& e : edits_) {
        if (e.point < edit_window_.lo || e.point > edit_window_.hi) {
            throw std::invalid_argument("edit point " + format_rational(e.point) + " outside the edit window");
        }
        if (e.kind == Edit::Kind::Add) {
            if (generates(e.point)) {
                throw std::invalid_argument("added point " + format_rational(e.point) +
                                            " is already generated by the periodic part");
            }
            added.push_back(e.point);
        } else {
            if (!generates(e.point)) {
                throw std::invalid_argument("removed point " + format_rational(e.point) +
                                            " is not generated by the periodic part");
            }
            removed.push_back(e.point);
        }
    }
    for (auto* list : {&added, &removed}) {
        std::sort(list->begin(), list->end());
        if (std::adjacent_find(list->begin(), list->end()) != list->end()) {
            throw std::invalid_argument("duplicate edit point");
        }
    }
}

bool PeriodicSetDescriptor::generates(const Rational& x) const {
    // x = o + kP with o in [0, P) means o = x - P * floor(x / P).
    const Rational reduced = x - Rational(period_) * floor_to_int(x / period_);
    return std::binary_search(offsets_.begin(), offsets_.end(), reduced);
}

bool PeriodicSetDescriptor::contains(const Rational& x) const {
    for (const Edit& e : edits_) {
        if (e.point == x) {
            return e.kind == Edit::Kind::Add;
        }
    }
    return generates(x);
}

namespace {

/// Number of integers k with o + kP inside the bounded interval.
std::int64_t periodic_hits(const Rational& offset, std::int64_t period, const Interval& interval) {
    const Rational lo = (interval.lo->value - offset) / period;
    const Rational hi = (interval.hi->value - offset) / period;
    const std::int64_t k_lo = interval.lo->closed ? ceil_to_int(lo) : floor_to_int(lo) + 1;
    const std::int64_t k_hi = interval.hi->closed ? floor_to_int(hi) : ceil_to_int(hi) - 1;
    return k_hi >= k_lo ? k_hi - k_lo + 1 : 0;
}

}  // namespace

ExtendedInt count(const PeriodicSetDescriptor& set, const Interval& interval) {
    std::int64_t edits = 0;
    for (const Edit& e : set.edits()) {
        if (interval.contains(e.point)) {
            edits += e.kind == Edit::Kind::Add ? 1 : -1;
        }
    }
    if (!interval.bounded()) {
        if (!set.offsets().empty()) {
            return ExtendedInt::infinity();
        }
        return ExtendedInt::finite(edits);
    }
    std::int64_t total = edits;
    for (const Rational& o : set.offsets()) {
        total += periodic_hits(o, set.period(), interval);
    }
    return ExtendedInt::finite(std::max<std::int64_t>(total, 0));
}

std::vector<Rational> PeriodicSetDescriptor::points_in(const Interval& interval) const {
    if (!interval.bounded()) {
        throw std::invalid_argument("points_in needs a bounded interval");
    }
    std::vector<Rational> out;
    for (const Rational& o : offsets_) {
        const Rational lo = (interval.lo->value - o) / period_;
        const Rational hi = (interval.hi->value - o) / period_;
        const std::int64_t k_lo = interval.lo->closed ? ceil_to_int(lo) : floor_to_int(lo) + 1;
        const std::int64_t k_hi = interval.hi->closed ? floor_to_int(hi) : ceil_to_int(hi) - 1;
        for (std::int64_t k = k_lo; k <= k_hi; ++k) {
            Rational x = o + Rational(k * period_);
            if (contains(x)) {
                out.push_back(std::move(x));
            }
        }
    }
    for (const Edit& e : edits_) {
        if (e.kind == Edit::Kind::Add && interval.contains(e.point)) {
            out.push_back(e.point);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace phaseless
