#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phaseless/linalg.hpp"

namespace phaseless {

/// Signs (s_1, ..., s_N) in {+1, -1} with s_1 = +1.
class SignPattern {
public:
    /// Throws std::invalid_argument on an empty pattern, a first entry other
    /// than +1, or entries outside {+1, -1}.
    explicit SignPattern(std::vector<int> signs);

    /// Pattern of length n whose entry j (j >= 1) is -1 iff bit j-1 of `bits` is set.
    static SignPattern from_bits(std::size_t n, std::uint64_t bits);

    std::size_t size() const noexcept { return signs_.size(); }
    int operator[](std::size_t j) const { return signs_[j]; }
    const std::vector<int>& signs() const noexcept { return signs_; }

    friend bool operator==(const SignPattern&, const SignPattern&) = default;

private:
    std::vector<int> signs_;
};

/// M D_s: column j scaled by s_j. Throws std::invalid_argument on a length mismatch.
RationalMatrix apply_signs(const RationalMatrix& m, const SignPattern& s);

/// Equivalent characterizations of almost phase retrievability for a frame A (n x N).
enum class FrameCriterion {
    DistinctRanges = 2,      // D_s A* R^n pairwise distinct
    DistinctNullSpaces = 3,  // N(A D_s) pairwise distinct
    StackedRank = 4,         // rank(A D_s) < rank [A D_s; A D_s'] for all s != s'
    ComplementRank = 5,      // criterion 4 applied to M with N(M) = range(A*)
};

/// Largest N accepted by the sign-pattern enumeration.
inline constexpr std::size_t kMaxFrameColumns = 14;

/// Throws PreconditionError unless rank(A) = n >= 2, CapacityError when N > 14.
bool is_almost_phase_retrievable(const RationalMatrix& a,
                                 FrameCriterion criterion = FrameCriterion::StackedRank);

/// Rank unchanged by removing any single column.
bool is_weak_full_spark(const RationalMatrix& a);

/// Every n-column submatrix invertible. Throws PreconditionError when N < n.
bool is_full_spark(const RationalMatrix& a);

/// (N - n) x N matrix whose rows span N(A), so that N(M) = range(A*).
RationalMatrix complement_matrix(const RationalMatrix& a);

}  // namespace phaseless
