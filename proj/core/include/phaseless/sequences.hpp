#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "phaseless/bspline.hpp"
#include "phaseless/sample_set.hpp"

namespace phaseless {

/// The first failed inequality of a certifier.
///
/// Condition identifiers: "cardinality", "left" (param k), "right" (param k),
/// "interior" (params n1, n2), "P1" (n1, n2), "P2" (n0), "P2'" (n, when a tail
/// interval does not hold exactly two points; absent when no triple interval exists).
struct Violation {
    std::string condition;
    std::map<std::string, std::int64_t> params;
    std::int64_t observed = 0;
    std::int64_t required = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct CertificateReport {
    bool verdict = true;
    std::optional<Violation> violated;

    static CertificateReport pass() { return {true, std::nullopt}; }
    static CertificateReport fail(Violation v) { return {false, std::move(v)}; }

    explicit operator bool() const noexcept { return verdict; }
    friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

// Local certifiers on E inside [N1, N2], with L = N2 - N1. Conditions are checked
// in a fixed order and the first failure is reported: cardinality, then interior
// windows (n1, n2) by increasing length and then n1, then left windows [N1, N1+k)
// by increasing k, then right windows (N2-k, N2] by increasing k.

/// Sampling sequence for V_m|[N1,N2]:
///   #E >= L+m,  #[N1,N1+k) >= k,  #(N2-k,N2] >= k,  #(n1,n2) >= n2-n1-m.
CertificateReport is_local_sampling(const SampleSet& samples, Degree m);

/// Almost phaseless sampling sequence:
///   #E >= L+m+1,  #[N1,N1+k) >= k+1,  #(N2-k,N2] >= k+1 (1 <= k <= L),  #(n1,n2) >= n2-n1-m+1.
CertificateReport is_almost_phaseless(const SampleSet& samples, Degree m);

/// Phaseless sampling sequence:
///   #E >= 2(L+m)-1,  #[N1,N1+k) >= 2k+m-1,  #(N2-k,N2] >= 2k+m-1,  #(n1,n2) >= 2(n2-n1)-1.
CertificateReport is_local_phaseless(const SampleSet& samples, Degree m);

/// Phaseless sampling on the whole line for an eventually periodic set.
///
/// P1: #(n1,n2) >= 2(n2-n1)-1 for all integers n1 < n2.
/// P2 (m >= 2): for every n0 there are closed windows on both sides of n0 with
///     #[a,b] >= 2(b-a+m)-1.
/// P2' (m = 1): the integers n with #[n-1,n] >= 3 form a nonempty sequence and,
///     when that sequence is bounded on a side, every unit open interval beyond
///     it on that side holds exactly two points.
/// P1 is reported before P2/P2'.
CertificateReport is_global_phaseless(const PeriodicSetDescriptor& set, Degree m);

enum class Side { Left, Right };

/// Integer or +infinity. Unlike a count the value may be negative.
struct ExcessValue {
    std::int64_t value = 0;
    bool infinite = false;
    friend bool operator==(const ExcessValue&, const ExcessValue&) = default;
};

/// Right: sup over n > n0 of #[n0,n] - 2(n-n0). Left: sup over n < n0 of #[n,n0] - 2(n0-n).
/// Infinite exactly when the periodic part holds more than 2P points per period.
ExcessValue excess_sup(const PeriodicSetDescriptor& set, std::int64_t n0, Side side);

/// Subset of an almost phaseless E with exactly L+m+1 points that is still almost
/// phaseless. Throws PreconditionError when E itself fails.
SampleSet extract_minimal_almost(const SampleSet& samples, Degree m);

/// Integers N1 <= n1 < n2 <= N2 such that the points of E in [n1, n2] form a
/// sampling sequence for V_m|[n1,n2]. The lexicographically smallest window reached
/// by the case split (left deficit, right deficit, interior deficit) is returned.
/// None exactly when #E < L+m.
std::optional<std::pair<std::int64_t, std::int64_t>> find_sampling_subwindow(const SampleSet& samples, Degree m);

}  // namespace phaseless
