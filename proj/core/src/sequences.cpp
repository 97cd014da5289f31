#include "phaseless/sequences.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "phaseless/error.hpp"

namespace phaseless {

namespace {

/// Lower bounds of a local characterization, as functions of the window length L.
struct LocalRules {
    std::function<std::int64_t(std::int64_t L, int m)> cardinality;
    std::int64_t first_k;  // boundary conditions range over first_k <= k <= L
    std::function<std::int64_t(std::int64_t k, int m)> boundary;
    std::function<std::int64_t(std::int64_t length, int m)> interior;
};

CertificateReport check_local(const SampleSet& samples, Degree degree, const LocalRules& rules) {
    const int m = degree.value();
    const std::int64_t N1 = samples.window().lo();
    const std::int64_t N2 = samples.window().hi();
    const std::int64_t L = N2 - N1;

    const auto total = static_cast<std::int64_t>(samples.size());
    if (const std::int64_t need = rules.cardinality(L, m); total < need) {
        return CertificateReport::fail({"cardinality", {}, total, need});
    }
    for (std::int64_t length = 1; length <= L; ++length) {
        const std::int64_t need = rules.interior(length, m);
        if (need <= 0) {
            continue;
        }
        for (std::int64_t n1 = N1; n1 + length <= N2; ++n1) {
            const std::int64_t have = count(samples, Interval::open(n1, n1 + length));
            if (have < need) {
                return CertificateReport::fail({"interior", {{"n1", n1}, {"n2", n1 + length}}, have, need});
            }
        }
    }
    for (std::int64_t k = rules.first_k; k <= L; ++k) {
        const std::int64_t need = rules.boundary(k, m);
        const std::int64_t have = count(samples, Interval::closed_open(N1, N1 + k));
        if (have < need) {
            return CertificateReport::fail({"left", {{"k", k}}, have, need});
        }
    }
    for (std::int64_t k = rules.first_k; k <= L; ++k) {
        const std::int64_t need = rules.boundary(k, m);
        const std::int64_t have = count(samples, Interval::open_closed(N2 - k, N2));
        if (have < need) {
            return CertificateReport::fail({"right", {{"k", k}}, have, need});
        }
    }
    return CertificateReport::pass();
}

const LocalRules kSamplingRules{
    [](std::int64_t L, int m) { return L + m; },
    0,
    [](std::int64_t k, int) { return k; },
    [](std::int64_t length, int m) { return length - m; },
};

const LocalRules kAlmostRules{
    [](std::int64_t L, int m) { return L + m + 1; },
    1,
    [](std::int64_t k, int) { return k + 1; },
    [](std::int64_t length, int m) { return length - m + 1; },
};

const LocalRules kPhaselessRules{
    [](std::int64_t L, int m) { return 2 * (L + m) - 1; },
    1,
    [](std::int64_t k, int m) { return 2 * k + m - 1; },
    [](std::int64_t length, int) { return 2 * length - 1; },
};

std::int64_t finite_count(const PeriodicSetDescriptor& set, const Interval& interval) {
    return count(set, interval).value;
}

}  // namespace

CertificateReport is_local_sampling(const SampleSet& samples, Degree m) {
    return check_local(samples, m, kSamplingRules);
}

CertificateReport is_almost_phaseless(const SampleSet& samples, Degree m) {
    return check_local(samples, m, kAlmostRules);
}

CertificateReport is_local_phaseless(const SampleSet& samples, Degree m) {
    return check_local(samples, m, kPhaselessRules);
}

CertificateReport is_global_phaseless(const PeriodicSetDescriptor& set, Degree degree) {
    const int m = degree.value();
    const std::int64_t P = set.period();
    const std::int64_t L = set.edit_window().lo;
    const std::int64_t R = set.edit_window().hi;

    // P1. Beyond the edit window, shifting an endpoint outward by one period adds
    // c >= 2P points and 2P to the bound, so minimal violations either touch
    // [L-P-1, R+P+1] or are short translates of windows starting in (R, R+P].
    // When c < 2P every window of length 2P in the periodic stretch fails.
    const std::int64_t scan_lo = L - 2 * P - 2;
    const std::int64_t scan_hi = R + 2 * P + 2;
    for (std::int64_t length = 1; length <= scan_hi - scan_lo; ++length) {
        const std::int64_t need = 2 * length - 1;
        for (std::int64_t n1 = scan_lo; n1 + length <= scan_hi; ++n1) {
            const std::int64_t have = finite_count(set, Interval::open(n1, n1 + length));
            if (have < need) {
                return CertificateReport::fail({"P1", {{"n1", n1}, {"n2", n1 + length}}, have, need});
            }
        }
    }

    const std::int64_t c = set.points_per_period();
    const std::int64_t periodic_start = R + 1;  // [periodic_start, oo) carries no edits

    if (m >= 2) {
        if (c > 2 * P) {
            return CertificateReport::pass();
        }
        // With c = 2P the excess #[a,b] - 2(b-a) of a closed window in the periodic
        // stretch depends only on a mod P and (b-a) mod P, so one period of starts and
        // lengths 1..2P cover every value. The same windows serve the left side.
        std::int64_t best = std::numeric_limits<std::int64_t>::min();
        for (std::int64_t a = periodic_start; a < periodic_start + P; ++a) {
            for (std::int64_t r = 1; r <= 2 * P; ++r) {
                best = std::max(best, finite_count(set, Interval::closed(a, a + r)) - 2 * r);
            }
        }
        const std::int64_t need = 2 * m - 1;
        if (best >= need) {
            return CertificateReport::pass();
        }
        return CertificateReport::fail({"P2", {{"n0", periodic_start}}, best, need});
    }

    // P2' for m = 1 with b_n = #[n-1, n].
    auto b = [&](std::int64_t n) { return finite_count(set, Interval::closed(n - 1, n)); };
    for (std::int64_t n = periodic_start + 1; n <= periodic_start + P; ++n) {
        if (b(n) >= 3) {
            // Triple intervals recur in both directions; take the two-sided sequence.
            return CertificateReport::pass();
        }
    }
    // Otherwise every triple interval meets the edit window: n in [L, R+1].
    std::vector<std::int64_t> triples;
    std::int64_t best = 0;
    for (std::int64_t n = L; n <= R + 1; ++n) {
        const std::int64_t value = b(n);
        best = std::max(best, value);
        if (value >= 3) {
            triples.push_back(n);
        }
    }
    if (triples.empty()) {
        return CertificateReport::fail({"P2'", {}, best, 3});
    }
    auto exactly_two = [&](std::int64_t n) -> std::optional<CertificateReport> {
        const std::int64_t have = finite_count(set, Interval::open(n, n + 1));
        if (have != 2) {
            return CertificateReport::fail({"P2'", {{"n", n}}, have, 2});
        }
        return std::nullopt;
    };
    for (std::int64_t n = L - 1 - P; n <= triples.front() - 1; ++n) {
        if (auto failure = exactly_two(n)) {
            return *failure;
        }
    }
    for (std::int64_t n = triples.back(); n <= R + 1 + P; ++n) {
        if (auto failure = exactly_two(n)) {
            return *failure;
        }
    }
    return CertificateReport::pass();
}

ExcessValue excess_sup(const PeriodicSetDescriptor& set, std::int64_t n0, Side side) {
    const std::int64_t P = set.period();
    if (set.points_per_period() > 2 * P) {
        return {0, true};
    }
    // Past the edit window the excess changes by c - 2P <= 0 per period, so its
    // supremum is attained within one period beyond max(n0 +- 1, edit window edge).
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    if (side == Side::Right) {
        const std::int64_t last = std::max(n0 + 1, set.edit_window().hi + 1) + P;
        for (std::int64_t n = n0 + 1; n <= last; ++n) {
            best = std::max(best, finite_count(set, Interval::closed(n0, n)) - 2 * (n - n0));
        }
    } else {
        const std::int64_t first = std::min(n0 - 1, set.edit_window().lo - 1) - P;
        for (std::int64_t n = n0 - 1; n >= first; --n) {
            best = std::max(best, finite_count(set, Interval::closed(n, n0)) - 2 * (n0 - n));
        }
    }
    return {best, false};
}

SampleSet extract_minimal_almost(const SampleSet& samples, Degree degree) {
    if (!is_almost_phaseless(samples, degree)) {
        throw PreconditionError("extract_minimal_almost requires an almost phaseless sampling sequence");
    }
    const int m = degree.value();
    const std::int64_t N1 = samples.window().lo();
    const std::int64_t L = samples.window().length();
    const auto target = static_cast<std::size_t>(L + m + 1);

    SampleSet current = samples;
    while (current.size() > target) {
        std::optional<std::size_t> victim;
        if (m >= 2) {
            // l_k = #[N1, N1+k) - k - 1; k0 is the start of the final run of l_k >= 1.
            std::int64_t k0 = L;
            while (k0 > 1 && count(current, Interval::closed_open(N1, N1 + k0 - 1)) - (k0 - 1) - 1 >= 1) {
                --k0;
            }
            const Interval cell = Interval::open(N1 + k0 - 1, N1 + k0);
            for (std::size_t i = 0; i < current.size(); ++i) {
                if (cell.contains(current.points()[i])) {
                    victim = i;
                    break;
                }
            }
        } else {
            // Every condition is a count lower bound, so some single removal keeps
            // the set passing as long as a passing subset of the target size exists.
            for (std::size_t i = 0; i < current.size(); ++i) {
                if (is_almost_phaseless(current.without(i), degree)) {
                    victim = i;
                    break;
                }
            }
        }
        if (!victim) {
            throw InternalError("extract_minimal_almost: no removable point found");
        }
        current = current.without(*victim);
    }
    if (!is_almost_phaseless(current, degree)) {
        throw InternalError("extract_minimal_almost produced a set that is not almost phaseless");
    }
    return current;
}

namespace {

using WindowPair = std::pair<std::int64_t, std::int64_t>;

class SubwindowSearch {
public:
    SubwindowSearch(const SampleSet& samples, Degree m) : samples_(samples), m_(m) {}

    std::optional<WindowPair> run(std::int64_t lo, std::int64_t hi) {
        if (!visited_.insert({lo, hi}).second) {
            return std::nullopt;  // already explored; its result was folded into best_
        }
        const Window window(lo, hi);
        const SampleSet sub = samples_.restricted(window);
        if (static_cast<std::int64_t>(sub.size()) < basis_size(m_, window)) {
            return std::nullopt;
        }
        if (is_local_sampling(sub, m_)) {
            consider({lo, hi});
            return WindowPair{lo, hi};
        }
        const std::int64_t L = hi - lo;
        std::vector<WindowPair> branches;
        // (i) left deficit at k: recurse on [lo+k, hi].
        for (std::int64_t k = 1; k < L; ++k) {
            if (count(sub, Interval::closed_open(lo, lo + k)) < k) {
                branches.push_back({lo + k, hi});
            }
        }
        // (ii) right deficit at k: recurse on [lo, hi-k].
        for (std::int64_t k = 1; k < L; ++k) {
            if (count(sub, Interval::open_closed(hi - k, hi)) < k) {
                branches.push_back({lo, hi - k});
            }
        }
        if (branches.empty()) {
            // (iii) interior deficit on (n1, n2): recurse on either side.
            for (std::int64_t n1 = lo; n1 < hi; ++n1) {
                for (std::int64_t n2 = n1 + 1; n2 <= hi; ++n2) {
                    if (count(sub, Interval::open(n1, n2)) < n2 - n1 - m_.value()) {
                        if (lo < n1) {
                            branches.push_back({lo, n1});
                        }
                        if (n2 < hi) {
                            branches.push_back({n2, hi});
                        }
                    }
                }
            }
        }
        for (const WindowPair& branch : branches) {
            run(branch.first, branch.second);
        }
        return best_;
    }

    const std::optional<WindowPair>& best() const { return best_; }

private:
    void consider(const WindowPair& candidate) {
        if (!best_ || candidate < *best_) {
            best_ = candidate;
        }
    }

    const SampleSet& samples_;
    Degree m_;
    std::set<WindowPair> visited_;
    std::optional<WindowPair> best_;
};

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> find_sampling_subwindow(const SampleSet& samples, Degree m) {
    const Window& window = samples.window();
    if (static_cast<std::int64_t>(samples.size()) < basis_size(m, window)) {
        return std::nullopt;
    }
    SubwindowSearch search(samples, m);
    search.run(window.lo(), window.hi());
    if (!search.best()) {
        throw InternalError("find_sampling_subwindow: case split reached no sampling window");
    }
    return search.best();
}

}  // namespace phaseless
