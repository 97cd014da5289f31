#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "phaseless/generators.hpp"
#include "phaseless/sequences.hpp"

namespace phaseless {
namespace {

using testing::q;
using testing::qs;

// Brute-force count of a descriptor on a bounded interval: enumerate o + jP
// for a generous j range and apply the edits by hand.
std::int64_t brute_count(const PeriodicSetDescriptor& d, const Interval& iv) {
    const Rational lo = iv.lo->value;
    const Rational hi = iv.hi->value;
    const std::int64_t P = d.period();
    const std::int64_t jlo = floor_to_int(lo / P) - 1;
    const std::int64_t jhi = ceil_to_int(hi / P) + 1;
    std::int64_t total = 0;
    for (const Rational& o : d.offsets()) {
        for (std::int64_t j = jlo; j <= jhi; ++j) {
            const Rational x = o + Rational(j * P);
            if (!iv.contains(x)) continue;
            const bool removed = std::any_of(d.edits().begin(), d.edits().end(), [&](const Edit& e) {
                return e.kind == Edit::Kind::Remove && e.point == x;
            });
            total += removed ? 0 : 1;
        }
    }
    for (const Edit& e : d.edits()) {
        if (e.kind == Edit::Kind::Add && iv.contains(e.point)) ++total;
    }
    return total;
}

// Random descriptor: offsets on the 1/4 grid of [0, P) with about 2P points,
// a few edits on the 1/8 grid of [L, R].
PeriodicSetDescriptor random_descriptor(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> period_dist(1, 3);
    const std::int64_t P = period_dist(rng);
    std::vector<Rational> pool;
    for (std::int64_t j = 0; j < 4 * P; ++j) pool.push_back(Rational(j, 4));
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<int> delta(-1, 1);
    const auto c = static_cast<std::size_t>(std::max<std::int64_t>(1, 2 * P + delta(rng)));
    std::vector<Rational> offsets(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(c));
    std::sort(offsets.begin(), offsets.end());

    std::uniform_int_distribution<int> edge(-2, 2);
    std::int64_t L = edge(rng);
    std::int64_t R = edge(rng);
    if (L > R) std::swap(L, R);
    const PeriodicSetDescriptor plain(P, offsets, {}, IntRange{L, R});
    std::vector<Edit> edits;
    std::uniform_int_distribution<int> edit_count(0, 3);
    std::uniform_int_distribution<std::int64_t> where(8 * L, 8 * R);
    for (int i = edit_count(rng); i > 0; --i) {
        const Rational x(where(rng), 8);
        const bool taken = std::any_of(edits.begin(), edits.end(), [&](const Edit& e) { return e.point == x; });
        if (taken) continue;
        edits.push_back(Edit{plain.generates(x) ? Edit::Kind::Remove : Edit::Kind::Add, x});
    }
    return PeriodicSetDescriptor(P, offsets, edits, IntRange{L, R});
}

std::int64_t span_of(const PeriodicSetDescriptor& d) {
    return 12 * d.period() + 6;
}

bool brute_p1(const PeriodicSetDescriptor& d) {
    const std::int64_t lo = d.edit_window().lo - span_of(d);
    const std::int64_t hi = d.edit_window().hi + span_of(d);
    for (std::int64_t n1 = lo; n1 < hi; ++n1) {
        for (std::int64_t n2 = n1 + 1; n2 <= hi; ++n2) {
            if (brute_count(d, Interval::open(n1, n2)) < 2 * (n2 - n1) - 1) return false;
        }
    }
    return true;
}

// For every n0 near the edits, closed windows [a, b] with excess >= 2m - 1 on
// both sides of n0. Far from the edits the set is periodic and the check repeats.
bool brute_p2(const PeriodicSetDescriptor& d, int m) {
    const std::int64_t reach = span_of(d);
    for (std::int64_t n0 = d.edit_window().lo - 2 * d.period() - 2; n0 <= d.edit_window().hi + 2 * d.period() + 2;
         ++n0) {
        auto good = [&](std::int64_t a, std::int64_t b) {
            return brute_count(d, Interval::closed(a, b)) >= 2 * (b - a + m) - 1;
        };
        bool right = false;
        bool left = false;
        for (std::int64_t a = n0; a < n0 + reach && !right; ++a) {
            for (std::int64_t b = a + 1; b <= n0 + reach && !right; ++b) right = good(a, b);
        }
        for (std::int64_t b = n0; b > n0 - reach && !left; --b) {
            for (std::int64_t a = b - 1; a >= n0 - reach && !left; --a) left = good(a, b);
        }
        if (!left || !right) return false;
    }
    return true;
}

// P2' read literally: the triple integers n (#[n-1, n] >= 3) form a nonempty
// sequence, and on a side where it stops every open unit interval beyond holds two points.
bool brute_p2_prime(const PeriodicSetDescriptor& d) {
    const std::int64_t L = d.edit_window().lo;
    const std::int64_t R = d.edit_window().hi;
    const std::int64_t lo = L - span_of(d);
    const std::int64_t hi = R + span_of(d);
    std::vector<std::int64_t> triples;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (brute_count(d, Interval::closed(n - 1, n)) >= 3) triples.push_back(n);
    }
    if (triples.empty()) return false;
    // A triple clear of the edits recurs with the period on that side and, since both
    // tails share the periodic part, on the other side too.
    const bool unbounded = std::any_of(triples.begin(), triples.end(),
                                       [&](std::int64_t n) { return n <= L - 1 || n - 1 >= R + 1; });
    if (unbounded) return true;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (n >= triples.front() && n <= triples.back() - 1) continue;
        if (brute_count(d, Interval::open(n, n + 1)) != 2) return false;
    }
    return true;
}

TEST(IsGlobalPhaseless, SpecExamples) {
    EXPECT_TRUE(is_global_phaseless(arithmetic_progression(q("1/3"), q("0")), Degree(2)).verdict);
    EXPECT_TRUE(is_global_phaseless(arithmetic_progression(q("1/2"), q("0")), Degree(1)).verdict);
    EXPECT_FALSE(is_global_phaseless(arithmetic_progression(q("1/2"), q("0")), Degree(2)).verdict);
    EXPECT_TRUE(is_global_phaseless(arithmetic_progression(q("2/5"), q("1/10")), Degree(2)).verdict);
    EXPECT_FALSE(is_global_phaseless(arithmetic_progression(q("1/2"), q("1/4")), Degree(1)).verdict);
    EXPECT_FALSE(is_global_phaseless(arithmetic_progression(q("3/5"), q("0")), Degree(2)).verdict);
}

// The arithmetic family n*alpha + beta, alpha > beta >= 0: phaseless iff alpha < 1/2,
// plus alpha = 1/2 with beta = 0 when m = 1.
TEST(IsGlobalPhaseless, ArithmeticFamilySweep) {
    int cases = 0;
    for (int den = 1; den <= 7; ++den) {
        for (int num = 1; num < 2 * den; ++num) {
            const Rational alpha(num, den);
            for (const Rational& beta : qs({"0", "1/9", "1/5", "1/3"})) {
                if (!(beta < alpha) || boost::multiprecision::denominator(alpha) != den) continue;
                for (int mv = 1; mv <= 3; ++mv) {
                    const bool expected = alpha < q("1/2") || (alpha == q("1/2") && beta == 0 && mv == 1);
                    const CertificateReport r = is_global_phaseless(arithmetic_progression(alpha, beta), Degree(mv));
                    EXPECT_EQ(r.verdict, expected)
                        << "alpha=" << format_rational(alpha) << " beta=" << format_rational(beta) << " m=" << mv;
                    ++cases;
                }
            }
        }
    }
    EXPECT_GT(cases, 100);
}

TEST(IsGlobalPhaseless, ReportsP1Window) {
    const CertificateReport r = is_global_phaseless(arithmetic_progression(q("3/5"), q("0")), Degree(2));
    ASSERT_TRUE(r.violated);
    EXPECT_EQ(r.violated->condition, "P1");
    const std::int64_t n1 = r.violated->params.at("n1");
    const std::int64_t n2 = r.violated->params.at("n2");
    const PeriodicSetDescriptor d = arithmetic_progression(q("3/5"), q("0"));
    EXPECT_EQ(brute_count(d, Interval::open(n1, n2)), r.violated->observed);
    EXPECT_LT(r.violated->observed, 2 * (n2 - n1) - 1);
}

TEST(IsGlobalPhaseless, ReportsP2AndP2Prime) {
    const CertificateReport p2 = is_global_phaseless(arithmetic_progression(q("1/2"), q("0")), Degree(2));
    ASSERT_TRUE(p2.violated);
    EXPECT_EQ(p2.violated->condition, "P2");
    EXPECT_EQ(p2.violated->observed, 1);
    EXPECT_EQ(p2.violated->required, 3);

    const CertificateReport p2p = is_global_phaseless(arithmetic_progression(q("1/2"), q("1/4")), Degree(1));
    ASSERT_TRUE(p2p.violated);
    EXPECT_EQ(p2p.violated->condition, "P2'");
}

TEST(IsGlobalPhaseless, SingleTripleNeedsTwoPointTails) {
    // Adding 0 to the lattice 1/4 + Z/2 makes [-1,0] and [0,1] triples; every open
    // unit interval still holds exactly two points.
    const PeriodicSetDescriptor with_triple(1, qs({"1/4", "3/4"}), {Edit{Edit::Kind::Add, q("0")}}, IntRange{0, 0});
    EXPECT_TRUE(is_global_phaseless(with_triple, Degree(1)).verdict);
    EXPECT_TRUE(brute_p1(with_triple));
    EXPECT_TRUE(brute_p2_prime(with_triple));
}

TEST(IsGlobalPhaseless, AgreesWithBruteForceOnRandomDescriptors) {
    std::mt19937_64 rng(41);
    int p1_pass = 0;
    int full_pass = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const PeriodicSetDescriptor d = random_descriptor(rng);
        const bool p1 = brute_p1(d);
        for (int mv = 1; mv <= 3; ++mv) {
            const CertificateReport r = is_global_phaseless(d, Degree(mv));
            const bool reported_p1 = r.violated && r.violated->condition == "P1";
            ASSERT_EQ(!reported_p1, p1) << "trial " << trial;
            if (!p1) continue;
            ++p1_pass;
            const bool second = mv == 1 ? brute_p2_prime(d) : brute_p2(d, mv);
            EXPECT_EQ(r.verdict, second) << "trial " << trial << " m=" << mv;
            full_pass += r.verdict ? 1 : 0;
        }
    }
    EXPECT_GT(p1_pass, 20);
    EXPECT_GT(full_pass, 5);
}

// P1 restricted to any window of a passing descriptor holds by direct counting.
TEST(IsGlobalPhaseless, PassingDescriptorsSatisfyLocalInteriorCounts) {
    std::mt19937_64 rng(42);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 20; ++trial) {
        const PeriodicSetDescriptor d = random_descriptor(rng);
        if (!is_global_phaseless(d, Degree(2)).verdict) continue;
        ++checked;
        for (std::int64_t n1 = -6; n1 < 6; ++n1) {
            for (std::int64_t n2 = n1 + 1; n2 <= 6; ++n2) {
                EXPECT_GE(brute_count(d, Interval::open(n1, n2)), 2 * (n2 - n1) - 1);
            }
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(ExcessSup, SpecExamples) {
    const PeriodicSetDescriptor two(1, qs({"1/4", "3/4"}));
    EXPECT_EQ(excess_sup(two, 0, Side::Right), (ExcessValue{0, false}));
    EXPECT_EQ(excess_sup(two, 0, Side::Left), (ExcessValue{0, false}));

    const PeriodicSetDescriptor three(1, qs({"1/4", "1/2", "3/4"}));
    EXPECT_TRUE(excess_sup(three, 0, Side::Right).infinite);

    const PeriodicSetDescriptor sparse(2, qs({"1/2", "1", "3/2"}));
    const ExcessValue v = excess_sup(sparse, 0, Side::Right);
    EXPECT_FALSE(v.infinite);
    EXPECT_EQ(v.value, 0);
}

TEST(ExcessSup, MatchesBruteForceScan) {
    std::mt19937_64 rng(43);
    int finite = 0;
    int infinite = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const PeriodicSetDescriptor d = random_descriptor(rng);
        const std::int64_t P = d.period();
        for (std::int64_t n0 : {d.edit_window().lo - 3, std::int64_t{0}, d.edit_window().hi + 2}) {
            for (Side side : {Side::Right, Side::Left}) {
                const int dir = side == Side::Right ? 1 : -1;
                auto excess = [&](std::int64_t n) {
                    const Interval iv = dir > 0 ? Interval::closed(n0, n) : Interval::closed(n, n0);
                    return brute_count(d, iv) - 2 * dir * (n - n0);
                };
                const ExcessValue v = excess_sup(d, n0, side);
                // Limit form: the excess along n0 + k P grows without bound iff it is infinite.
                const std::int64_t far = excess(n0 + dir * 40 * P);
                const std::int64_t farther = excess(n0 + dir * 80 * P);
                EXPECT_EQ(v.infinite, farther > far);
                if (v.infinite) {
                    ++infinite;
                    continue;
                }
                ++finite;
                std::int64_t best = std::numeric_limits<std::int64_t>::min();
                for (std::int64_t step = 1; step <= 60 * P; ++step) best = std::max(best, excess(n0 + dir * step));
                EXPECT_EQ(v.value, best);
            }
        }
    }
    EXPECT_GT(finite, 20);
    EXPECT_GT(infinite, 20);
}

// Off density 2 and with P1 in force, P2 holds exactly when the excess is infinite.
TEST(ExcessSup, InfiniteOnBothSidesIffP2OffDensityTwo) {
    std::mt19937_64 rng(44);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const PeriodicSetDescriptor d = random_descriptor(rng);
        if (d.points_per_period() == 2 * d.period()) continue;
        const bool all_infinite = excess_sup(d, 0, Side::Right).infinite && excess_sup(d, 0, Side::Left).infinite;
        for (int mv : {2, 3}) {
            const CertificateReport r = is_global_phaseless(d, Degree(mv));
            if (r.violated && r.violated->condition == "P1") {
                EXPECT_FALSE(all_infinite && brute_p1(d));
                continue;
            }
            EXPECT_EQ(r.verdict, all_infinite);
            EXPECT_EQ(brute_p2(d, mv), all_infinite);
            ++checked;
        }
    }
    EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace phaseless
