#include "fixtures.hpp"

#include <algorithm>

#include "phaseless/sequences.hpp"

namespace phaseless::testing {

Rational q(const std::string& text) {
    return parse_rational(text);
}

std::vector<Rational> qs(std::initializer_list<const char*> texts) {
    std::vector<Rational> out;
    for (const char* t : texts) {
        out.push_back(q(t));
    }
    return out;
}

SampleSet sample_set(std::int64_t lo, std::int64_t hi, std::initializer_list<const char*> points) {
    return SampleSet::from_unsorted(Window(lo, hi), qs(points));
}

std::vector<Rational> grid(std::int64_t lo, std::int64_t hi, std::int64_t d) {
    std::vector<Rational> out;
    for (std::int64_t i = 0; i <= (hi - lo) * d; ++i) {
        out.push_back(Rational(lo) + Rational(i, d));
    }
    return out;
}

std::vector<SampleSet> all_subsets(const Window& window, const std::vector<Rational>& points) {
    std::vector<SampleSet> out;
    const std::size_t n = points.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Rational> chosen;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) {
                chosen.push_back(points[i]);
            }
        }
        out.emplace_back(window, std::move(chosen));
    }
    return out;
}

std::vector<SampleSet> quarter_grid_family() {
    std::vector<SampleSet> out;
    for (std::int64_t hi : {1, 2}) {
        const Window window(0, hi);
        for (SampleSet& s : all_subsets(window, grid(0, hi, 4))) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

SampleSet random_grid_subset(std::mt19937_64& rng, const Window& window, std::int64_t d, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Rational> chosen;
    for (const Rational& x : grid(window.lo(), window.hi(), d)) {
        if (keep(rng)) {
            chosen.push_back(x);
        }
    }
    return SampleSet(window, std::move(chosen));
}

SampleSet random_phaseless_set(std::mt19937_64& rng, const Window& window, Degree m) {
    const std::int64_t d = 2 * m.value() + 3;
    std::uniform_real_distribution<double> density(0.55, 0.95);
    while (true) {
        SampleSet candidate = random_grid_subset(rng, window, d, density(rng));
        if (is_local_phaseless(candidate, m)) {
            return candidate;
        }
    }
}

SplineFunction random_spline(std::mt19937_64& rng, Degree m, const Window& window, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<Rational> c(static_cast<std::size_t>(basis_size(m, window)));
    for (Rational& x : c) {
        x = coeff(rng);
    }
    return SplineFunction::on_window(m, window, std::move(c));
}

SplineFunction random_nonseparable_spline(std::mt19937_64& rng, Degree m, const Window& window) {
    while (true) {
        SplineFunction f = random_spline(rng, m, window, 5);
        if (!f.is_zero() && !is_separable(f)) {
            return f;
        }
    }
}

SplineFunction random_separable_spline(std::mt19937_64& rng, Degree m, const Window& window) {
    const auto K = static_cast<std::size_t>(basis_size(m, window));
    const auto gap = static_cast<std::size_t>(m.value()) + 1;
    std::uniform_int_distribution<std::size_t> left_end(0, K - 1 - gap);
    std::uniform_int_distribution<int> coeff(1, 5);
    std::bernoulli_distribution negative(0.5);
    auto draw = [&]() { return Rational(negative(rng) ? -coeff(rng) : coeff(rng)); };
    const std::size_t i = left_end(rng);
    std::uniform_int_distribution<std::size_t> right_start(i + gap, K - 1);
    const std::size_t j = right_start(rng);
    std::vector<Rational> c(K);
    for (std::size_t n = 0; n <= i; ++n) {
        c[n] = draw();
    }
    for (std::size_t n = j; n < K; ++n) {
        c[n] = draw();
    }
    return SplineFunction::on_window(m, window, std::move(c));
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    RationalMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out(r, c) = entry(rng);
        }
    }
    return out;
}

std::vector<Rational> probe_grid(const Window& window, int n) {
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(Rational(window.lo()) + Rational(i, n - 1) * window.length());
    }
    return out;
}

Rational bspline_truncated_power(int m, const Rational& x) {
    Rational sum(0);
    Integer binomial = 1;  // C(m+1, k)
    for (int k = 0; k <= m + 1; ++k) {
        const Rational t = x - k;
        if (t > 0) {
            Rational power(1);
            for (int i = 0; i < m; ++i) {
                power *= t;
            }
            sum += (k % 2 == 0 ? Rational(binomial) : Rational(-binomial)) * power;
        }
        binomial = binomial * (m + 1 - k) / (k + 1);
    }
    Integer factorial = 1;
    for (int i = 2; i <= m; ++i) {
        factorial *= i;
    }
    return sum / Rational(factorial);
}

}  // namespace phaseless::testing
