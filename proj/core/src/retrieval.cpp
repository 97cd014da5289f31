#include "phaseless/retrieval.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "phaseless/collocation.hpp"
#include "phaseless/error.hpp"
#include "phaseless/linalg.hpp"
#include "phaseless/sequences.hpp"

namespace phaseless {

UnsignedSamples::UnsignedSamples(SampleSet samples, std::vector<Rational> values)
    : samples_(std::move(samples)), values_(std::move(values)) {
    if (values_.size() != samples_.size()) {
        throw std::invalid_argument("unsigned samples: " + std::to_string(values_.size()) + " values for " +
                                    std::to_string(samples_.size()) + " points");
    }
    for (const Rational& y : values_) {
        if (y < 0) {
            throw std::invalid_argument("unsigned samples must be nonnegative, got " + format_rational(y));
        }
    }
}

UnsignedSamples UnsignedSamples::measure(const SplineFunction& f, SampleSet samples) {
    std::vector<Rational> values;
    for (const Rational& x : samples.points()) {
        values.push_back(abs(eval_spline(f, x)));
    }
    return UnsignedSamples(std::move(samples), std::move(values));
}

SplineFunction canonical_sign(const SplineFunction& f) {
    for (const Rational& c : f.coeffs()) {
        if (c != 0) {
            return c > 0 ? f : f.negated();
        }
    }
    return f;
}

namespace {

/// Column j of the collocation matrix: the functional c -> f(x_j).
RationalVector sample_row(const RationalMatrix& phi, std::size_t j) {
    RationalVector row(phi.rows());
    for (std::size_t n = 0; n < phi.rows(); ++n) {
        row[n] = phi(n, j);
    }
    return row;
}

/// One solution of R c = rhs for R with independent rows: free coordinates zero.
RationalVector particular_solution(const RationalMatrix& r, std::span<const Rational> rhs) {
    RationalMatrix augmented(r.rows(), r.cols() + 1);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t c = 0; c < r.cols(); ++c) {
            augmented(i, c) = r(i, c);
        }
        augmented(i, r.cols()) = rhs[i];
    }
    const RowEchelon echelon = reduced_row_echelon(augmented);
    RationalVector solution(r.cols());
    for (std::size_t i = 0; i < echelon.pivots.size(); ++i) {
        if (echelon.pivots[i] == r.cols()) {
            throw InternalError("independent rows produced an inconsistent system");
        }
        solution[echelon.pivots[i]] = echelon.reduced(i, r.cols());
    }
    return solution;
}

class SignSearch {
public:
    SignSearch(const UnsignedSamples& data, Degree m, const ReconstructOptions& options)
        : data_(data), m_(m), options_(options) {
        const RationalMatrix phi = build_collocation(data.samples(), m).entries;
        const std::size_t N = data.samples().size();
        dependency_.resize(N);
        std::vector<RationalVector> basis_rows;
        for (std::size_t j = 0; j < N; ++j) {
            RationalVector row = sample_row(phi, j);
            // Columns: earlier independent rows, then row j.
            RationalMatrix columns(phi.rows(), basis_.size() + 1);
            for (std::size_t n = 0; n < phi.rows(); ++n) {
                for (std::size_t b = 0; b < basis_.size(); ++b) {
                    columns(n, b) = basis_rows[b][n];
                }
                columns(n, basis_.size()) = row[n];
            }
            const std::vector<RationalVector> relation = null_space(columns);
            if (relation.empty()) {
                basis_.push_back(j);
                basis_rows.push_back(std::move(row));
                continue;
            }
            // relation . columns = 0 with a nonzero last entry: row_j = sum mu_b row_b.
            const RationalVector& v = relation.front();
            std::vector<std::pair<std::size_t, Rational>> mu;
            for (std::size_t b = 0; b < basis_.size(); ++b) {
                if (v[b] != 0) {
                    mu.emplace_back(basis_[b], -v[b] / v.back());
                }
            }
            dependency_[j] = std::move(mu);
        }
        basis_matrix_ = RationalMatrix::from_rows(basis_rows);
        if (basis_rows.empty()) {
            basis_matrix_ = RationalMatrix(0, phi.rows());
        }
        null_basis_ = null_space(basis_matrix_);
    }

    RecoveryResult run() {
        signed_values_.assign(data_.samples().size(), Rational(0));
        descend(0, false);
        RecoveryResult result;
        result.solutions = std::move(found_);
        if (result.solutions.empty()) {
            result.status = RecoveryStatus::Infeasible;
        } else if (result.solutions.size() == 1) {
            result.status = RecoveryStatus::Unique;
        } else {
            result.status = RecoveryStatus::Ambiguous;
            result.certificate = std::make_pair(result.solutions[0], result.solutions[1]);
        }
        return result;
    }

private:
    void descend(std::size_t j, bool sign_fixed) {
        if (j == data_.samples().size()) {
            emit();
            return;
        }
        const Rational& y = data_.values()[j];
        if (dependency_[j]) {
            Rational forced(0);
            for (const auto& [i, mu] : *dependency_[j]) {
                forced += mu * signed_values_[i];
            }
            if (abs(forced) != y) {
                return;
            }
            if (y == 0 && options_.branch_on_zero_values) {
                for (int branch = 0; branch < 2; ++branch) {
                    signed_values_[j] = 0;
                    descend(j + 1, sign_fixed);
                }
                return;
            }
            signed_values_[j] = forced;
            // A nonzero forced value is a sign choice made by the earlier samples.
            descend(j + 1, sign_fixed || y != 0);
            return;
        }
        if (y == 0) {
            const int branches = options_.branch_on_zero_values ? 2 : 1;
            for (int branch = 0; branch < branches; ++branch) {
                signed_values_[j] = 0;
                descend(j + 1, sign_fixed);
            }
            return;
        }
        signed_values_[j] = y;
        descend(j + 1, true);
        if (sign_fixed) {
            signed_values_[j] = -y;
            descend(j + 1, true);
        }
    }

    void emit() {
        RationalVector rhs;
        for (std::size_t b : basis_) {
            rhs.push_back(signed_values_[b]);
        }
        const RationalVector c0 = particular_solution(basis_matrix_, rhs);
        record(c0);
        if (!null_basis_.empty()) {
            RationalVector c1 = c0;
            for (std::size_t i = 0; i < c1.size(); ++i) {
                c1[i] += null_basis_.front()[i];
            }
            record(c1);
        }
    }

    void record(const RationalVector& coeffs) {
        SplineFunction f = canonical_sign(SplineFunction::on_window(m_, data_.samples().window(), coeffs));
        if (std::find(found_.begin(), found_.end(), f) == found_.end()) {
            found_.push_back(std::move(f));
        }
    }

    const UnsignedSamples& data_;
    Degree m_;
    ReconstructOptions options_;
    std::vector<std::size_t> basis_;
    std::vector<std::optional<std::vector<std::pair<std::size_t, Rational>>>> dependency_;
    RationalMatrix basis_matrix_;
    std::vector<RationalVector> null_basis_;
    std::vector<Rational> signed_values_;
    std::vector<SplineFunction> found_;
};

}  // namespace

RecoveryResult reconstruct(const UnsignedSamples& data, Degree m, const ReconstructOptions& options) {
    return SignSearch(data, m, options).run();
}

namespace {

/// Coefficient vectors (length K) of splines vanishing at the chosen sample columns.
std::vector<RationalVector> vanishing_basis(const RationalMatrix& phi, const std::vector<std::size_t>& columns) {
    return null_space(phi.select_columns(columns).transposed());
}

/// Consecutive nonzero indices at most m apart: no separating gap.
bool gaps_at_most(const std::vector<std::size_t>& support, int m) {
    for (std::size_t i = 1; i < support.size(); ++i) {
        if (support[i] - support[i - 1] > static_cast<std::size_t>(m)) {
            return false;
        }
    }
    return true;
}

/// Exact search for g = G alpha != 0, h = H beta != 0 such that f1 = g + h is
/// nonzero and nonseparable (and f2 = g - h as well when `both`).
///
/// Any witness has f1 supported on some [a, b] with nonzero ends. Fixing the
/// support intervals makes the admissible (alpha, beta) a subspace Z; a generic
/// point of Z is nonzero at every coordinate that does not vanish identically on
/// Z, so the search is complete once each interval choice is tested generically.
class PairFinder {
public:
    PairFinder(std::vector<RationalVector> g, std::vector<RationalVector> h, std::size_t K, Degree m, bool both)
        : g_(std::move(g)), h_(std::move(h)), K_(K), m_(m), both_(both) {
        const std::size_t vars = g_.size() + h_.size();
        plus_ = RationalMatrix(K_, vars);
        minus_ = RationalMatrix(K_, vars);
        for (std::size_t i = 0; i < K_; ++i) {
            for (std::size_t a = 0; a < g_.size(); ++a) {
                plus_(i, a) = g_[a][i];
                minus_(i, a) = g_[a][i];
            }
            for (std::size_t b = 0; b < h_.size(); ++b) {
                plus_(i, g_.size() + b) = h_[b][i];
                minus_(i, g_.size() + b) = -h_[b][i];
            }
        }
    }

    std::optional<std::pair<RationalVector, RationalVector>> find() {
        if (g_.empty() || h_.empty()) {
            return std::nullopt;
        }
        for (std::size_t a = 0; a < K_; ++a) {
            for (std::size_t b = a; b < K_; ++b) {
                if (!both_) {
                    if (auto hit = try_supports(a, b, std::nullopt)) {
                        return hit;
                    }
                    continue;
                }
                for (std::size_t a2 = 0; a2 < K_; ++a2) {
                    for (std::size_t b2 = a2; b2 < K_; ++b2) {
                        if (auto hit = try_supports(a, b, std::make_pair(a2, b2))) {
                            return hit;
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

private:
    /// Linear functionals on the coordinates of Z that must be nonzero.
    using Functional = RationalVector;

    std::optional<std::pair<RationalVector, RationalVector>> try_supports(
        std::size_t a, std::size_t b, std::optional<std::pair<std::size_t, std::size_t>> second) {
        const std::size_t vars = g_.size() + h_.size();
        std::vector<RationalVector> constraints;
        for (std::size_t i = 0; i < K_; ++i) {
            if (i < a || i > b) {
                constraints.emplace_back(plus_.row(i).begin(), plus_.row(i).end());
            }
            if (second && (i < second->first || i > second->second)) {
                constraints.emplace_back(minus_.row(i).begin(), minus_.row(i).end());
            }
        }
        const RationalMatrix constraint_matrix =
            constraints.empty() ? RationalMatrix(0, vars) : RationalMatrix::from_rows(constraints);
        const std::vector<RationalVector> z = null_space(constraint_matrix);
        if (z.empty()) {
            return std::nullopt;
        }
        const std::size_t d = z.size();
        // Restriction of a row functional on (alpha, beta) to the basis of Z.
        auto on_z = [&](std::span<const Rational> row) {
            Functional out(d);
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t v = 0; v < vars; ++v) {
                    if (row[v] != 0 && z[k][v] != 0) {
                        out[k] += row[v] * z[k][v];
                    }
                }
            }
            return out;
        };
        auto is_zero = [](const Functional& f) {
            return std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; });
        };

        std::vector<Functional> required;
        auto unit_nonzero = [&](std::size_t from, std::size_t to) {
            for (std::size_t v = from; v < to; ++v) {
                RationalVector unit(vars);
                unit[v] = 1;
                Functional f = on_z(unit);
                if (!is_zero(f)) {
                    required.push_back(std::move(f));
                    return true;
                }
            }
            return false;
        };
        if (!unit_nonzero(0, g_.size()) || !unit_nonzero(g_.size(), vars)) {
            return std::nullopt;  // g or h vanishes on all of Z
        }
        auto support_ok = [&](const RationalMatrix& map, std::size_t lo, std::size_t hi) {
            std::vector<std::size_t> support;
            for (std::size_t i = lo; i <= hi; ++i) {
                Functional f = on_z(map.row(i));
                if (!is_zero(f)) {
                    support.push_back(i);
                    required.push_back(std::move(f));
                }
            }
            return !support.empty() && support.front() == lo && support.back() == hi &&
                   gaps_at_most(support, m_.value());
        };
        if (!support_ok(plus_, a, b)) {
            return std::nullopt;
        }
        if (second && !support_ok(minus_, second->first, second->second)) {
            return std::nullopt;
        }

        // Each required functional along w = (1, t, ..., t^(d-1)) is a nonzero
        // polynomial of degree < d, so some t among the first |required|(d-1)+1
        // positive integers avoids all their roots.
        const std::size_t attempts = required.size() * (d - 1) + 1;
        for (std::size_t t = 1; t <= attempts; ++t) {
            std::vector<Rational> w(d);
            Rational power(1);
            for (std::size_t k = 0; k < d; ++k) {
                w[k] = power;
                power *= static_cast<long>(t);
            }
            bool generic = true;
            for (const Functional& f : required) {
                Rational value(0);
                for (std::size_t k = 0; k < d; ++k) {
                    value += f[k] * w[k];
                }
                if (value == 0) {
                    generic = false;
                    break;
                }
            }
            if (!generic) {
                continue;
            }
            RationalVector point(vars);
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t v = 0; v < vars; ++v) {
                    point[v] += w[k] * z[k][v];
                }
            }
            return std::make_pair(plus_.multiply(point), minus_.multiply(point));
        }
        throw InternalError("generic point search exceeded its root bound");
    }

    std::vector<RationalVector> g_;
    std::vector<RationalVector> h_;
    std::size_t K_;
    Degree m_;
    bool both_;
    RationalMatrix plus_;   // (alpha, beta) -> g + h
    RationalMatrix minus_;  // (alpha, beta) -> g - h
};

/// Tries the split with E1 = `first_part`; f1 = g + h, f2 = g - h.
std::optional<PartitionWitness> try_partition(const SampleSet& samples, Degree m, const RationalMatrix& phi,
                                              const std::vector<std::size_t>& first_part, bool both) {
    std::vector<bool> in_first(samples.size(), false);
    for (std::size_t i : first_part) {
        in_first[i] = true;
    }
    std::vector<std::size_t> second_part;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!in_first[i]) {
            second_part.push_back(i);
        }
    }
    PairFinder finder(vanishing_basis(phi, first_part), vanishing_basis(phi, second_part), phi.rows(), m, both);
    auto pair = finder.find();
    if (!pair) {
        return std::nullopt;
    }
    return PartitionWitness{first_part, SplineFunction::on_window(m, samples.window(), std::move(pair->first)),
                            SplineFunction::on_window(m, samples.window(), std::move(pair->second))};
}

void check_capacity(const SampleSet& samples) {
    if (samples.size() > kMaxOracleSamples) {
        throw CapacityError("partition enumeration is capped at " + std::to_string(kMaxOracleSamples) +
                            " samples, got " + std::to_string(samples.size()));
    }
}

/// Splits with sample 0 in E2, ordered by |E1| and then by index mask.
std::vector<std::uint64_t> partition_masks(std::size_t n) {
    if (n == 0) {
        return {0};  // E1 = E2 = {}
    }
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        masks.push_back(mask << 1);
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });
    return masks;
}

std::vector<std::size_t> mask_indices(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

std::optional<PartitionWitness> find_partition_witness(const SampleSet& samples, Degree m) {
    check_capacity(samples);
    const RationalMatrix phi = build_collocation(samples, m).entries;
    for (std::uint64_t mask : partition_masks(samples.size())) {
        if (auto witness = try_partition(samples, m, phi, mask_indices(mask, samples.size()), false)) {
            return witness;
        }
    }
    return std::nullopt;
}

bool partition_oracle(const SampleSet& samples, Degree m) {
    return !find_partition_witness(samples, m).has_value();
}

namespace {

bool valid_pair(const SampleSet& samples, const CounterexamplePair& pair) {
    for (const Rational& x : samples.points()) {
        if (abs(eval_spline(pair.f1, x)) != abs(eval_spline(pair.f2, x))) {
            return false;
        }
    }
    return pair.f1 != pair.f2 && pair.f1 != pair.f2.negated() && pair.f1_nonseparable && pair.f2_nonseparable;
}

CounterexamplePair pair_of(SplineFunction f1, SplineFunction f2) {
    const bool s1 = !is_separable(f1);
    const bool s2 = !is_separable(f2);
    return CounterexamplePair{std::move(f1), std::move(f2), s1, s2};
}

/// No sample in (n, n+1): c = sum_{k >= n} phi(. - k) vanishes left of n and
/// c' = sum_{k <= n-m} phi(. - k) vanishes right of n+1, so f1 = c + c' and
/// f2 = c - c' agree up to sign off (n, n+1).
CounterexamplePair empty_cell_pair(const SampleSet& samples, Degree m, std::int64_t n) {
    const Window& window = samples.window();
    const std::int64_t first = window.lo() - m.value();
    const auto K = static_cast<std::size_t>(basis_size(m, window));
    std::vector<Rational> plus(K), minus(K);
    for (std::size_t i = 0; i < K; ++i) {
        const std::int64_t shift = first + static_cast<std::int64_t>(i);
        if (shift >= n) {
            plus[i] = 1;
            minus[i] = 1;
        } else if (shift <= n - m.value()) {
            plus[i] = 1;
            minus[i] = -1;
        }
    }
    return pair_of(SplineFunction::on_window(m, window, std::move(plus)),
                   SplineFunction::on_window(m, window, std::move(minus)));
}

/// Splits suggested by the failed inequality: the points inside the deficient
/// window form E1 (for interior windows, the points left of it).
std::vector<std::vector<std::size_t>> guided_partitions(const SampleSet& samples, const Violation& violation) {
    const std::int64_t N1 = samples.window().lo();
    const std::int64_t N2 = samples.window().hi();
    std::optional<Interval> region;
    if (violation.condition == "left") {
        region = Interval::closed_open(N1, N1 + violation.params.at("k"));
    } else if (violation.condition == "right") {
        region = Interval::open_closed(N2 - violation.params.at("k"), N2);
    } else if (violation.condition == "interior") {
        region = Interval::closed(N1, violation.params.at("n1"));
    }
    std::vector<std::vector<std::size_t>> out;
    if (region) {
        std::vector<std::size_t> part;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (region->contains(samples.points()[i])) {
                part.push_back(i);
            }
        }
        out.push_back(std::move(part));
    }
    // Every prefix split: f1 = -f2 on the left block, f1 = f2 on the rest.
    for (std::size_t i = 1; i < samples.size(); ++i) {
        std::vector<std::size_t> prefix(i);
        for (std::size_t j = 0; j < i; ++j) {
            prefix[j] = j;
        }
        out.push_back(std::move(prefix));
    }
    return out;
}

}  // namespace

CounterexamplePair build_counterexample(const SampleSet& samples, Degree m) {
    const CertificateReport report = is_local_phaseless(samples, m);
    if (report.verdict) {
        throw PreconditionError("build_counterexample requires a set that fails the phaseless certificate");
    }
    check_capacity(samples);
    const Violation& violation = *report.violated;

    if (violation.condition == "interior" && violation.params.at("n2") - violation.params.at("n1") == 1) {
        CounterexamplePair pair = empty_cell_pair(samples, m, violation.params.at("n1"));
        if (valid_pair(samples, pair)) {
            return pair;
        }
    }

    const RationalMatrix phi = build_collocation(samples, m).entries;
    auto attempt = [&](const std::vector<std::size_t>& part) -> std::optional<CounterexamplePair> {
        if (auto witness = try_partition(samples, m, phi, part, true)) {
            CounterexamplePair pair = pair_of(std::move(witness->f1), std::move(witness->f2));
            if (!valid_pair(samples, pair)) {
                throw InternalError("counterexample search produced an invalid pair");
            }
            return pair;
        }
        return std::nullopt;
    };
    for (const auto& part : guided_partitions(samples, violation)) {
        if (auto pair = attempt(part)) {
            return *pair;
        }
    }
    for (std::uint64_t mask : partition_masks(samples.size())) {
        if (auto pair = attempt(mask_indices(mask, samples.size()))) {
            return *pair;
        }
    }
    throw InternalError("no counterexample pair exists for a set the certifier rejects");
}

bool verify_modulus_agreement(const SplineFunction& f1, const SplineFunction& f2, std::span<const Rational> probes) {
    if (f1.degree() != f2.degree() || f1.window() != f2.window()) {
        throw std::invalid_argument("verify_modulus_agreement: functions differ in degree or window");
    }
    return std::all_of(probes.begin(), probes.end(),
                       [&](const Rational& x) { return abs(eval_spline(f1, x)) == abs(eval_spline(f2, x)); });
}

}  // namespace phaseless
