#include "phaseless/frames.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "phaseless/error.hpp"

namespace phaseless {

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty() || signs_.front() != 1) {
        throw std::invalid_argument("sign pattern must be nonempty with first entry +1");
    }
    for (int s : signs_) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("sign pattern entries must be +1 or -1");
        }
    }
}

SignPattern SignPattern::from_bits(std::size_t n, std::uint64_t bits) {
    std::vector<int> signs(n, 1);
    for (std::size_t j = 1; j < n; ++j) {
        if ((bits >> (j - 1)) & 1U) {
            signs[j] = -1;
        }
    }
    return SignPattern(std::move(signs));
}

RationalMatrix apply_signs(const RationalMatrix& m, const SignPattern& s) {
    if (m.cols() != s.size()) {
        throw std::invalid_argument("apply_signs: pattern length " + std::to_string(s.size()) +
                                    " does not match " + std::to_string(m.cols()) + " columns");
    }
    RationalMatrix out = m;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (s[c] < 0) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                out(r, c) = -out(r, c);
            }
        }
    }
    return out;
}

RationalMatrix complement_matrix(const RationalMatrix& a) {
    const std::vector<RationalVector> basis = null_space(a);
    if (basis.empty()) {
        return RationalMatrix(0, a.cols());
    }
    return RationalMatrix::from_rows(basis);
}

namespace {

/// rank [B; B D_t] = rank(B restricted to t = +1) + rank(B restricted to t = -1),
/// and rank(B D_s) = rank(B), so criterion 4 for the pair (s, s') only depends on
/// t = s s'. Every t != (1, ..., 1) with t_1 = 1 must raise the rank.
bool stacked_rank_criterion(const RationalMatrix& b) {
    const std::size_t N = b.cols();
    const std::size_t base = exact_rank(b);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (N - 1)); ++bits) {
        std::vector<std::size_t> plus{0}, minus;
        for (std::size_t j = 1; j < N; ++j) {
            ((bits >> (j - 1)) & 1U ? minus : plus).push_back(j);
        }
        if (exact_rank(b.select_columns(plus)) + exact_rank(b.select_columns(minus)) <= base) {
            return false;
        }
    }
    return true;
}

std::string span_key(const RationalMatrix& canonical) {
    std::string key;
    for (std::size_t r = 0; r < canonical.rows(); ++r) {
        for (std::size_t c = 0; c < canonical.cols(); ++c) {
            key += format_rational(canonical(r, c));
            key += ',';
        }
        key += ';';
    }
    return key;
}

std::vector<RationalVector> matrix_rows(const RationalMatrix& m) {
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.emplace_back(m.row(r).begin(), m.row(r).end());
    }
    return rows;
}

/// True iff the subspace produced by `subspace(A D_s)` differs for every pair s != s'.
template <typename Subspace>
bool all_subspaces_distinct(const RationalMatrix& a, Subspace subspace) {
    const std::size_t N = a.cols();
    std::unordered_set<std::string> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (N - 1)); ++bits) {
        const RationalMatrix signed_a = apply_signs(a, SignPattern::from_bits(N, bits));
        if (!seen.insert(span_key(canonical_span(subspace(signed_a), N))).second) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_almost_phase_retrievable(const RationalMatrix& a, FrameCriterion criterion) {
    if (a.rows() < 2) {
        throw PreconditionError("almost phase retrievability needs n >= 2 rows");
    }
    if (exact_rank(a) != a.rows()) {
        throw PreconditionError("columns do not form a frame: rank " + std::to_string(exact_rank(a)) + " < " +
                                std::to_string(a.rows()));
    }
    if (a.cols() > kMaxFrameColumns) {
        throw CapacityError("sign-pattern enumeration is capped at " + std::to_string(kMaxFrameColumns) +
                            " columns, got " + std::to_string(a.cols()));
    }
    switch (criterion) {
        case FrameCriterion::DistinctRanges:
            return all_subspaces_distinct(a, [](const RationalMatrix& m) { return matrix_rows(m); });
        case FrameCriterion::DistinctNullSpaces:
            return all_subspaces_distinct(a, [](const RationalMatrix& m) { return null_space(m); });
        case FrameCriterion::StackedRank:
            return stacked_rank_criterion(a);
        case FrameCriterion::ComplementRank:
            return stacked_rank_criterion(complement_matrix(a));
    }
    throw std::invalid_argument("unknown frame criterion");
}

bool is_weak_full_spark(const RationalMatrix& a) {
    const std::size_t base = exact_rank(a);
    for (std::size_t drop = 0; drop < a.cols(); ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c != drop) {
                keep.push_back(c);
            }
        }
        if (exact_rank(a.select_columns(keep)) != base) {
            return false;
        }
    }
    return true;
}

bool is_full_spark(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t N = a.cols();
    if (N < n) {
        throw PreconditionError("full spark needs at least as many columns as rows");
    }
    // Walk all n-subsets of columns in lexicographic order.
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) {
        pick[i] = i;
    }
    while (true) {
        if (exact_rank(a.select_columns(pick)) != n) {
            return false;
        }
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == N - n + i - 1) {
            --i;
        }
        if (i == 0) {
            return true;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

}  // namespace phaseless
