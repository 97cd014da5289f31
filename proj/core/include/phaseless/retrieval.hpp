#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "phaseless/bspline.hpp"
#include "phaseless/sample_set.hpp"

namespace phaseless {

/// Unsigned values y_i = |f(x_i)| aligned with the points of a sample set.
class UnsignedSamples {
public:
    /// Throws std::invalid_argument on negative values or a length mismatch.
    UnsignedSamples(SampleSet samples, std::vector<Rational> values);
    /// |f(x)| at every point of `samples`.
    static UnsignedSamples measure(const SplineFunction& f, SampleSet samples);

    const SampleSet& samples() const noexcept { return samples_; }
    const std::vector<Rational>& values() const noexcept { return values_; }

private:
    SampleSet samples_;
    std::vector<Rational> values_;
};

enum class RecoveryStatus { Unique, Ambiguous, Infeasible };

struct RecoveryResult {
    RecoveryStatus status = RecoveryStatus::Infeasible;
    /// One representative per class {f, -f}; first nonzero coefficient positive.
    std::vector<SplineFunction> solutions;
    /// For Ambiguous: two solutions that are not equal up to sign.
    std::optional<std::pair<SplineFunction, SplineFunction>> certificate;
};

struct ReconstructOptions {
    /// Also branch on the sign of zero-valued samples. The result must not change;
    /// the switch exists to test that claim.
    bool branch_on_zero_values = false;
};

/// All f in V_m|[N1,N2] with |f(x_i)| = y_i, up to global sign.
///
/// Signs are assigned to samples left to right by depth-first search. A sample
/// whose collocation row depends on earlier rows fixes its own signed value, so
/// inconsistent branches are cut there. When the collocation matrix is rank
/// deficient a consistent branch carries an affine family of solutions; two
/// members of it are returned and the status is Ambiguous.
RecoveryResult reconstruct(const UnsignedSamples& data, Degree m, const ReconstructOptions& options = {});

/// Witness that E is not a phaseless sampling sequence: a split E = E1 u E2 and
/// f1 = g + h, f2 = g - h with g = 0 on E1 and h = 0 on E2, hence |f1| = |f2| on E.
struct PartitionWitness {
    std::vector<std::size_t> first_part;  // indices of E1 in E
    SplineFunction f1;
    SplineFunction f2;
};

/// Largest #E accepted by the partition enumeration.
inline constexpr std::size_t kMaxOracleSamples = 20;

/// A nonzero nonseparable f1 and some f2 != +-f1 with |f1| = |f2| on E, if any
/// exists. Throws CapacityError when #E > 20.
std::optional<PartitionWitness> find_partition_witness(const SampleSet& samples, Degree m);

/// Brute-force phaseless test from the definition: true iff no witness exists.
bool partition_oracle(const SampleSet& samples, Degree m);

struct CounterexamplePair {
    SplineFunction f1;
    SplineFunction f2;
    bool f1_nonseparable = false;
    bool f2_nonseparable = false;
};

/// |f1| = |f2| on E with f1 != +-f2, both nonseparable. Throws PreconditionError
/// when E passes is_local_phaseless, CapacityError when #E > 20, and InternalError
/// if no pair exists (which would contradict the certifier).
CounterexamplePair build_counterexample(const SampleSet& samples, Degree m);

/// |f1(x)| = |f2(x)| at every probe. Throws std::invalid_argument unless both
/// functions share degree and window.
bool verify_modulus_agreement(const SplineFunction& f1, const SplineFunction& f2, std::span<const Rational> probes);

/// Canonical representative of {f, -f}: first nonzero coefficient positive.
SplineFunction canonical_sign(const SplineFunction& f);

}  // namespace phaseless
