#pragma once

#include <nlohmann/json.hpp>

#include "phaseless/bspline.hpp"
#include "phaseless/frames.hpp"
#include "phaseless/linalg.hpp"
#include "phaseless/retrieval.hpp"
#include "phaseless/sample_set.hpp"
#include "phaseless/sequences.hpp"

namespace phaseless::json {

using nlohmann::json;

// Rationals travel as "p/q" strings in lowest terms. Readers also accept JSON
// integers, decimal strings, and JSON floats (read through their shortest
// round-trip decimal text). Readers throw std::invalid_argument with a message
// naming the offending field.

json rational_to_json(const Rational& value);
Rational rational_from_json(const json& value);

json to_json(const SampleSet& samples);
SampleSet sample_set_from_json(const json& value);

json to_json(const PeriodicSetDescriptor& set);
PeriodicSetDescriptor descriptor_from_json(const json& value);

json to_json(const SplineFunction& f);
SplineFunction spline_from_json(const json& value);

json to_json(const RationalMatrix& matrix);
RationalMatrix matrix_from_json(const json& value);

json to_json(const CertificateReport& report);

json to_json(const UnsignedSamples& data);
UnsignedSamples unsigned_samples_from_json(const json& value);

json to_json(const RecoveryResult& result);
json to_json(const CounterexamplePair& pair);

}  // namespace phaseless::json
