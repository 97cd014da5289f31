#include "phaseless/json_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace phaseless::json {

namespace {

const json& field(const json& object, const char* name) {
    if (!object.is_object()) {
        throw std::invalid_argument(std::string("expected a JSON object holding \"") + name + "\"");
    }
    auto it = object.find(name);
    if (it == object.end()) {
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

std::int64_t integer_field(const json& object, const char* name) {
    const json& value = field(object, name);
    if (!value.is_number_integer()) {
        throw std::invalid_argument(std::string("field \"") + name + "\" must be an integer");
    }
    return value.get<std::int64_t>();
}

std::vector<Rational> rational_list(const json& value, const char* name) {
    if (!value.is_array()) {
        throw std::invalid_argument(std::string("field \"") + name + "\" must be an array");
    }
    std::vector<Rational> out;
    for (const json& item : value) {
        out.push_back(rational_from_json(item));
    }
    return out;
}

json rational_list_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const Rational& x : values) {
        out.push_back(rational_to_json(x));
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> integer_pair(const json& value, const char* name) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() || !value[1].is_number_integer()) {
        throw std::invalid_argument(std::string("field \"") + name + "\" must be a pair of integers");
    }
    return {value[0].get<std::int64_t>(), value[1].get<std::int64_t>()};
}

Window window_from_json(const json& value) {
    const auto [lo, hi] = integer_pair(value, "window");
    return Window(lo, hi);
}

}  // namespace

json rational_to_json(const Rational& value) {
    return format_rational(value);
}

Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) {
        return Rational(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    if (value.is_number_float()) {
        // Shortest fixed-notation text that round-trips, so 0.1 reads as 1/10.
        std::array<char, 512> buffer{};
        const auto [end, ec] =
            std::to_chars(buffer.data(), buffer.data() + buffer.size(), value.get<double>(), std::chars_format::fixed);
        if (ec != std::errc{} || !std::isfinite(value.get<double>())) {
            throw std::invalid_argument("cannot read " + value.dump() + " as an exact rational");
        }
        return parse_rational(std::string_view(buffer.data(), static_cast<std::size_t>(end - buffer.data())));
    }
    throw std::invalid_argument("expected a rational as a \"p/q\" string or a number, got " + value.dump());
}

json to_json(const SampleSet& samples) {
    return json{{"window", {samples.window().lo(), samples.window().hi()}},
                {"points", rational_list_to_json(samples.points())}};
}

SampleSet sample_set_from_json(const json& value) {
    return SampleSet::from_unsorted(window_from_json(field(value, "window")),
                                    rational_list(field(value, "points"), "points"));
}

json to_json(const PeriodicSetDescriptor& set) {
    json edits = json::array();
    for (const Edit& e : set.edits()) {
        edits.push_back({{"op", e.kind == Edit::Kind::Add ? "add" : "remove"}, {"point", rational_to_json(e.point)}});
    }
    return json{{"period", set.period()},
                {"offsets", rational_list_to_json(set.offsets())},
                {"edits", edits},
                {"edit_window", {set.edit_window().lo, set.edit_window().hi}}};
}

PeriodicSetDescriptor descriptor_from_json(const json& value) {
    const std::int64_t period = integer_field(value, "period");
    std::vector<Rational> offsets = rational_list(field(value, "offsets"), "offsets");
    std::sort(offsets.begin(), offsets.end());
    std::vector<Edit> edits;
    IntRange edit_window;
    if (value.contains("edits")) {
        const json& list = value.at("edits");
        if (!list.is_array()) {
            throw std::invalid_argument("field \"edits\" must be an array");
        }
        for (const json& item : list) {
            const json& op = field(item, "op");
            Edit::Kind kind;
            if (op == "add") {
                kind = Edit::Kind::Add;
            } else if (op == "remove") {
                kind = Edit::Kind::Remove;
            } else {
                throw std::invalid_argument("edit op must be \"add\" or \"remove\", got " + op.dump());
            }
            edits.push_back({kind, rational_from_json(field(item, "point"))});
        }
    }
    if (value.contains("edit_window")) {
        const auto [lo, hi] = integer_pair(value.at("edit_window"), "edit_window");
        edit_window = {lo, hi};
    } else if (!edits.empty()) {
        throw std::invalid_argument("descriptor with edits needs \"edit_window\"");
    }
    return PeriodicSetDescriptor(period, std::move(offsets), std::move(edits), edit_window);
}

json to_json(const SplineFunction& f) {
    json window = nullptr;
    if (f.window()) {
        window = {f.window()->lo(), f.window()->hi()};
    }
    return json{{"m", f.degree().value()},
                {"start", f.start()},
                {"coeffs", rational_list_to_json(f.coeffs())},
                {"window", window}};
}

SplineFunction spline_from_json(const json& value) {
    const std::int64_t m = integer_field(value, "m");
    std::optional<Window> window;
    if (value.contains("window") && !value.at("window").is_null()) {
        window = window_from_json(value.at("window"));
    }
    return SplineFunction(Degree(static_cast<int>(m)), integer_field(value, "start"),
                          rational_list(field(value, "coeffs"), "coeffs"), window);
}

json to_json(const RationalMatrix& matrix) {
    json entries = json::array();
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            row.push_back(rational_to_json(matrix(r, c)));
        }
        entries.push_back(row);
    }
    return json{{"rows", matrix.rows()}, {"cols", matrix.cols()}, {"entries", entries}};
}

RationalMatrix matrix_from_json(const json& value) {
    const std::int64_t rows = integer_field(value, "rows");
    const std::int64_t cols = integer_field(value, "cols");
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    }
    const json& entries = field(value, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows)) {
        throw std::invalid_argument("matrix \"entries\" must hold " + std::to_string(rows) + " rows");
    }
    RationalMatrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < out.rows(); ++r) {
        const std::vector<Rational> row = rational_list(entries[r], "entries");
        if (row.size() != out.cols()) {
            throw std::invalid_argument("matrix row " + std::to_string(r) + " must hold " + std::to_string(cols) +
                                        " entries");
        }
        for (std::size_t c = 0; c < out.cols(); ++c) {
            out(r, c) = row[c];
        }
    }
    return out;
}

json to_json(const CertificateReport& report) {
    json violated = nullptr;
    if (report.violated) {
        json params = json::object();
        for (const auto& [key, value] : report.violated->params) {
            params[key] = value;
        }
        violated = json{{"condition", report.violated->condition},
                        {"params", params},
                        {"observed", report.violated->observed},
                        {"required", report.violated->required}};
    }
    return json{{"verdict", report.verdict}, {"violated", violated}};
}

json to_json(const UnsignedSamples& data) {
    return json{{"sample_set", to_json(data.samples())}, {"values", rational_list_to_json(data.values())}};
}

UnsignedSamples unsigned_samples_from_json(const json& value) {
    const json& set = field(value, "sample_set");
    const Window window = window_from_json(field(set, "window"));
    std::vector<Rational> points = rational_list(field(set, "points"), "points");
    std::vector<Rational> values = rational_list(field(value, "values"), "values");
    if (points.size() != values.size()) {
        throw std::invalid_argument("\"values\" must align with \"sample_set.points\"");
    }
    // Keep each value with its point while sorting.
    std::vector<std::pair<Rational, Rational>> rows;
    for (std::size_t i = 0; i < points.size(); ++i) {
        rows.emplace_back(points[i], values[i]);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    points.clear();
    values.clear();
    for (auto& [x, y] : rows) {
        points.push_back(std::move(x));
        values.push_back(std::move(y));
    }
    return UnsignedSamples(SampleSet::from_unsorted(window, std::move(points)), std::move(values));
}

json to_json(const RecoveryResult& result) {
    const char* status = result.status == RecoveryStatus::Unique      ? "unique"
                         : result.status == RecoveryStatus::Ambiguous ? "ambiguous"
                                                                      : "infeasible";
    json solutions = json::array();
    for (const SplineFunction& f : result.solutions) {
        solutions.push_back(to_json(f));
    }
    json certificate = nullptr;
    if (result.certificate) {
        certificate = json::array({to_json(result.certificate->first), to_json(result.certificate->second)});
    }
    return json{{"status", status}, {"solutions", solutions}, {"certificate", certificate}};
}

json to_json(const CounterexamplePair& pair) {
    return json{{"f1", to_json(pair.f1)},
                {"f2", to_json(pair.f2)},
                {"f1_nonseparable", pair.f1_nonseparable},
                {"f2_nonseparable", pair.f2_nonseparable}};
}

}  // namespace phaseless::json
