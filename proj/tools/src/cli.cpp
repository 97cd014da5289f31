#include "phaseless_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "phaseless/collocation.hpp"
#include "phaseless/error.hpp"
#include "phaseless/frames.hpp"
#include "phaseless/generators.hpp"
#include "phaseless/json_io.hpp"
#include "phaseless/linalg.hpp"
#include "phaseless/retrieval.hpp"
#include "phaseless/sequences.hpp"

namespace phaseless::cli {

namespace {

using nlohmann::json;
namespace pj = phaseless::json;

struct Options {
    std::string mode;
    int m = 0;
    std::string input = "-";
    int probes = 0;
    std::string criterion;
    std::string family;
    std::optional<std::int64_t> n1, n2, k;
    std::optional<std::string> alpha;
    std::string beta = "0";
};

json read_input(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path);
        if (!file) {
            throw std::invalid_argument("cannot open input file \"" + path + "\"");
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
    }
}

void emit(std::ostream& out, const json& value) {
    out << value.dump(2) << '\n';
}

int verdict_code(bool verdict) {
    return verdict ? kExitTrue : kExitFalse;
}

Degree degree_of(const Options& options) {
    if (options.m < 1) {
        throw std::invalid_argument("--m must be a positive integer");
    }
    return Degree(options.m);
}

int cmd_certify(const Options& options, std::istream& in, std::ostream& out) {
    const json input = read_input(options.input, in);
    const Degree m = degree_of(options);
    CertificateReport report;
    if (options.mode == "global") {
        report = is_global_phaseless(pj::descriptor_from_json(input), m);
    } else {
        const SampleSet samples = pj::sample_set_from_json(input);
        if (options.mode == "sampling") {
            report = is_local_sampling(samples, m);
        } else if (options.mode == "almost") {
            report = is_almost_phaseless(samples, m);
        } else {
            report = is_local_phaseless(samples, m);
        }
    }
    emit(out, pj::to_json(report));
    return verdict_code(report.verdict);
}

std::vector<Rational> probe_grid(const Window& window, int count) {
    std::vector<Rational> probes;
    if (count == 1) {
        probes.push_back(Rational(window.lo() + window.hi(), 2));
    }
    for (int i = 0; count > 1 && i < count; ++i) {
        probes.push_back(Rational(window.lo()) + Rational(i, count - 1) * window.length());
    }
    return probes;
}

int cmd_reconstruct(const Options& options, std::istream& in, std::ostream& out) {
    const UnsignedSamples data = pj::unsigned_samples_from_json(read_input(options.input, in));
    const Degree m = degree_of(options);
    if (options.probes < 0) {
        throw std::invalid_argument("--probes must be nonnegative");
    }
    const RecoveryResult result = reconstruct(data, m);
    json report = pj::to_json(result);
    if (options.probes > 0) {
        const std::vector<Rational> probes = probe_grid(data.samples().window(), options.probes);
        bool agree = true;
        for (std::size_t i = 0; i < result.solutions.size(); ++i) {
            for (std::size_t j = i + 1; j < result.solutions.size(); ++j) {
                agree = agree && verify_modulus_agreement(result.solutions[i], result.solutions[j], probes);
            }
        }
        report["modulus_agreement"] = agree;
    }
    emit(out, report);
    return verdict_code(result.status == RecoveryStatus::Unique);
}

int cmd_counterexample(const Options& options, std::istream& in, std::ostream& out) {
    const SampleSet samples = pj::sample_set_from_json(read_input(options.input, in));
    emit(out, pj::to_json(build_counterexample(samples, degree_of(options))));
    return kExitTrue;
}

int cmd_oracle(const Options& options, std::istream& in, std::ostream& out) {
    const SampleSet samples = pj::sample_set_from_json(read_input(options.input, in));
    const Degree m = degree_of(options);
    if (options.mode == "phaseless") {
        const std::optional<PartitionWitness> witness = find_partition_witness(samples, m);
        json report{{"verdict", !witness.has_value()}, {"witness", nullptr}};
        if (witness) {
            json first_part = json::array();
            for (std::size_t i : witness->first_part) {
                first_part.push_back(pj::rational_to_json(samples.points()[i]));
            }
            report["witness"] = json{
                {"first_part", first_part}, {"f1", pj::to_json(witness->f1)}, {"f2", pj::to_json(witness->f2)}};
        }
        emit(out, report);
        return verdict_code(!witness);
    }
    const RationalMatrix phi = build_collocation(samples, m).entries;
    const bool full_rank = exact_rank(phi) == phi.rows();
    const bool verdict = full_rank && is_almost_phase_retrievable(phi);
    emit(out, json{{"verdict", verdict}, {"full_row_rank", full_rank}});
    return verdict_code(verdict);
}

int cmd_frame_check(const Options& options, std::istream& in, std::ostream& out) {
    const RationalMatrix a = pj::matrix_from_json(read_input(options.input, in));
    bool verdict = false;
    if (options.criterion == "spark") {
        verdict = is_full_spark(a);
    } else if (options.criterion == "weak-spark") {
        verdict = is_weak_full_spark(a);
    } else {
        const int index = std::stoi(options.criterion);
        verdict = is_almost_phase_retrievable(a, static_cast<FrameCriterion>(index));
    }
    emit(out, json{{"criterion", options.criterion}, {"verdict", verdict}});
    return verdict_code(verdict);
}

std::int64_t required(const std::optional<std::int64_t>& value, const char* flag) {
    if (!value) {
        throw std::invalid_argument(std::string("gen needs ") + flag);
    }
    return *value;
}

int cmd_gen(const Options& options, std::ostream& out) {
    if (options.family == "arithmetic") {
        if (!options.alpha) {
            throw std::invalid_argument("gen arithmetic needs --alpha");
        }
        emit(out, pj::to_json(arithmetic_progression(parse_rational(*options.alpha), parse_rational(options.beta))));
        return kExitTrue;
    }
    const Window window(required(options.n1, "--n1"), required(options.n2, "--n2"));
    const std::int64_t k = required(options.k, "--k");
    if (options.family == "uniform") {
        emit(out, pj::to_json(uniform_grid(window, k)));
    } else {
        emit(out, pj::to_json(example2_set(window, degree_of(options), k)));
    }
    return kExitTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certify phaseless sampling for cardinal B-spline spaces", "phaseless"};
    app.require_subcommand(1, 1);
    Options options;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", options.input, "JSON input file, or - for standard input")->capture_default_str();
    };
    auto add_degree = [&](CLI::App* sub) {
        sub->add_option("--m", options.m, "Spline degree m >= 1")->required()->check(CLI::PositiveNumber);
    };

    CLI::App* certify = app.add_subcommand("certify", "Run a characterization certifier");
    certify->add_option("--mode", options.mode, "Certifier")
        ->required()
        ->check(CLI::IsMember({"sampling", "almost", "phaseless", "global"}));
    add_degree(certify);
    add_input(certify);

    CLI::App* recon = app.add_subcommand("reconstruct", "Recover a spline up to sign from unsigned samples");
    add_degree(recon);
    add_input(recon);
    recon->add_option("--probes", options.probes, "Probe points for the pairwise modulus check")
        ->check(CLI::NonNegativeNumber);

    CLI::App* counter = app.add_subcommand("counterexample", "Build f1, f2 with |f1| = |f2| on a failing set");
    add_degree(counter);
    add_input(counter);

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force definitional check");
    oracle->add_option("--mode", options.mode, "Property")->required()->check(CLI::IsMember({"phaseless", "almost"}));
    add_degree(oracle);
    add_input(oracle);

    CLI::App* frame = app.add_subcommand("frame-check", "Frame criteria on a matrix");
    frame->add_option("--criterion", options.criterion, "2, 3, 4, 5, spark or weak-spark")
        ->required()
        ->check(CLI::IsMember({"2", "3", "4", "5", "spark", "weak-spark"}));
    add_input(frame);

    CLI::App* gen = app.add_subcommand("gen", "Emit an example point set");
    gen->add_option("family", options.family, "uniform, example2 or arithmetic")
        ->required()
        ->check(CLI::IsMember({"uniform", "example2", "arithmetic"}));
    gen->add_option("--n1", options.n1, "Window start N1");
    gen->add_option("--n2", options.n2, "Window end N2");
    gen->add_option("--k", options.k, "Number of grid points K");
    gen->add_option("--m", options.m, "Spline degree m (example2)");
    gen->add_option("--alpha", options.alpha, "Step alpha > 0 as p/q (arithmetic)");
    gen->add_option("--beta", options.beta, "Shift beta >= 0 as p/q (arithmetic)")->capture_default_str();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (certify->parsed()) {
            return cmd_certify(options, in, out);
        }
        if (recon->parsed()) {
            return cmd_reconstruct(options, in, out);
        }
        if (counter->parsed()) {
            return cmd_counterexample(options, in, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(options, in, out);
        }
        if (frame->parsed()) {
            return cmd_frame_check(options, in, out);
        }
        return cmd_gen(options, out);
    } catch (const PreconditionError& e) {
        err << "phaseless: precondition violated: " << e.what() << '\n';
    } catch (const CapacityError& e) {
        err << "phaseless: size cap exceeded: " << e.what() << '\n';
    } catch (const InternalError& e) {
        err << "phaseless: internal inconsistency: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "phaseless: invalid input: " << e.what() << '\n';
    }
    return kExitInputError;
}

}  // namespace phaseless::cli
