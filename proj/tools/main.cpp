// Command-line front end: exact and Monte Carlo polytope volumes, uniform-sum
// distribution tables, spectrum generators, the restricted realizability
// decider, and companion-matrix realization, all as reproducible batch
// commands with JSON or CSV output.

#include "tnpoly/distributions.hpp"
#include "tnpoly/montecarlo.hpp"
#include "tnpoly/polytope.hpp"
#include "tnpoly/serialization.hpp"
#include "tnpoly/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using tnpoly::Rational;
using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Rational parse_rational_arg(const std::string& text) {
    try {
        return tnpoly::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rational> parse_spectrum_arg(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        values.push_back(parse_rational_arg(item));
    }
    if (values.empty()) {
        throw UsageError("empty spectrum");
    }
    return values;
}

constexpr unsigned kMaxVolumeDimension = 1024;

unsigned parse_dimension(const std::string& text) {
    if (text.empty() || text.size() > 6 ||
        !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw UsageError("invalid dimension '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(text));
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    unsigned lo = 0;
    unsigned hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = parse_dimension(text);
        } else {
            lo = parse_dimension(text.substr(0, dots));
            hi = parse_dimension(text.substr(dots + 2));
        }
    } catch (const UsageError&) {
        throw UsageError("invalid range '" + text + "' (expected N or LO..HI)");
    }
    if (lo == 0 || hi < lo) {
        throw UsageError("invalid range '" + text + "': need 1 <= lo <= hi");
    }
    if (hi > kMaxVolumeDimension) {
        throw UsageError("range upper bound exceeds " + std::to_string(kMaxVolumeDimension));
    }
    return {lo, hi};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw UsageError("cannot open output file '" + out_path + "'");
        }
        out << text;
    }
}

void emit_json(const Json& record, const std::string& out_path) {
    emit(record.dump(2) + "\n", out_path);
}

std::string csv_quote(const std::string& field) {
    return "\"" + field + "\"";
}

// --- volume -----------------------------------------------------------------

struct VolumeArgs {
    std::string range;
    std::string mode = "exact";
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
};

int run_volume(const VolumeArgs& args) {
    const auto [lo, hi] = parse_range(args.range);
    const bool mc = args.mode == "mc";
    if (!mc && args.mode != "exact") {
        throw UsageError("unknown mode '" + args.mode + "'");
    }
    if (mc && args.samples == 0) {
        throw UsageError("--samples must be >= 1");
    }

    struct Row {
        unsigned n;
        Rational exact;
        tnpoly::MCEstimate estimate;
    };
    std::vector<Row> rows;
    for (unsigned n = lo; n <= hi; ++n) {
        Row row{n, tnpoly::exact_volume(n), {}};
        if (mc) {
            row.estimate = tnpoly::mc_volume(n, args.samples, args.seed);
        }
        rows.push_back(std::move(row));
    }

    if (args.format == "json") {
        Json record;
        record["command"] = "volume";
        record["inputs"] = {{"range", args.range}, {"mode", args.mode}};
        Json result = Json::array();
        for (const Row& row : rows) {
            Json r;
            r["n"] = row.n;
            r["exact"] = tnpoly::format_rational(row.exact);
            r["float"] = tnpoly::to_double(row.exact);
            if (mc) {
                r["estimate"] = row.estimate.mean;
                r["std_error"] = row.estimate.std_error;
            }
            result.push_back(std::move(r));
        }
        record["result"] = std::move(result);
        if (mc) {
            record["metadata"] = {{"seed", args.seed},
                                  {"samples", args.samples},
                                  {"generator", tnpoly::kGeneratorName}};
        }
        emit_json(record, args.out);
    } else if (args.format == "csv") {
        std::string text = mc ? "n,exact,float,estimate,std_error,samples,seed\n"
                              : "n,exact,float\n";
        for (const Row& row : rows) {
            text += std::to_string(row.n);
            text += ',' + csv_quote(tnpoly::format_rational(row.exact));
            text += ',' + format_double(tnpoly::to_double(row.exact));
            if (mc) {
                text += ',' + format_double(row.estimate.mean);
                text += ',' + format_double(row.estimate.std_error);
                text += ',' + std::to_string(args.samples);
                text += ',' + std::to_string(args.seed);
            }
            text += '\n';
        }
        emit(text, args.out);
    } else {
        throw UsageError("unknown format '" + args.format + "'");
    }
    return 0;
}

// --- volume-complex -----------------------------------------------------------

struct VolumeComplexArgs {
    unsigned real_count = 0;
    unsigned pair_count = 0;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
};

int run_volume_complex(const VolumeComplexArgs& args) {
    if (args.real_count == 0 && args.pair_count == 0) {
        throw UsageError("requires r + c >= 1");
    }
    if (args.samples == 0) {
        throw UsageError("--samples must be >= 1");
    }
    const tnpoly::ComplexRegionParams params(args.real_count, args.pair_count);
    const tnpoly::AmbientVolume ambient = tnpoly::ambient_volume(params);
    const tnpoly::MCEstimate est = tnpoly::mc_volume_complex(params, args.samples, args.seed);

    if (args.format == "json") {
        Json record;
        record["command"] = "volume-complex";
        record["inputs"] = {{"r", args.real_count}, {"c", args.pair_count}};
        record["result"] = {{"estimate", est.mean},
                            {"std_error", est.std_error},
                            {"ambient", {{"coefficient", tnpoly::format_rational(ambient.coefficient)},
                                         {"pi_power", ambient.pi_power},
                                         {"float", ambient.value()}}}};
        record["metadata"] = {{"seed", args.seed},
                              {"samples", args.samples},
                              {"generator", tnpoly::kGeneratorName}};
        emit_json(record, args.out);
    } else if (args.format == "csv") {
        std::string text = "r,c,estimate,std_error,samples,seed\n";
        text += std::to_string(args.real_count) + ',' + std::to_string(args.pair_count);
        text += ',' + format_double(est.mean);
        text += ',' + format_double(est.std_error);
        text += ',' + std::to_string(args.samples);
        text += ',' + std::to_string(args.seed);
        text += '\n';
        emit(text, args.out);
    } else {
        throw UsageError("unknown format '" + args.format + "'");
    }
    return 0;
}

// --- dist -------------------------------------------------------------------

struct DistArgs {
    std::string kind;
    unsigned n = 0;
    std::string a;
    std::string b;
    std::vector<std::string> grid;
    std::string format = "json";
    std::string out;
};

int run_dist(const DistArgs& args) {
    if (args.kind != "pdf" && args.kind != "cdf") {
        throw UsageError("expected 'pdf' or 'cdf', got '" + args.kind + "'");
    }
    if (args.n == 0) {
        throw UsageError("n must be >= 1");
    }
    const Rational a = parse_rational_arg(args.a);
    const Rational b = parse_rational_arg(args.b);
    if (a >= b) {
        throw UsageError("requires a < b");
    }
    const tnpoly::UniformSumParams params(args.n, a, b);
    const bool pdf = args.kind == "pdf";

    struct Row {
        Rational x;
        Rational exact;
        double approx;
    };
    std::vector<Row> rows;
    for (const std::string& text : args.grid) {
        const Rational x = parse_rational_arg(text);
        const Rational exact = pdf ? tnpoly::us_pdf(params, x) : tnpoly::us_cdf(params, x);
        const double approx = pdf ? tnpoly::us_pdf_float(params, tnpoly::to_double(x))
                                  : tnpoly::us_cdf_float(params, tnpoly::to_double(x));
        rows.push_back(Row{x, exact, approx});
    }

    if (args.format == "json") {
        Json record;
        record["command"] = "dist";
        record["inputs"] = {{"kind", args.kind},
                            {"n", args.n},
                            {"a", tnpoly::format_rational(a)},
                            {"b", tnpoly::format_rational(b)}};
        Json result = Json::array();
        for (const Row& row : rows) {
            Json r;
            r["x"] = tnpoly::format_rational(row.x);
            r["exact"] = tnpoly::format_rational(row.exact);
            r["float"] = row.approx;
            result.push_back(std::move(r));
        }
        record["result"] = std::move(result);
        emit_json(record, args.out);
    } else if (args.format == "csv") {
        std::string text = "x,exact,float\n";
        for (const Row& row : rows) {
            text += csv_quote(tnpoly::format_rational(row.x));
            text += ',' + csv_quote(tnpoly::format_rational(row.exact));
            text += ',' + format_double(row.approx);
            text += '\n';
        }
        emit(text, args.out);
    } else {
        throw UsageError("unknown format '" + args.format + "'");
    }
    return 0;
}

// --- spectra ----------------------------------------------------------------

int run_gen(const std::string& which, unsigned k, const std::string& out) {
    if (k < 2) {
        throw UsageError("k must be >= 2");
    }
    const tnpoly::Spectrum sigma =
        which == "gen-odd" ? tnpoly::gen_odd_nonrealizable(k) : tnpoly::gen_even_nonrealizable(k);
    Json record;
    record["command"] = "spectra " + which;
    record["inputs"] = {{"k", k}};
    record["result"] = {{"spectrum", tnpoly::to_json(sigma)},
                        {"s1", tnpoly::format_rational(tnpoly::s1(sigma))}};
    emit_json(record, out);
    return 0;
}

int run_decide(const std::string& spectrum_text, const std::string& out) {
    const tnpoly::Spectrum sigma(parse_spectrum_arg(spectrum_text));
    const tnpoly::DecideResult decision = tnpoly::decide_restricted_realizable(sigma);
    if (decision.status == tnpoly::DecideStatus::HypothesisViolated) {
        throw PreconditionError(std::string("hypothesis violated: ") +
                                tnpoly::to_string(decision.violation));
    }
    Json record;
    record["command"] = "spectra decide";
    record["inputs"] = {{"spectrum", tnpoly::to_json(sigma)}};
    Json result;
    if (decision.status == tnpoly::DecideStatus::Realizable) {
        result["status"] = "REALIZABLE";
        result["certificate"] = tnpoly::to_json(*decision.certificate);
    } else {
        result["status"] = "NOT_REALIZABLE";
    }
    record["result"] = std::move(result);
    emit_json(record, out);
    return 0;
}

int run_realize(const std::string& spectrum_text, const std::string& out) {
    const tnpoly::Spectrum sigma(parse_spectrum_arg(spectrum_text));
    if (!tnpoly::is_suleimanova(sigma)) {
        throw PreconditionError("spectrum is not Suleimanova");
    }
    const tnpoly::NonnegMatrix matrix = tnpoly::companion_realize(sigma);
    Json record;
    record["command"] = "spectra realize";
    record["inputs"] = {{"spectrum", tnpoly::to_json(sigma)}};
    record["result"] = {{"order", matrix.order()},
                        {"matrix", tnpoly::to_json(matrix)},
                        {"verified", tnpoly::verify_realization(matrix, sigma)}};
    emit_json(record, out);
    return 0;
}

int run_check(const std::string& in_path, const std::string& expect_text,
              const std::string& out) {
    Json record;
    try {
        if (in_path.empty()) {
            record = Json::parse(std::cin);
        } else {
            std::ifstream in(in_path);
            if (!in) {
                throw UsageError("cannot open input file '" + in_path + "'");
            }
            record = Json::parse(in);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("invalid JSON input: ") + e.what());
    }

    if (!record.contains("result") || !record["result"].contains("certificate")) {
        throw PreconditionError("input record carries no certificate");
    }
    const tnpoly::PartitionCertificate cert =
        tnpoly::certificate_from_json(record["result"]["certificate"]);

    bool verified = true;
    std::string reason;
    for (const tnpoly::Spectrum& part : cert.parts) {
        if (!tnpoly::is_suleimanova(part)) {
            verified = false;
            reason = "a part is not Suleimanova";
        }
    }
    const tnpoly::Spectrum combined = cert.combined();
    if (verified && !expect_text.empty()) {
        const tnpoly::Spectrum expected(parse_spectrum_arg(expect_text));
        if (!(combined == expected)) {
            verified = false;
            reason = "certificate union differs from the expected spectrum";
        }
    }
    if (verified && !tnpoly::verify_realization(tnpoly::realize_union(cert), combined)) {
        verified = false;
        reason = "realizing matrix fails the characteristic-polynomial check";
    }

    Json outcome;
    outcome["command"] = "spectra check";
    outcome["result"] = {{"verified", verified}};
    if (!verified) {
        outcome["result"]["reason"] = reason;
    }
    emit_json(outcome, out);
    return verified ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-nonnegative polytope volumes and trace-zero spectra"};
    app.require_subcommand(1);

    VolumeArgs volume_args;
    auto* volume = app.add_subcommand("volume", "exact or Monte Carlo volume of T^n");
    volume->add_option("range", volume_args.range, "dimension N or range LO..HI")->required();
    volume->add_option("--mode", volume_args.mode, "exact|mc")->capture_default_str();
    volume->add_option("--samples", volume_args.samples, "Monte Carlo sample count")
        ->capture_default_str();
    volume->add_option("--seed", volume_args.seed, "PRNG seed")->capture_default_str();
    volume->add_option("--format", volume_args.format, "json|csv")->capture_default_str();
    volume->add_option("--out", volume_args.out, "write output to a file");

    VolumeComplexArgs complex_args;
    auto* volume_complex =
        app.add_subcommand("volume-complex", "Monte Carlo volume of the complex region TN_{r,c}");
    volume_complex->add_option("r", complex_args.real_count, "real eigenvalue count")->required();
    volume_complex->add_option("c", complex_args.pair_count, "conjugate-pair count")->required();
    volume_complex->add_option("--samples", complex_args.samples, "Monte Carlo sample count")
        ->capture_default_str();
    volume_complex->add_option("--seed", complex_args.seed, "PRNG seed")->capture_default_str();
    volume_complex->add_option("--format", complex_args.format, "json|csv")->capture_default_str();
    volume_complex->add_option("--out", complex_args.out, "write output to a file");

    DistArgs dist_args;
    auto* dist = app.add_subcommand("dist", "[a,b]-uniform-sum pdf/cdf tables");
    dist->add_option("kind", dist_args.kind, "pdf|cdf")->required();
    dist->add_option("n", dist_args.n, "number of summands")->required();
    dist->add_option("a", dist_args.a, "interval left end (rational)")->required();
    dist->add_option("b", dist_args.b, "interval right end (rational)")->required();
    dist->add_option("x", dist_args.grid, "evaluation points (rationals)")->required();
    dist->add_option("--format", dist_args.format, "json|csv")->capture_default_str();
    dist->add_option("--out", dist_args.out, "write output to a file");

    auto* spectra = app.add_subcommand("spectra", "trace-zero spectrum tooling");
    spectra->require_subcommand(1);

    unsigned gen_k = 0;
    std::string gen_out;
    auto* gen_odd = spectra->add_subcommand("gen-odd", "non-realizable spectrum of order 2k+1");
    gen_odd->add_option("k", gen_k, "family parameter (k >= 2)")->required();
    gen_odd->add_option("--out", gen_out, "write output to a file");
    auto* gen_even = spectra->add_subcommand("gen-even", "non-realizable spectrum of order 2k+2");
    gen_even->add_option("k", gen_k, "family parameter (k >= 2)")->required();
    gen_even->add_option("--out", gen_out, "write output to a file");

    std::string decide_spectrum;
    std::string decide_out;
    auto* decide = spectra->add_subcommand("decide", "restricted-class realizability");
    decide->add_option("spectrum", decide_spectrum, "comma-separated rationals")->required();
    decide->add_option("--out", decide_out, "write output to a file");

    std::string realize_spectrum;
    std::string realize_out;
    auto* realize =
        spectra->add_subcommand("realize", "companion matrix of a Suleimanova spectrum");
    realize->add_option("spectrum", realize_spectrum, "comma-separated rationals")->required();
    realize->add_option("--out", realize_out, "write output to a file");

    std::string check_in;
    std::string check_expect;
    std::string check_out;
    auto* check = spectra->add_subcommand("check", "re-verify a decide certificate");
    check->add_option("--in", check_in, "decide output file (default: stdin)");
    check->add_option("--expect", check_expect, "spectrum the certificate must union to");
    check->add_option("--out", check_out, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (volume->parsed()) {
            return run_volume(volume_args);
        }
        if (volume_complex->parsed()) {
            return run_volume_complex(complex_args);
        }
        if (dist->parsed()) {
            return run_dist(dist_args);
        }
        if (gen_odd->parsed()) {
            return run_gen("gen-odd", gen_k, gen_out);
        }
        if (gen_even->parsed()) {
            return run_gen("gen-even", gen_k, gen_out);
        }
        if (decide->parsed()) {
            return run_decide(decide_spectrum, decide_out);
        }
        if (realize->parsed()) {
            return run_realize(realize_spectrum, realize_out);
        }
        if (check->parsed()) {
            return run_check(check_in, check_expect, check_out);
        }
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
}
