// Command line front end: parse code specs, run enumerators, apply the
// MacWilliams transforms, and drive the verification suites.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mspotty/codespec.hpp"
#include "mspotty/enumerators.hpp"
#include "mspotty/verify.hpp"

namespace {

using namespace mspotty;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitMismatch = 5;

struct CommonOptions {
    uint32_t t = 1;
    std::string format = "text";
    uint64_t budget = kDefaultBudget;
    uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--t", opts.t, "spotty parameter t (default 1)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", opts.budget, "enumeration budget in vectors/pairs");
    cmd->add_option("--seed", opts.seed, "random seed for verification suites");
}

MultiPoly direct_enumerator(const std::string& kind, const LinearCode& code,
                            const SpottyParams& params, uint64_t budget) {
    (void)budget;
    if (kind == "hamming") return hamming_enumerator(code, params);
    if (kind == "lee") return lee_enumerator(code, params);
    return split_enumerator(code, params);
}

MultiPoly transform_enumerator(const std::string& kind, const LinearCode& code,
                               const SpottyParams& params, KernelCache& cache) {
    const BigInt size(code.size());
    const uint64_t ell = code.ring().size();
    if (kind == "hamming")
        return macwilliams_hamming(alpha_distribution(code), size, ell, params, cache);
    if (kind == "lee")
        return lee_macwilliams(composition_distribution(code), size, code.ring(), params, cache);
    return split_macwilliams(profile_distribution(code), size, ell, params, cache);
}

void print_poly(const MultiPoly& poly, const CommonOptions& opts, const std::string& kind) {
    if (opts.format == "json") {
        nlohmann::json out{{"kind", kind},
                           {"t", opts.t},
                           {"poly", nlohmann::json::parse(poly.to_json_string())},
                           {"sum", poly.value_at_ones().str()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << poly.to_text() << "\n";
    }
}

int cmd_enum(const std::string& file, const std::string& kind, const CommonOptions& opts) {
    const CodeSpecFile spec = parse_code_spec_file(file);
    const LinearCode code = spec.first_code(opts.budget);
    const SpottyParams params(spec.b, opts.t);
    print_poly(direct_enumerator(kind, code, params, opts.budget), opts, kind);
    return kExitOk;
}

int cmd_dual_enum(const std::string& file, const std::string& kind, const std::string& method,
                  const CommonOptions& opts) {
    const CodeSpecFile spec = parse_code_spec_file(file);
    const LinearCode code = spec.first_code(opts.budget);
    const SpottyParams params(spec.b, opts.t);
    KernelCache cache;

    if (method == "transform") {
        print_poly(transform_enumerator(kind, code, params, cache), opts, kind);
        return kExitOk;
    }
    if (method == "brute") {
        const LinearCode dual = dual_brute(code, opts.budget);
        print_poly(direct_enumerator(kind, dual, params, opts.budget), opts, kind);
        return kExitOk;
    }
    const MultiPoly via_transform = transform_enumerator(kind, code, params, cache);
    const LinearCode dual = dual_brute(code, opts.budget);
    const MultiPoly via_brute = direct_enumerator(kind, dual, params, opts.budget);
    const bool match = via_transform == via_brute;
    if (opts.format == "json") {
        nlohmann::json out{{"kind", kind},
                           {"t", opts.t},
                           {"method", "both"},
                           {"transform", nlohmann::json::parse(via_transform.to_json_string())},
                           {"brute", nlohmann::json::parse(via_brute.to_json_string())},
                           {"match", match},
                           {"sum", via_brute.value_at_ones().str()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "transform: " << via_transform.to_text() << "\n";
        std::cout << "brute: " << via_brute.to_text() << "\n";
        std::cout << "match: " << (match ? "yes" : "no") << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_joint(const std::string& file, const std::string& variant, const CommonOptions& opts) {
    const CodeSpecFile spec = parse_code_spec_file(file);
    if (!spec.has_second())
        throw ParseError("joint operations need a second code block (gen2 lines)");
    const LinearCode c = spec.first_code(opts.budget);
    const LinearCode d = spec.second_code(opts.budget);
    const SpottyParams params(spec.b, opts.t);
    KernelCache cache;

    MultiPoly poly;
    if (variant == "plain") {
        poly = joint_enumerator(c, d, params, opts.budget);
    } else {
        const JointStats stats = joint_statistics(c, d, opts.budget);
        const JointDual which = variant == "dual_c"   ? JointDual::DualFirst
                                : variant == "dual_d" ? JointDual::DualSecond
                                                       : JointDual::DualBoth;
        poly = joint_macwilliams(which, stats, BigInt(c.size()), BigInt(d.size()),
                                 c.ring().size(), params, cache);
    }
    print_poly(poly, opts, "joint-" + variant);
    return kExitOk;
}

int cmd_verify(const std::string& suite, size_t count, const CommonOptions& opts) {
    KernelCache cache;
    std::vector<VerificationReport> reports;
    if (suite == "lemmas" || suite == "all") {
        auto lemma_reports = run_lemma_suite(opts.seed, opts.budget, cache);
        reports.insert(reports.end(), std::make_move_iterator(lemma_reports.begin()),
                       std::make_move_iterator(lemma_reports.end()));
    }
    if (suite == "identities" || suite == "all") {
        SweepOptions sweep;
        sweep.seed = opts.seed;
        sweep.instances = count;
        sweep.budget = opts.budget;
        auto sweep_reports = run_identity_sweep(sweep, cache);
        reports.insert(reports.end(), std::make_move_iterator(sweep_reports.begin()),
                       std::make_move_iterator(sweep_reports.end()));
    }
    size_t assertions = 0, failures = 0;
    for (const auto& report : reports) {
        report.write_json_lines(std::cout);
        assertions += report.assertions.size();
        failures += report.failures();
    }
    std::cerr << "checked " << assertions << " assertions across " << reports.size()
              << " reports, " << failures << " failed\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-spotty weight enumerators and MacWilliams transforms over finite "
                 "commutative Frobenius rings"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string file, kind = "hamming", method = "transform", variant = "plain";
    std::string suite = "all";
    size_t count = 200;

    CLI::App* enum_cmd = app.add_subcommand("enum", "direct weight enumerator of a code");
    enum_cmd->add_option("file", file, "code spec file")->required();
    enum_cmd->add_option("--kind", kind, "hamming | lee | split")
        ->check(CLI::IsMember({"hamming", "lee", "split"}));
    add_common(enum_cmd, opts);

    CLI::App* dual_cmd = app.add_subcommand("dual-enum", "weight enumerator of the dual code");
    dual_cmd->add_option("file", file, "code spec file")->required();
    dual_cmd->add_option("--kind", kind, "hamming | lee | split")
        ->check(CLI::IsMember({"hamming", "lee", "split"}));
    dual_cmd->add_option("--method", method, "transform | brute | both")
        ->check(CLI::IsMember({"transform", "brute", "both"}));
    add_common(dual_cmd, opts);

    CLI::App* joint_cmd = app.add_subcommand("joint", "joint enumerator of a code pair");
    joint_cmd->add_option("file", file, "code spec file with gen2 lines")->required();
    joint_cmd->add_option("--variant", variant, "plain | dual_c | dual_d | dual_both")
        ->check(CLI::IsMember({"plain", "dual_c", "dual_d", "dual_both"}));
    add_common(joint_cmd, opts);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite, "lemmas | identities | all")
        ->check(CLI::IsMember({"lemmas", "identities", "all"}));
    verify_cmd->add_option("--count", count, "number of randomized identity instances");
    add_common(verify_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (enum_cmd->parsed()) return cmd_enum(file, kind, opts);
        if (dual_cmd->parsed()) return cmd_dual_enum(file, kind, method, opts);
        if (joint_cmd->parsed()) return cmd_joint(file, variant, opts);
        return cmd_verify(suite, count, opts);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << " (required " << e.required << ")\n";
        return kExitBudget;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
