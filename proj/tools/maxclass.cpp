// Command-line front end: theta / census / verify subcommands.
//
// Exit codes: 0 success, 1 verification failure or cross-method disagreement,
// 2 usage error, 3 budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "maxclass/census.hpp"
#include "maxclass/report.hpp"
#include "maxclass/subgroups.hpp"
#include "maxclass/textio.hpp"
#include "maxclass/verify.hpp"

namespace {

using namespace maxclass;

Family family_from_string(const std::string& s) {
    if (s == "D") return Family::Dihedral;
    if (s == "SD") return Family::Semidihedral;
    if (s == "Q") return Family::Quaternion;
    throw std::invalid_argument("unknown family: " + s);
}

Involution sigma_from_string(const std::string& s) {
    if (s == "star") return Involution::Star;
    if (s == "circledast") return Involution::Circledast;
    throw std::invalid_argument("unknown involution: " + s);
}

NRange parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(s);
        return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

// 0 on success, 2 on I/O failure.
int write_out(const std::string& payload, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_file, std::ios::binary);
    f << payload;
    f.flush();
    if (!f) {
        std::cerr << "error: cannot write " << out_file << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-group censuses for F2 group algebras of 2-groups of maximal class"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int workers = 1;
    std::uint64_t seed = 1;
    double budget = -1.0;
    std::string out_file;
    app.add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--workers", workers, "worker threads (default 1)")
        ->envname("MAXCLASS_WORKERS");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--budget", budget, "time budget in seconds")->envname("MAXCLASS_BUDGET");
    app.add_option("--out", out_file, "write the report to a file instead of stdout");

    auto* theta = app.add_subcommand("theta", "count solutions of x^2 = 1 in V(F2G)");
    std::string family_str, method_str, order_source_str = "formula";
    int theta_n = 0;
    bool check = false;
    theta->add_option("--family", family_str, "D|SD|Q")
        ->required()
        ->check(CLI::IsMember({"D", "SD", "Q"}));
    theta->add_option("--n", theta_n, "cyclic subgroup has order 2^n")->required();
    theta->add_option("--method", method_str, "formula|brute|structural|proof")
        ->required()
        ->check(CLI::IsMember({"formula", "brute", "structural", "proof"}));
    theta->add_option("--order-source", order_source_str, "formula|enumerated (proof method)")
        ->check(CLI::IsMember({"formula", "enumerated"}));
    theta->add_flag("--check", check, "also compare against the closed formula");

    auto* census = app.add_subcommand("census", "order of one distinguished subgroup of V(F2C)");
    std::string sigma_str = "star", subgroup_str, z_str;
    int census_n = 0;
    unsigned census_i = 0;
    census->add_option("--n", census_n)->required();
    census->add_option("--sigma", sigma_str, "star|circledast")
        ->check(CLI::IsMember({"star", "circledast"}));
    census->add_option("--subgroup", subgroup_str, "v|v2|si|ssym|vuni|w|j|h|l|m")
        ->required()
        ->check(CLI::IsMember({"v", "v2", "si", "ssym", "vuni", "w", "j", "h", "l", "m"}));
    census->add_option("--i", census_i, "index for si|h|l");
    census->add_option("--z", z_str, "element for m, e.g. \"1+a\" or \"0x06@n=3\"");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_str, range_str;
    int samples = 10000;
    verify->add_option("--suite", suite_str,
                       "lemma1|lemma3|lemma4|lemma5|lemma6|lemma7|lemma8|lemma10|"
                       "eq2|eq13|theorem|corollary|all")
        ->required();
    verify->add_option("--n-range", range_str, "inclusive range, e.g. 2..4");
    verify->add_option("--samples", samples, "sample count for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = format_from_string(format);

        if (theta->parsed()) {
            const Family family = family_from_string(family_str);
            CountOptions copts{workers, budget >= 0 ? std::optional<double>(budget) : std::nullopt};

            CensusReport rep;
            if (method_str == "formula") {
                const auto t0 = std::chrono::steady_clock::now();
                rep.family = family;
                rep.n = theta_n;
                rep.method = CountMethod::Formula;
                rep.total = theta_formula(family, theta_n);
                rep.type2 = family == Family::Dihedral       ? pow2((1u << theta_n) + 1)
                            : family == Family::Semidihedral ? pow2(1u << theta_n)
                                                             : BigInt(0);
                rep.type1 = rep.total - rep.type2;
                rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
            } else if (method_str == "brute") {
                const MCContext ctx = make_group_algebra(family, theta_n);
                rep = count_brute(ctx, copts);
            } else if (method_str == "structural") {
                const MCContext ctx = make_group_algebra(family, theta_n);
                rep = count_structural(ctx, copts);
            } else {
                rep = count_proof_decomposition(family, theta_n,
                                                order_source_str == "enumerated"
                                                    ? OrderSource::Enumerated
                                                    : OrderSource::Formula);
            }

            const int io = write_out(emit(rep, fmt), out_file);
            if (io) return io;
            if (rep.budget_exhausted) return 3;
            if (check && rep.total != theta_formula(family, theta_n)) {
                std::cerr << "disagreement: " << to_string(rep.method) << " total "
                          << rep.total.str() << " != formula "
                          << theta_formula(family, theta_n).str() << "\n";
                return 1;
            }
            return 0;
        }

        if (census->parsed()) {
            const CyclicContext ctx = make_context(census_n);
            const Involution sigma = sigma_from_string(sigma_str);

            SubgroupSpec spec;
            if (subgroup_str == "v") spec = SubgroupSpec::full_v();
            else if (subgroup_str == "v2") spec = SubgroupSpec::lower_layer();
            else if (subgroup_str == "si") spec = SubgroupSpec::stabilizer(census_i);
            else if (subgroup_str == "ssym") spec = SubgroupSpec::symmetric(sigma);
            else if (subgroup_str == "vuni") spec = SubgroupSpec::unitary(sigma);
            else if (subgroup_str == "w") spec = SubgroupSpec::phi_image(sigma);
            else if (subgroup_str == "j") spec = SubgroupSpec::psi_even(sigma);
            else if (subgroup_str == "h") spec = SubgroupSpec::h(sigma, census_i);
            else if (subgroup_str == "l") spec = SubgroupSpec::l(sigma, census_i);
            else {
                if (z_str.empty())
                    throw std::invalid_argument("--subgroup m requires --z");
                spec = SubgroupSpec::m(sigma, parse_elem(z_str, ctx));
            }

            const auto t0 = std::chrono::steady_clock::now();
            // Exhaustive up to n = 4; affine-linear kinds fall back to a
            // kernel-dimension count beyond that.
            const BigInt order = census_n <= 4 ? BigInt(enumerate(ctx, spec).order())
                                               : order_via_linear(ctx, spec);
            SubgroupReport rep;
            rep.spec = to_string(spec);
            rep.n = census_n;
            rep.order = order;
            rep.empty = order == 0;
            rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            return write_out(emit(rep, fmt), out_file);
        }

        // verify
        VerifyOptions vopts;
        vopts.samples = samples;
        vopts.seed = seed;
        vopts.workers = workers;
        if (!range_str.empty()) vopts.range = parse_range(range_str);
        const VerifyReport rep = run_verify(suite_from_string(suite_str), vopts);
        const int io = write_out(emit(rep, fmt), out_file);
        if (io) return io;
        return rep.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
