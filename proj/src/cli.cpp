#include "okdens/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"

#include "okdens/error.hpp"
#include "okdens/io.hpp"
#include "okdens/montecarlo.hpp"
#include "okdens/splitting.hpp"
#include "okdens/unimodular.hpp"
#include "okdens/zeta.hpp"

namespace okdens {

std::vector<BigInt> resolve_field_spec(const std::string& spec)
{
    static const std::map<std::string, std::vector<long>> aliases = {
        {"Q", {0, 1}},
        {"Q(sqrt2)", {-2, 0, 1}},
        {"x^3+x+1", {1, 1, 0, 1}},
        {"x^5-13x-7", {-7, -13, 0, 0, 0, 1}},
    };
    if (auto it = aliases.find(spec); it != aliases.end())
        return std::vector<BigInt>(it->second.begin(), it->second.end());
    return parse_coefficient_text(spec);
}

namespace {

struct CommonFlags {
    std::string field = "Q";
    bool assume_irreducible = false;
    bool allow_nonmaximal = false;

    FieldPtr build() const
    {
        FieldOptions opts;
        opts.assume_irreducible = assume_irreducible;
        opts.allow_nonmaximal = allow_nonmaximal;
        return std::make_shared<const NumberField>(parse_field(resolve_field_spec(field), opts));
    }
};

void add_field_flags(CLI::App* sub, CommonFlags& flags, bool required = true)
{
    auto* opt = sub->add_option("--field", flags.field, "alias (Q, Q(sqrt2), x^3+x+1, x^5-13x-7) or coefficients c0,...,ck");
    if (required) opt->required();
    sub->add_flag("--assume-irreducible", flags.assume_irreducible, "accept f without an irreducibility certificate");
    sub->add_flag("--allow-nonmaximal", flags.allow_nonmaximal, "compute over Z[theta] even where it is not maximal");
}

unsigned default_workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("OKDENS_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used, 0);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::InvalidInput, std::string("OKDENS_SEED is not an unsigned integer: ") + env);
    }
    return 0;
}

int exit_code_for(ErrorCode code)
{
    return code == ErrorCode::FactorizationTooHard ? kExitFailure : kExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"okdens: unimodular matrices over rings of integers and their densities"};
    app.require_subcommand(1);

    CommonFlags flags;
    int n = 0, m = 0;
    std::uint64_t prime_bound = kDefaultPrimeBound;
    std::uint64_t bound = kDefaultBound;
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t seed = 0;
    unsigned workers = default_workers();
    std::uint64_t show_primes = 20;
    std::string matrix_path, method = "hnf", csv_path;
    std::uint64_t b_start = 0, b_end = 0, b_step = 1;

    auto* info = app.add_subcommand("field-info", "degree, discriminant, maximality and small prime splittings");
    add_field_flags(info, flags);
    info->add_option("--show-primes", show_primes, "list splittings of primes up to this bound")->capture_default_str();

    auto* check = app.add_subcommand("check", "decide unimodularity of a matrix given as JSON");
    check->add_option("--matrix", matrix_path, "path to the matrix JSON file")->required();
    check->add_option("--method", method, "hnf, modp or both")->check(CLI::IsMember({"hnf", "modp", "both"}))->capture_default_str();
    check->add_flag("--assume-irreducible", flags.assume_irreducible);
    check->add_flag("--allow-nonmaximal", flags.allow_nonmaximal);

    auto* density = app.add_subcommand("density", "predicted density prod 1/zeta_K(m-i) by a truncated Euler product");
    add_field_flags(density, flags);
    density->add_option("--n", n)->required();
    density->add_option("--m", m)->required();
    density->add_option("--prime-bound", prime_bound)->capture_default_str();
    density->add_option("--workers", workers);

    auto* experiment = app.add_subcommand("experiment", "Monte-Carlo estimate at one coordinate bound");
    add_field_flags(experiment, flags);
    experiment->add_option("--n", n)->required();
    experiment->add_option("--m", m)->required();
    experiment->add_option("--bound", bound)->capture_default_str();
    experiment->add_option("--samples", samples)->capture_default_str();
    auto* seed_opt_e = experiment->add_option("--seed", seed, "master seed (default 0, or $OKDENS_SEED)");
    experiment->add_option("--workers", workers);
    experiment->add_option("--prime-bound", prime_bound)->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Monte-Carlo estimates over a range of bounds, written as CSV");
    add_field_flags(sweep, flags);
    sweep->add_option("--n", n)->required();
    sweep->add_option("--m", m)->required();
    sweep->add_option("--b-start", b_start)->required();
    sweep->add_option("--b-end", b_end)->required();
    sweep->add_option("--b-step", b_step)->required();
    sweep->add_option("--samples", samples)->capture_default_str();
    auto* seed_opt_s = sweep->add_option("--seed", seed, "master seed (default 0, or $OKDENS_SEED)");
    sweep->add_option("--workers", workers);
    sweep->add_option("--prime-bound", prime_bound)->capture_default_str();
    sweep->add_option("--csv", csv_path, "output CSV path ('-' for stdout)")->required();

    auto* brute = app.add_subcommand("brute", "exact proportion by exhaustive enumeration at a tiny bound");
    add_field_flags(brute, flags);
    brute->add_option("--n", n)->required();
    brute->add_option("--m", m)->required();
    brute->add_option("--bound", bound)->required();
    brute->add_option("--workers", workers);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("okdens");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (seed_opt_e->count() == 0 && seed_opt_s->count() == 0) seed = default_seed();
        auto positive = [](long v, const char* what) {
            if (v < 1) throw Error(ErrorCode::BadShape, std::string(what) + " must be positive");
        };
        if (workers == 0) throw Error(ErrorCode::InvalidInput, "--workers must be at least 1");

        if (info->parsed()) {
            const FieldPtr field = flags.build();
            Json j = field_to_json(*field);
            Json splits = Json::array();
            for (std::uint64_t p : primes_in_range(2, show_primes + 1)) splits.push_back(split_to_json(split_prime(*field, p)));
            j["splits"] = splits;
            out << j.dump(2) << '\n';
            return kExitOk;
        }
        if (check->parsed()) {
            std::ifstream in(matrix_path);
            if (!in) throw Error(ErrorCode::InvalidInput, "cannot read matrix file '" + matrix_path + "'");
            Json j;
            try {
                j = Json::parse(in);
            } catch (const Json::exception& e) {
                throw Error(ErrorCode::InvalidInput, std::string("malformed matrix JSON: ") + e.what());
            }
            FieldOptions opts;
            opts.assume_irreducible = flags.assume_irreducible;
            opts.allow_nonmaximal = flags.allow_nonmaximal;
            const MatrixOK mat = matrix_from_json(j, opts);
            bool verdict = false;
            if (method == "both") {
                const auto a = is_unimodular(mat);
                const auto b = is_unimodular_modp(mat);
                verdict = a.verdict;
                out << Json{{"reports", {report_to_json(a), report_to_json(b)}}, {"agree", a.verdict == b.verdict}}.dump(2)
                    << '\n';
                if (a.verdict != b.verdict) {
                    err << "okdens: HNF and mod-p verdicts disagree\n";
                    return kExitFailure;
                }
            } else {
                const auto r = method == "hnf" ? is_unimodular(mat) : is_unimodular_modp(mat);
                verdict = r.verdict;
                out << report_to_json(r).dump(2) << '\n';
            }
            return verdict ? kExitOk : kExitNotUnimodular;
        }
        if (density->parsed()) {
            positive(n, "--n");
            const FieldPtr field = flags.build();
            const auto r = predicted_density(*field, n, m, prime_bound, workers);
            Json j = density_to_json(r);
            j["field"] = field_to_json(*field)["coeffs"];
            j["warnings"] = field->warnings();
            out << j.dump(2) << '\n';
            return kExitOk;
        }
        if (experiment->parsed()) {
            positive(n, "--n");
            const FieldPtr field = flags.build();
            ExperimentOptions opts;
            opts.workers = workers;
            opts.prime_bound = prime_bound;
            const auto r = run_experiment(field, static_cast<std::size_t>(n), static_cast<std::size_t>(m), bound,
                                          samples, seed, opts);
            out << experiment_to_json(r).dump(2) << '\n';
            return kExitOk;
        }
        if (sweep->parsed()) {
            positive(n, "--n");
            if (b_step < 1 || b_start < 1 || b_end < b_start)
                throw Error(ErrorCode::BadBound, "need 1 <= b-start <= b-end and b-step >= 1");
            const FieldPtr field = flags.build();
            std::vector<std::uint64_t> bounds;
            for (std::uint64_t b = b_start; b <= b_end; b += b_step) bounds.push_back(b);
            ExperimentOptions opts;
            opts.workers = workers;
            opts.prime_bound = prime_bound;
            const auto reports =
                sweep_B(field, static_cast<std::size_t>(n), static_cast<std::size_t>(m), bounds, samples, seed, opts);
            if (csv_path == "-") {
                write_sweep_csv(out, reports);
            } else {
                std::ofstream csv(csv_path);
                if (!csv) throw Error(ErrorCode::InvalidInput, "cannot write CSV file '" + csv_path + "'");
                write_sweep_csv(csv, reports);
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(experiment_to_json(r));
                out << arr.dump(2) << '\n';
            }
            return kExitOk;
        }
        if (brute->parsed()) {
            positive(n, "--n");
            positive(m, "--m");
            const FieldPtr field = flags.build();
            const auto d = brute_force_density(field, static_cast<std::size_t>(n), static_cast<std::size_t>(m), bound,
                                               workers);
            Json j = exact_density_to_json(d);
            j["n"] = n;
            j["m"] = m;
            j["B"] = bound;
            j["field"] = field_to_json(*field)["coeffs"];
            out << j.dump(2) << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "okdens: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "okdens: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitInputError;
}

}  // namespace okdens
