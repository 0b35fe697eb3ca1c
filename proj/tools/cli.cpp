#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "disq/error.hpp"
#include "disq/experiment.hpp"
#include "disq/protocol.hpp"
#include "disq/resources.hpp"
#include "disq/serialize.hpp"

namespace disq::cli {

namespace {

struct OrderOptions {
    std::uint64_t n = 0;
    std::optional<std::uint64_t> a;
    std::string epsilon = "0.25";
    std::optional<int> precision;
    std::size_t shots = 1;
    std::optional<std::uint64_t> seed;
    std::string engine = "distributed";
    std::string mode = "sequential-teleport";
    std::string teleport = "faithful";
    std::string format = "json";
    std::string output;
    unsigned threads = 0;
};

struct FactorOptions {
    std::uint64_t n = 0;
    std::string epsilon = "0.25";
    std::optional<std::uint64_t> seed;
    int max_attempts = 10;
    std::string engine = "distributed";
    std::string format = "text";
};

struct ResourceOptions {
    int L = 0;
    std::uint64_t n = 0;
    std::string epsilon = "0.25";
    int aux = 0;
    std::string sweep;
    std::string format;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("DISQ_SEED"); env != nullptr && *env != '\0') {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw DomainError(std::string("DISQ_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    return 1;
}

// Picks a base coprime to N from the run's seed; stream index ~0 keeps it apart from the shots.
std::uint64_t pick_base(std::uint64_t n, std::uint64_t seed) {
    if (n <= 3) return n - 1;
    Rng rng = derive_stream(seed, ~std::uint64_t{0});
    while (true) {
        const std::uint64_t a = rng.uniform_int(2, n - 1);
        if (gcd(a, n) == 1) return a;
    }
}

int cmd_order(const OrderOptions& opt, std::ostream& out) {
    if (opt.n < 2) throw DomainError("--N must be >= 2");
    if (opt.shots < 1) throw DomainError("--shots must be >= 1");

    RunSpec spec;
    spec.n = opt.n;
    spec.seed = resolve_seed(opt.seed);
    spec.a = opt.a ? *opt.a : pick_base(opt.n, spec.seed);
    spec.epsilon = Rational::parse(opt.epsilon);
    spec.precision = opt.precision;
    spec.engine = parse_engine(opt.engine);
    spec.mode = parse_mode(opt.mode);
    spec.teleport = opt.teleport == "relabel" ? TeleportMode::relabel : TeleportMode::faithful;
    spec.shots = opt.shots;
    spec.threads = opt.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opt.threads;

    const ProtocolParams params = params_for(spec);
    const auto records = run_shots(spec);
    const RunSummary summary = summarize(spec, records);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) throw std::runtime_error("cannot open output file '" + opt.output + "'");
        sink = &file;
    }
    if (opt.format == "csv") {
        *sink << summary_csv_header() << '\n' << summary_csv_row(summary) << '\n';
    } else {
        for (std::size_t i = 0; i < records.size(); ++i) *sink << shot_to_json(records[i], params, i).dump() << '\n';
        *sink << summary_to_json(summary).dump() << '\n';
    }
    return kExitOk;
}

int cmd_factor(const FactorOptions& opt, std::ostream& out) {
    Rng rng(resolve_seed(opt.seed));
    const FactorResult result =
        run_shor_factoring(opt.n, Rational::parse(opt.epsilon), rng, opt.max_attempts, parse_engine(opt.engine));
    if (opt.format == "json") {
        out << factor_to_json(opt.n, result).dump() << '\n';
    } else {
        if (result.factor)
            out << "factor: " << *result.factor << '\n';
        else
            out << "factor: none\n";
        out << "attempts: " << result.attempts.size() << '\n';
    }
    return result.factor ? kExitOk : kExitFailure;
}

// "lo:hi:step" -> inclusive range
std::vector<int> parse_sweep(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw DomainError("--sweep-L expects lo:hi:step");
    const int lo = std::stoi(text.substr(0, first));
    const int hi = std::stoi(text.substr(first + 1, second - first - 1));
    const int step = std::stoi(text.substr(second + 1));
    if (step <= 0 || hi < lo) throw DomainError("--sweep-L needs lo <= hi and step > 0");
    std::vector<int> values;
    for (int l = lo; l <= hi; l += step) values.push_back(l);
    return values;
}

int cmd_resources(const ResourceOptions& opt, std::ostream& out) {
    const Rational epsilon = Rational::parse(opt.epsilon);
    if (!opt.sweep.empty()) {
        const std::string format = opt.format.empty() ? "csv" : opt.format;
        if (format == "csv") out << resources_csv_header() << '\n';
        for (int l : parse_sweep(opt.sweep)) {
            const ResourceReport r = account(l, epsilon, opt.aux);
            if (format == "csv")
                out << resources_csv_row(r) << '\n';
            else if (format == "json")
                out << resources_to_json(r).dump() << '\n';
            else
                out << format_table(r) << '\n';
        }
        return kExitOk;
    }

    int l = opt.L;
    if (l == 0 && opt.n >= 2) {
        l = ceil_log2(Rational(opt.n, 1));
        l += l % 2;
    }
    if (l == 0) throw DomainError("resources needs --L, --N or --sweep-L");
    const ResourceReport r = account(l, epsilon, opt.aux);
    const std::string format = opt.format.empty() ? "table" : opt.format;
    if (format == "json")
        out << resources_to_json(r).dump() << '\n';
    else if (format == "csv")
        out << resources_csv_header() << '\n' << resources_csv_row(r) << '\n';
    else
        out << format_table(r);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distributed and monolithic order-finding simulator"};
    app.require_subcommand(1);

    OrderOptions order;
    auto* order_cmd = app.add_subcommand("order", "Run order-finding shots and summarize them");
    order_cmd->add_option("--N", order.n, "Modulus")->required();
    order_cmd->add_option("--a", order.a, "Base coprime to N (random if omitted)");
    order_cmd->add_option("--epsilon", order.epsilon, "Failure budget, e.g. 0.25 or 1/4");
    order_cmd->add_option("--precision", order.precision, "Override the epsilon-derived precision p");
    order_cmd->add_option("--shots", order.shots, "Number of independent shots");
    order_cmd->add_option("--seed", order.seed, "Run seed (default: $DISQ_SEED, then 1)");
    order_cmd->add_option("--engine", order.engine)->check(CLI::IsMember({"monolithic", "distributed"}));
    order_cmd->add_option("--mode", order.mode)->check(CLI::IsMember({"sequential-teleport", "joint-oracle"}));
    order_cmd->add_option("--teleport", order.teleport)->check(CLI::IsMember({"faithful", "relabel"}));
    order_cmd->add_option("--format", order.format)->check(CLI::IsMember({"json", "csv"}));
    order_cmd->add_option("--output", order.output, "Write to this file instead of stdout");
    order_cmd->add_option("--threads", order.threads, "Worker threads (0: hardware concurrency)");

    FactorOptions factor;
    auto* factor_cmd = app.add_subcommand("factor", "Factor N with Shor's reduction");
    factor_cmd->add_option("--N", factor.n, "Odd composite, not a prime power")->required();
    factor_cmd->add_option("--epsilon", factor.epsilon);
    factor_cmd->add_option("--seed", factor.seed);
    factor_cmd->add_option("--max-attempts", factor.max_attempts);
    factor_cmd->add_option("--engine", factor.engine)->check(CLI::IsMember({"monolithic", "distributed"}));
    factor_cmd->add_option("--format", factor.format)->check(CLI::IsMember({"text", "json"}));

    ResourceOptions res;
    auto* res_cmd = app.add_subcommand("resources", "Qubit, depth and communication comparison");
    res_cmd->add_option("--L", res.L, "Even bit length");
    res_cmd->add_option("--N", res.n, "Derive L from N");
    res_cmd->add_option("--epsilon", res.epsilon);
    res_cmd->add_option("--b", res.aux, "Auxiliary qubits of the multiplier construction");
    res_cmd->add_option("--sweep-L", res.sweep, "lo:hi:step, one row per L");
    res_cmd->add_option("--format", res.format)->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*order_cmd) return cmd_order(order, out);
        if (*factor_cmd) return cmd_factor(factor, out);
        return cmd_resources(res, out);
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace disq::cli
