#include "disq/protocol.hpp"

#include <algorithm>

#include "disq/error.hpp"

namespace disq {

namespace {

using u128 = unsigned __int128;

constexpr std::string_view kNodeA = "A";
constexpr std::string_view kNodeB = "B";
constexpr std::string_view kWork = "C";
constexpr std::string_view kControl = "ctrl";
constexpr std::string_view kTarget = "work";

void require_capacity(int qubits) {
    if (qubits > RegisterLayout::kMaxQubits)
        throw ResourceError("run needs " + std::to_string(qubits) + " qubits; simulator limit is " +
                            std::to_string(RegisterLayout::kMaxQubits));
}

}  // namespace

std::string to_string(Engine e) { return e == Engine::monolithic ? "monolithic" : "distributed"; }

std::string to_string(DistributedMode m) {
    return m == DistributedMode::sequential_teleport ? "sequential-teleport" : "joint-oracle";
}

Engine parse_engine(const std::string& text) {
    if (text == "monolithic") return Engine::monolithic;
    if (text == "distributed") return Engine::distributed;
    throw DomainError("unknown engine '" + text + "'");
}

DistributedMode parse_mode(const std::string& text) {
    if (text == "sequential-teleport") return DistributedMode::sequential_teleport;
    if (text == "joint-oracle") return DistributedMode::joint_oracle;
    throw DomainError("unknown mode '" + text + "'");
}

ProtocolParams::ProtocolParams(std::uint64_t n, std::uint64_t a) : n_(n), a_(a) {
    if (n < 2 || n > (std::uint64_t{1} << 16)) throw DomainError("N must lie in [2, 65536]");
    if (a < 1 || a >= n) throw DomainError("a must satisfy 1 <= a < N");
    if (gcd(a, n) != 1) throw DomainError("gcd(a, N) must be 1");
    l_ = std::max(ceil_log2(Rational(n, 1)), 1);
    if (l_ % 2 != 0) {
        ++l_;
        l_rounded_ = true;
    }
}

ProtocolParams ProtocolParams::make(std::uint64_t n, std::uint64_t a, const Rational& epsilon) {
    if (epsilon.numerator() == 0 || epsilon.numerator() >= epsilon.denominator())
        throw DomainError("epsilon must lie in (0, 1)");
    ProtocolParams params(n, a);
    params.epsilon_ = epsilon;
    const std::uint64_t e = epsilon.numerator();
    const std::uint64_t d = epsilon.denominator();
    // 2 + 1/(2 eps') with eps' = eps/2 is 2 + 1/eps = (2e + d)/e.
    params.p_ = ceil_log2(Rational(2 * e + d, e));
    // 2 + 1/(2 eps) = (4e + d)/(2e).
    params.p_mono_ = ceil_log2(Rational(4 * e + d, 2 * e));
    return params;
}

ProtocolParams ProtocolParams::with_precision(std::uint64_t n, std::uint64_t a, int p) {
    if (p < 1 || p > 16) throw DomainError("precision p must lie in [1, 16]");
    ProtocolParams params(n, a);
    params.p_ = p;
    params.p_mono_ = p;
    return params;
}

std::uint64_t ProtocolParams::stage_b_multiplier() const {
    return mod_pow(a_, std::uint64_t{1} << (l_ / 2 - 1), n_);
}

int ProtocolParams::required_qubits(Engine engine, DistributedMode mode) const {
    if (engine == Engine::monolithic) return monolithic_t() + l_;
    if (mode == DistributedMode::joint_oracle) return t1() + t2() + l_;
    return std::max({t1() + l_, 2 * l_ + 1, t2() + l_});
}

std::optional<int> find_correction_bit(const BitString& low2, const BitString& high2) {
    if (low2.width() != 2 || high2.width() != 2) throw DomainError("correction bit compares 2-bit strings");
    const auto lo = static_cast<int>(low2.value());
    const auto hi = static_cast<int>(high2.value());
    for (int b : {-1, 0, 1})
        if ((lo + b + 4) % 4 == hi) return b;
    return std::nullopt;
}

std::optional<Correction> correct_results(const BitString& m1, const BitString& m2,
                                          const ProtocolParams& params) {
    if (m1.width() != params.t1() || m2.width() != params.t2())
        throw DomainError("correct_results: measurement widths do not match params");
    const int half = params.L() / 2;
    const auto b = find_correction_bit(ibits(m1, half, half + 1), ibits(m2, 1, 2));
    if (!b) return std::nullopt;

    const BitString head = ibits(m1, 1, half + 1);
    const std::uint64_t span = std::uint64_t{1} << head.width();
    const std::uint64_t prefix = (head.value() + span + static_cast<std::uint64_t>(static_cast<std::int64_t>(*b))) % span;
    return Correction{*b, concat(BitString(head.width(), prefix), ibits(m2, 3, params.t2()))};
}

StateVector prepare_node_a(const ProtocolParams& params) {
    RegisterLayout layout{{std::string(kNodeA), params.t1()}, {std::string(kWork), params.L()}};
    StateVector state = StateVector::basis(std::move(layout), {{std::string(kWork), 1}});
    state.apply_hadamard(kNodeA);
    state.apply_controlled_modmul(kNodeA, kWork, params.a(), params.n());
    state.apply_inverse_qft(kNodeA);
    return state;
}

void run_node_b(StateVector& state, const ProtocolParams& params) {
    state.add_register(std::string(kNodeB), params.t2());
    state.apply_hadamard(kNodeB);
    state.apply_controlled_modmul(kNodeB, kWork, params.stage_b_multiplier(), params.n());
    state.apply_inverse_qft(kNodeB);
}

StateVector prepare_joint_oracle(const ProtocolParams& params) {
    require_capacity(params.required_qubits(Engine::distributed, DistributedMode::joint_oracle));
    RegisterLayout layout{{std::string(kNodeA), params.t1()},
                          {std::string(kNodeB), params.t2()},
                          {std::string(kWork), params.L()}};
    StateVector state = StateVector::basis(std::move(layout), {{std::string(kWork), 1}});
    state.apply_hadamard(kNodeA);
    state.apply_controlled_modmul(kNodeA, kWork, params.a(), params.n());
    state.apply_inverse_qft(kNodeA);
    state.apply_hadamard(kNodeB);
    state.apply_controlled_modmul(kNodeB, kWork, params.stage_b_multiplier(), params.n());
    state.apply_inverse_qft(kNodeB);
    return state;
}

OutcomeRecord run_monolithic_order_finding(const ProtocolParams& params, Rng& rng) {
    require_capacity(params.required_qubits(Engine::monolithic));
    RegisterLayout layout{{std::string(kControl), params.monolithic_t()}, {std::string(kTarget), params.L()}};
    StateVector state = StateVector::basis(std::move(layout), {{std::string(kTarget), 1}});
    state.apply_hadamard(kControl);
    state.apply_controlled_modmul(kControl, kTarget, params.a(), params.n());
    state.apply_inverse_qft(kControl);

    OutcomeRecord rec;
    rec.engine = Engine::monolithic;
    rec.m = state.measure(kControl, rng);
    rec.recovered_r = recover_order(*rec.m, params.n(), params.a());
    return rec;
}

OutcomeRecord run_distributed_order_finding(const ProtocolParams& params, Rng& rng, DistributedMode mode,
                                            TeleportMode teleport) {
    require_capacity(params.required_qubits(Engine::distributed, mode));
    OutcomeRecord rec;
    rec.engine = Engine::distributed;
    rec.mode = mode;

    if (mode == DistributedMode::joint_oracle) {
        StateVector state = prepare_joint_oracle(params);
        rec.m1 = state.measure(kNodeA, rng);
        rec.m2 = state.measure(kNodeB, rng);
    } else {
        StateVector state = prepare_node_a(params);
        rec.m1 = state.measure(kNodeA, rng);
        state.remove_register(kNodeA);

        ClassicalChannel channel;
        EprPool pool(static_cast<std::size_t>(params.L()));
        teleport_register(state, kWork, channel, pool, rng, {teleport, {}});
        rec.channel_transcript = channel.transcript();
        rec.classical_bits_used = channel.bit_count();
        rec.epr_pairs_consumed = pool.consumed();

        run_node_b(state, params);
        rec.m2 = state.measure(kNodeB, rng);
    }

    if (auto c = correct_results(*rec.m1, *rec.m2, params)) {
        rec.correction_bit = c->bit;
        rec.m = c->m;
        rec.recovered_r = recover_order(c->m, params.n(), params.a());
    }
    return rec;
}

bool within_accuracy_bound(const BitString& m, std::uint64_t s, std::uint64_t r, int L) {
    const u128 lhs = static_cast<u128>(m.value()) * r;
    const u128 rhs = static_cast<u128>(s) << m.width();
    const u128 diff = lhs > rhs ? lhs - rhs : rhs - lhs;
    // diff / (r 2^w) <= 2^-(2L+1)
    return (diff << (2 * L + 1)) <= (static_cast<u128>(r) << m.width());
}

OutcomeRecord classify_outcome(OutcomeRecord record, const ProtocolParams& params, std::uint64_t r_true) {
    if (r_true == 0) throw DomainError("classify_outcome: r must be positive");
    record.flags.order_recovered = record.recovered_r.has_value() && *record.recovered_r == r_true;
    record.flags.estimate_within_bound = false;
    record.nearest_s.reset();
    record.estimation_error.reset();
    if (!record.m) return record;

    const BitString& m = *record.m;
    const u128 scaled = static_cast<u128>(m.value()) * r_true;
    u128 best = ~u128{0};
    std::uint64_t best_s = 0;
    for (std::uint64_t s = 0; s < r_true; ++s) {
        const u128 grid = static_cast<u128>(s) << m.width();
        const u128 diff = scaled > grid ? scaled - grid : grid - scaled;
        if (diff < best) {
            best = diff;
            best_s = s;
        }
    }
    record.nearest_s = best_s;
    record.estimation_error = Rational(static_cast<std::uint64_t>(best), r_true << m.width());
    record.flags.estimate_within_bound = within_accuracy_bound(m, best_s, r_true, params.L());
    return record;
}

std::map<MeasurementPair, double> exact_measurement_distribution(const ProtocolParams& params,
                                                                 DistributedMode mode, double branch_cutoff) {
    std::map<MeasurementPair, double> out;
    const int t1 = params.t1();
    const int t2 = params.t2();

    if (mode == DistributedMode::joint_oracle) {
        const StateVector state = prepare_joint_oracle(params);
        for (const auto& [key, p] : joint_outcome_distribution(state, {std::string(kNodeA), std::string(kNodeB)}))
            out.emplace(MeasurementPair{BitString(t1, key[0]), BitString(t2, key[1])}, p);
        return out;
    }

    require_capacity(params.required_qubits(Engine::distributed, mode));
    const StateVector node_a = prepare_node_a(params);
    const auto probs_a = node_a.register_probabilities(kNodeA);
    // Bell outcomes do not change the received state, so one fixed stream suffices.
    Rng rng(0);
    for (std::uint64_t v1 = 0; v1 < probs_a.size(); ++v1) {
        if (probs_a[v1] <= branch_cutoff) continue;
        StateVector state = node_a;
        state.project(kNodeA, v1);
        state.remove_register(kNodeA);
        ClassicalChannel channel;
        EprPool pool(static_cast<std::size_t>(params.L()));
        teleport_register(state, kWork, channel, pool, rng);
        run_node_b(state, params);
        const auto probs_b = state.register_probabilities(kNodeB);
        for (std::uint64_t v2 = 0; v2 < probs_b.size(); ++v2) {
            const double p = probs_a[v1] * probs_b[v2];
            if (p > 0.0) out.emplace(MeasurementPair{BitString(t1, v1), BitString(t2, v2)}, p);
        }
    }
    return out;
}

StitchedDistribution stitch_distribution(const std::map<MeasurementPair, double>& joint,
                                         const ProtocolParams& params) {
    StitchedDistribution out;
    for (const auto& [pair, p] : joint) {
        if (auto c = correct_results(pair.first, pair.second, params))
            out.m[c->m] += p;
        else
            out.no_correction += p;
    }
    return out;
}

std::map<BitString, double> exact_monolithic_distribution(const ProtocolParams& params) {
    require_capacity(params.required_qubits(Engine::monolithic));
    RegisterLayout layout{{std::string(kControl), params.monolithic_t()}, {std::string(kTarget), params.L()}};
    StateVector state = StateVector::basis(std::move(layout), {{std::string(kTarget), 1}});
    state.apply_hadamard(kControl);
    state.apply_controlled_modmul(kControl, kTarget, params.a(), params.n());
    state.apply_inverse_qft(kControl);
    return outcome_distribution(state, kControl);
}

FactorAttempt factor_with_base(std::uint64_t n, std::uint64_t a, const Rational& epsilon, Rng& rng,
                               Engine engine) {
    FactorAttempt attempt;
    attempt.a = a;
    if (const std::uint64_t g = gcd(a, n); g > 1) {
        attempt.gcd_shortcut = true;
        if (g < n) attempt.factor = g;
        return attempt;
    }

    const ProtocolParams params = ProtocolParams::make(n, a, epsilon);
    const OutcomeRecord rec = engine == Engine::monolithic ? run_monolithic_order_finding(params, rng)
                                                           : run_distributed_order_finding(params, rng);
    attempt.recovered_r = rec.recovered_r;
    attempt.true_r = order_oracle(a, n);
    if (!rec.recovered_r || *rec.recovered_r % 2 != 0) return attempt;

    const std::uint64_t y = mod_pow(a, *rec.recovered_r / 2, n);
    if (y == n - 1) return attempt;
    for (std::uint64_t candidate : {gcd((y + n - 1) % n, n), gcd((y + 1) % n, n)}) {
        if (candidate > 1 && candidate < n) {
            attempt.factor = candidate;
            break;
        }
    }
    return attempt;
}

FactorResult run_shor_factoring(std::uint64_t n, const Rational& epsilon, Rng& rng, int max_attempts,
                                Engine engine) {
    if (n < 3 || n % 2 == 0) throw DomainError("N must be odd and at least 3");
    if (is_prime(n)) throw DomainError("N is prime");
    if (is_prime_power(n)) throw DomainError("N is a prime power");
    if (max_attempts < 1) throw DomainError("max attempts must be >= 1");

    FactorResult result;
    for (int i = 0; i < max_attempts; ++i) {
        const std::uint64_t a = rng.uniform_int(2, n - 1);
        result.attempts.push_back(factor_with_base(n, a, epsilon, rng, engine));
        if (result.attempts.back().factor) {
            result.factor = result.attempts.back().factor;
            break;
        }
    }
    return result;
}

}  // namespace disq
