#include "disq/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "disq/error.hpp"

namespace disq {

ProtocolParams params_for(const RunSpec& spec) {
    return spec.precision ? ProtocolParams::with_precision(spec.n, spec.a, *spec.precision)
                          : ProtocolParams::make(spec.n, spec.a, spec.epsilon);
}

std::vector<OutcomeRecord> run_shots(const RunSpec& spec) {
    if (spec.shots < 1) throw DomainError("shots must be >= 1");
    const ProtocolParams params = params_for(spec);
    const int needed = params.required_qubits(spec.engine, spec.mode);
    if (needed > RegisterLayout::kMaxQubits)
        throw ResourceError("run needs " + std::to_string(needed) + " qubits; simulator limit is " +
                            std::to_string(RegisterLayout::kMaxQubits));
    const std::uint64_t r_true = order_oracle(spec.a, spec.n);

    std::vector<OutcomeRecord> records(spec.shots);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < spec.shots; i = next++) {
            try {
                Rng rng = derive_stream(spec.seed, i);
                OutcomeRecord rec = spec.engine == Engine::monolithic
                                        ? run_monolithic_order_finding(params, rng)
                                        : run_distributed_order_finding(params, rng, spec.mode, spec.teleport);
                records[i] = classify_outcome(std::move(rec), params, r_true);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = spec.shots;
            }
        }
    };

    const unsigned threads = std::clamp<unsigned>(spec.threads, 1, static_cast<unsigned>(spec.shots));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

RunSummary summarize(const RunSpec& spec, const std::vector<OutcomeRecord>& records) {
    const ProtocolParams params = params_for(spec);
    RunSummary s;
    s.n = spec.n;
    s.a = spec.a;
    s.epsilon = params.epsilon().value_or(spec.epsilon);
    s.L = params.L();
    s.p = spec.engine == Engine::monolithic ? params.monolithic_precision() : params.p();
    s.engine = spec.engine;
    s.mode = spec.mode;
    s.shots = records.size();
    s.r_true = order_oracle(spec.a, spec.n);
    s.theorem2_bound = 1.0 - s.epsilon.to_double();

    double error_sum = 0.0;
    std::size_t estimates = 0;
    for (const auto& rec : records) {
        if (rec.flags.estimate_within_bound) ++s.within_bound;
        if (rec.flags.order_recovered) ++s.order_recovered;
        if (rec.engine == Engine::distributed && !rec.correction_bit) ++s.no_correction;
        if (rec.estimation_error) {
            error_sum += rec.estimation_error->to_double();
            ++estimates;
        }
        if (rec.nearest_s) ++s.s_histogram[*rec.nearest_s];
    }
    if (!records.empty()) s.success_rate = static_cast<double>(s.within_bound) / static_cast<double>(records.size());
    if (estimates > 0) s.mean_error = error_sum / static_cast<double>(estimates);
    return s;
}

}  // namespace disq
