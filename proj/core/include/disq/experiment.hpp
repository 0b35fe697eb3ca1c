#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "disq/protocol.hpp"

namespace disq {

/// A batch of independent order-finding shots.
struct RunSpec {
    std::uint64_t n = 15;
    std::uint64_t a = 7;
    Rational epsilon{1, 4};
    std::optional<int> precision;  // overrides the epsilon-derived p
    Engine engine = Engine::distributed;
    DistributedMode mode = DistributedMode::sequential_teleport;
    TeleportMode teleport = TeleportMode::faithful;
    std::size_t shots = 1;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct RunSummary {
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    Rational epsilon;
    int L = 0;
    int p = 0;
    Engine engine = Engine::distributed;
    DistributedMode mode = DistributedMode::sequential_teleport;
    std::size_t shots = 0;
    std::uint64_t r_true = 0;
    std::size_t within_bound = 0;
    std::size_t order_recovered = 0;
    std::size_t no_correction = 0;
    double success_rate = 0.0;   // fraction within the estimation bound
    double theorem2_bound = 0.0;  // 1 - epsilon
    double mean_error = 0.0;      // over shots that produced an estimate
    std::map<std::uint64_t, std::size_t> s_histogram;  // nearest s per estimate
};

ProtocolParams params_for(const RunSpec& spec);

/// Runs every shot with its own stream derived from (seed, shot index) and
/// classifies it against the true order. Output order and content do not
/// depend on the thread count.
std::vector<OutcomeRecord> run_shots(const RunSpec& spec);

RunSummary summarize(const RunSpec& spec, const std::vector<OutcomeRecord>& records);

}  // namespace disq
