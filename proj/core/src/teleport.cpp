#include "disq/teleport.hpp"

#include <string>

#include "disq/error.hpp"

namespace disq {

void ClassicalChannel::send(int bit) {
    if (bit != 0 && bit != 1) throw DomainError("channel carries bits only");
    bits_.push_back(bit);
}

void EprPool::consume() {
    if (consumed_ >= allocated_) throw ResourceError("EPR pool exhausted");
    ++consumed_;
}

namespace {

constexpr std::string_view kEprHalf = "__epr";

void teleport_relabel(StateVector& state, std::string_view reg, ClassicalChannel& channel,
                      EprPool& pool, Rng& rng, const TeleportOptions& options) {
    const int w = state.layout().width(reg);
    for (int k = 0; k < w; ++k) {
        pool.consume();
        BellOutcome o{rng.bit(), rng.bit()};
        if (!options.forced.empty()) o = options.forced.at(static_cast<std::size_t>(k));
        channel.send(o.z);
        channel.send(o.x);
    }
    state.move_register_to_end(reg);
}

}  // namespace

void teleport_register(StateVector& state, std::string_view reg, ClassicalChannel& channel,
                       EprPool& pool, Rng& rng, const TeleportOptions& options) {
    const int w = state.layout().width(reg);
    if (pool.available() < static_cast<std::size_t>(w))
        throw ResourceError("teleport needs " + std::to_string(w) + " EPR pairs, pool has " +
                            std::to_string(pool.available()));
    if (!options.forced.empty() && options.forced.size() != static_cast<std::size_t>(w))
        throw DomainError("forced Bell outcomes must cover every qubit");

    if (options.mode == TeleportMode::relabel) {
        teleport_relabel(state, reg, channel, pool, rng, options);
        return;
    }

    const std::string source(reg);
    const std::string dest = source + "@recv";
    state.add_register(dest, w);

    for (int k = 0; k < w; ++k) {
        // Shared pair: local half in kEprHalf, remote half in dest[k].
        state.add_register(std::string(kEprHalf), 1);
        pool.consume();
        state.apply_hadamard(kEprHalf, 0);
        state.apply_cnot(kEprHalf, 0, dest, k);

        // Bell-basis measurement of (source[k], local half).
        state.apply_cnot(source, k, kEprHalf, 0);
        state.apply_hadamard(source, k);
        BellOutcome o;
        if (options.forced.empty()) {
            o.z = state.measure_qubit(source, k, rng);
            o.x = state.measure_qubit(kEprHalf, 0, rng);
        } else {
            o = options.forced[static_cast<std::size_t>(k)];
            state.project_qubit(source, k, o.z);
            state.project_qubit(kEprHalf, 0, o.x);
        }
        state.remove_register(kEprHalf);

        channel.send(o.z);
        channel.send(o.x);
        if (o.x) state.apply_x(dest, k);
        if (o.z) state.apply_z(dest, k);
    }

    // Every source qubit was measured, so the register is a basis state.
    state.remove_register(source);
    state.rename_register(dest, source);
}

}  // namespace disq
