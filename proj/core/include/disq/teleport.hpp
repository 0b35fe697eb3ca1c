#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "disq/rng.hpp"
#include "disq/statevec.hpp"

namespace disq {

/// Classical bits sent from the teleporting node to the receiver.
class ClassicalChannel {
public:
    void send(int bit);
    const std::vector<int>& transcript() const { return bits_; }
    std::size_t bit_count() const { return bits_.size(); }

private:
    std::vector<int> bits_;
};

/// Pre-shared EPR pairs.
class EprPool {
public:
    explicit EprPool(std::size_t pairs) : allocated_(pairs) {}

    std::size_t allocated() const { return allocated_; }
    std::size_t consumed() const { return consumed_; }
    std::size_t available() const { return allocated_ - consumed_; }

    // Throws ResourceError when the pool is empty.
    void consume();

private:
    std::size_t allocated_;
    std::size_t consumed_ = 0;
};

enum class TeleportMode {
    faithful,  // EPR pair + Bell measurement + Pauli corrections per qubit
    relabel,   // move the register directly; channel and pool are still charged
};

// Bell measurement result for one qubit: z from the source qubit, x from the
// local EPR half.
struct BellOutcome {
    int z = 0;
    int x = 0;
};

struct TeleportOptions {
    TeleportMode mode = TeleportMode::faithful;
    // If non-empty, the Bell outcome for qubit k is forced to forced[k].
    std::vector<BellOutcome> forced;
};

/// Teleports every qubit of `reg`, most significant first, to a fresh
/// receiver register. On return `reg` names the received register, which now
/// occupies the least significant end of the layout. Each qubit consumes one
/// EPR pair and sends (z, x) on the channel. Peak size is the input plus
/// width(reg) + 1 qubits.
void teleport_register(StateVector& state, std::string_view reg, ClassicalChannel& channel,
                       EprPool& pool, Rng& rng, const TeleportOptions& options = {});

}  // namespace disq
