#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disq/bitstring.hpp"
#include "disq/numeric.hpp"
#include "disq/rng.hpp"
#include "disq/statevec.hpp"
#include "disq/teleport.hpp"

namespace disq {

enum class Engine { monolithic, distributed };

enum class DistributedMode {
    sequential_teleport,  // node A measures, teleports C, then node B runs
    joint_oracle,         // all registers in one state, measurements deferred
};

std::string to_string(Engine e);
std::string to_string(DistributedMode m);
Engine parse_engine(const std::string& text);
DistributedMode parse_mode(const std::string& text);

/// Register sizes and precision for one order-finding problem (N, a).
///
/// L is ceil(log2 N) rounded up to the next even number. The distributed
/// precision is p = ceil(log2(2 + 1/(2 eps'))) with eps' = eps/2, giving
/// t1 = L/2 + 1 + p control qubits on node A, t2 = 3L/2 + 2 + p on node B
/// and a stitched estimate of 2L + 1 + p bits. The monolithic algorithm uses
/// ceil(log2(2 + 1/(2 eps))) extra bits on a single 2L + 1 + p_mono register.
class ProtocolParams {
public:
    static ProtocolParams make(std::uint64_t n, std::uint64_t a, const Rational& epsilon);
    // Explicit precision p >= 1; used for reduced-size equivalence checks.
    static ProtocolParams with_precision(std::uint64_t n, std::uint64_t a, int p);

    std::uint64_t n() const { return n_; }
    std::uint64_t a() const { return a_; }
    int L() const { return l_; }
    bool l_rounded_up() const { return l_rounded_; }
    const std::optional<Rational>& epsilon() const { return epsilon_; }
    int p() const { return p_; }
    int t1() const { return l_ / 2 + 1 + p_; }
    int t2() const { return 3 * l_ / 2 + 2 + p_; }
    int m_width() const { return 2 * l_ + 1 + p_; }
    int monolithic_precision() const { return p_mono_; }
    int monolithic_t() const { return 2 * l_ + 1 + p_mono_; }

    // a^(2^(L/2 - 1)) mod N, the multiplier node B exponentiates.
    std::uint64_t stage_b_multiplier() const;

    // Peak simultaneous qubits needed by the chosen engine and mode.
    int required_qubits(Engine engine, DistributedMode mode = DistributedMode::sequential_teleport) const;

private:
    ProtocolParams(std::uint64_t n, std::uint64_t a);

    std::uint64_t n_ = 0;
    std::uint64_t a_ = 0;
    int l_ = 0;
    bool l_rounded_ = false;
    std::optional<Rational> epsilon_;
    int p_ = 0;
    int p_mono_ = 0;
};

struct SuccessFlags {
    bool estimate_within_bound = false;
    bool order_recovered = false;
};

/// Everything observed in one shot of order finding.
struct OutcomeRecord {
    Engine engine = Engine::distributed;
    DistributedMode mode = DistributedMode::sequential_teleport;
    std::optional<BitString> m1;
    std::optional<BitString> m2;
    std::optional<int> correction_bit;  // nullopt: no b in {-1,0,1} fits
    std::optional<BitString> m;
    std::optional<std::uint64_t> recovered_r;
    std::optional<std::uint64_t> nearest_s;
    std::optional<Rational> estimation_error;
    std::vector<int> channel_transcript;
    std::size_t classical_bits_used = 0;
    std::size_t epr_pairs_consumed = 0;
    SuccessFlags flags;
};

struct Correction {
    int bit = 0;
    BitString m;
};

/// The b in {-1, 0, +1} with (low2 + b) mod 4 == high2, if one exists.
std::optional<int> find_correction_bit(const BitString& low2, const BitString& high2);

/// Stitches node A's and node B's measurements into a (2L+1+p)-bit estimate.
std::optional<Correction> correct_results(const BitString& m1, const BitString& m2,
                                          const ProtocolParams& params);

OutcomeRecord run_monolithic_order_finding(const ProtocolParams& params, Rng& rng);

OutcomeRecord run_distributed_order_finding(const ProtocolParams& params, Rng& rng,
                                            DistributedMode mode = DistributedMode::sequential_teleport,
                                            TeleportMode teleport = TeleportMode::faithful);

/// Fills nearest_s, estimation_error and the success flags against the true order.
OutcomeRecord classify_outcome(OutcomeRecord record, const ProtocolParams& params, std::uint64_t r_true);

// True if |m/2^width - s/r| <= 2^-(2L+1).
bool within_accuracy_bound(const BitString& m, std::uint64_t s, std::uint64_t r, int L);

/// Node A's state after its inverse QFT, before measurement: registers {A, C}.
StateVector prepare_node_a(const ProtocolParams& params);

/// Node B's unitaries on a state that already holds the received register C.
void run_node_b(StateVector& state, const ProtocolParams& params);

/// Joint-oracle state with registers {A, B, C}, before any measurement.
StateVector prepare_joint_oracle(const ProtocolParams& params);

using MeasurementPair = std::pair<BitString, BitString>;

/// Exact distribution over (m1, m2) for the given mode. In sequential mode
/// every m1 branch with probability above `branch_cutoff` is simulated
/// through teleportation and node B.
std::map<MeasurementPair, double> exact_measurement_distribution(const ProtocolParams& params,
                                                                 DistributedMode mode,
                                                                 double branch_cutoff = 1e-14);

struct StitchedDistribution {
    std::map<BitString, double> m;
    double no_correction = 0.0;
};

StitchedDistribution stitch_distribution(const std::map<MeasurementPair, double>& joint,
                                         const ProtocolParams& params);

std::map<BitString, double> exact_monolithic_distribution(const ProtocolParams& params);

struct FactorAttempt {
    std::uint64_t a = 0;
    bool gcd_shortcut = false;
    std::optional<std::uint64_t> recovered_r;
    std::optional<std::uint64_t> true_r;
    std::optional<std::uint64_t> factor;
};

struct FactorResult {
    std::optional<std::uint64_t> factor;
    std::vector<FactorAttempt> attempts;
};

/// One Shor reduction step with a fixed base a.
FactorAttempt factor_with_base(std::uint64_t n, std::uint64_t a, const Rational& epsilon, Rng& rng,
                               Engine engine);

/// Shor's reduction with random bases. N must be odd, composite and not a prime power.
FactorResult run_shor_factoring(std::uint64_t n, const Rational& epsilon, Rng& rng, int max_attempts,
                                Engine engine);

}  // namespace disq
