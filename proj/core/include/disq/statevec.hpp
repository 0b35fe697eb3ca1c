#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disq/bitstring.hpp"
#include "disq/rng.hpp"

namespace disq {

using Amplitude = std::complex<double>;

struct Register {
    std::string name;
    int width = 0;
};

/// Ordered named registers over one amplitude array.
///
/// The first register occupies the most significant bits of the global basis
/// index and each register is read most-significant-qubit first, so a
/// register's value is the integer |j> it represents.
class RegisterLayout {
public:
    static constexpr int kMaxQubits = 26;

    RegisterLayout() = default;
    RegisterLayout(std::initializer_list<Register> regs);
    explicit RegisterLayout(std::vector<Register> regs);

    const std::vector<Register>& registers() const { return regs_; }
    int total_qubits() const { return total_; }
    bool contains(std::string_view name) const;
    int width(std::string_view name) const;
    // Global bit position of the register's least significant qubit.
    int shift(std::string_view name) const;

private:
    std::size_t position(std::string_view name) const;
    void validate();

    std::vector<Register> regs_;
    int total_ = 0;
};

/// Dense state vector. Every mutating operation keeps the norm at 1.
class StateVector {
public:
    static constexpr double kNormTolerance = 1e-8;

    /// Computational basis state; registers missing from `values` are |0>.
    static StateVector basis(RegisterLayout layout, const std::map<std::string, std::uint64_t>& values);
    static StateVector from_amplitudes(RegisterLayout layout, std::vector<Amplitude> amplitudes);

    const RegisterLayout& layout() const { return layout_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    int num_qubits() const { return layout_.total_qubits(); }
    double norm_squared() const;

    void apply_hadamard(std::string_view reg);
    // `qubit` counts from 0 at the register's most significant qubit.
    void apply_hadamard(std::string_view reg, int qubit);
    void apply_x(std::string_view reg, int qubit);
    void apply_z(std::string_view reg, int qubit);
    void apply_cnot(std::string_view control_reg, int control_qubit,
                    std::string_view target_reg, int target_qubit);

    /// |j>|x> -> |j>|multiplier^j * x mod n> for x < n; x >= n is left alone.
    void apply_controlled_modmul(std::string_view control, std::string_view target,
                                 std::uint64_t multiplier, std::uint64_t n);

    void apply_qft(std::string_view reg);
    void apply_inverse_qft(std::string_view reg);

    // Born-rule marginal over the register's 2^width values.
    std::vector<double> register_probabilities(std::string_view reg) const;

    /// Projects `reg` onto |value> and renormalizes. Returns the probability of
    /// that outcome; throws if it is zero.
    double project(std::string_view reg, std::uint64_t value);

    BitString measure(std::string_view reg, Rng& rng);

    double project_qubit(std::string_view reg, int qubit, int bit);
    int measure_qubit(std::string_view reg, int qubit, Rng& rng);

    // Appends a |0> register as the least significant bits.
    void add_register(const std::string& name, int width);
    // Drops a register that is in a definite basis state.
    void remove_register(std::string_view name);
    void rename_register(std::string_view from, const std::string& to);
    // Moves a register to the least significant end without changing the state.
    void move_register_to_end(std::string_view name);

private:
    StateVector(RegisterLayout layout, std::vector<Amplitude> amps);

    int global_bit(std::string_view reg, int qubit) const;
    void apply_fourier(std::string_view reg, int sign);

    RegisterLayout layout_;
    std::vector<Amplitude> amps_;
};

/// Exact outcome distribution of measuring `reg`; zero-probability outcomes are omitted.
std::map<BitString, double> outcome_distribution(const StateVector& state, std::string_view reg);

/// Exact joint distribution over several registers, keyed by their values in order.
std::map<std::vector<std::uint64_t>, double> joint_outcome_distribution(
    const StateVector& state, const std::vector<std::string>& regs);

}  // namespace disq
