#include "disq/statevec.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "disq/error.hpp"
#include "disq/numeric.hpp"

namespace disq {

namespace {

constexpr std::uint64_t mask_of(int width) { return (std::uint64_t{1} << width) - 1; }

// In-place radix-2 DFT: out[j] = sum_k exp(sign * 2*pi*i*j*k / M) in[k], M = 2^bits.
void fft(std::vector<Amplitude>& a, int bits, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1U;
        for (; j & bit; bit >>= 1U) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int s = 1; s <= bits; ++s) {
        const std::size_t len = std::size_t{1} << s;
        const std::size_t half = len >> 1U;
        for (std::size_t k = 0; k < half; ++k) {
            const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len);
            const Amplitude w(std::cos(angle), std::sin(angle));
            for (std::size_t start = 0; start < n; start += len) {
                const Amplitude u = a[start + k];
                const Amplitude v = a[start + k + half] * w;
                a[start + k] = u + v;
                a[start + k + half] = u - v;
            }
        }
    }
}

}  // namespace

RegisterLayout::RegisterLayout(std::initializer_list<Register> regs) : regs_(regs) { validate(); }

RegisterLayout::RegisterLayout(std::vector<Register> regs) : regs_(std::move(regs)) { validate(); }

void RegisterLayout::validate() {
    std::set<std::string_view> seen;
    total_ = 0;
    for (const auto& r : regs_) {
        if (r.width < 1) throw DomainError("register '" + r.name + "' must have at least one qubit");
        if (!seen.insert(r.name).second) throw DomainError("duplicate register name '" + r.name + "'");
        total_ += r.width;
    }
    if (total_ > kMaxQubits)
        throw ResourceError("layout needs " + std::to_string(total_) + " qubits; simulator limit is " +
                            std::to_string(kMaxQubits));
}

std::size_t RegisterLayout::position(std::string_view name) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].name == name) return i;
    throw DomainError("unknown register '" + std::string(name) + "'");
}

bool RegisterLayout::contains(std::string_view name) const {
    for (const auto& r : regs_)
        if (r.name == name) return true;
    return false;
}

int RegisterLayout::width(std::string_view name) const { return regs_[position(name)].width; }

int RegisterLayout::shift(std::string_view name) const {
    int s = 0;
    for (std::size_t i = regs_.size(); i-- > 0;) {
        if (regs_[i].name == name) return s;
        s += regs_[i].width;
    }
    throw DomainError("unknown register '" + std::string(name) + "'");
}

StateVector::StateVector(RegisterLayout layout, std::vector<Amplitude> amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {}

StateVector StateVector::basis(RegisterLayout layout, const std::map<std::string, std::uint64_t>& values) {
    std::uint64_t index = 0;
    for (const auto& [name, value] : values) {
        const int w = layout.width(name);
        if (value > mask_of(w))
            throw DomainError("value " + std::to_string(value) + " does not fit register '" + name + "'");
        index |= value << layout.shift(name);
    }
    std::vector<Amplitude> amps(std::size_t{1} << layout.total_qubits());
    amps[index] = 1.0;
    return StateVector(std::move(layout), std::move(amps));
}

StateVector StateVector::from_amplitudes(RegisterLayout layout, std::vector<Amplitude> amplitudes) {
    if (amplitudes.size() != (std::size_t{1} << layout.total_qubits()))
        throw DomainError("amplitude count does not match layout");
    StateVector s(std::move(layout), std::move(amplitudes));
    if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) throw DomainError("amplitudes are not normalized");
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

int StateVector::global_bit(std::string_view reg, int qubit) const {
    const int w = layout_.width(reg);
    if (qubit < 0 || qubit >= w) throw DomainError("qubit index out of range for register '" + std::string(reg) + "'");
    return layout_.shift(reg) + (w - 1 - qubit);
}

void StateVector::apply_hadamard(std::string_view reg) {
    const int w = layout_.width(reg);
    for (int q = 0; q < w; ++q) apply_hadamard(reg, q);
}

void StateVector::apply_hadamard(std::string_view reg, int qubit) {
    const std::uint64_t bit = std::uint64_t{1} << global_bit(reg, qubit);
    const double s = std::numbers::sqrt2 / 2.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[i | bit];
        amps_[i] = s * (a0 + a1);
        amps_[i | bit] = s * (a0 - a1);
    }
}

void StateVector::apply_x(std::string_view reg, int qubit) {
    const std::uint64_t bit = std::uint64_t{1} << global_bit(reg, qubit);
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
}

void StateVector::apply_z(std::string_view reg, int qubit) {
    const std::uint64_t bit = std::uint64_t{1} << global_bit(reg, qubit);
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if (i & bit) amps_[i] = -amps_[i];
}

void StateVector::apply_cnot(std::string_view control_reg, int control_qubit,
                             std::string_view target_reg, int target_qubit) {
    const std::uint64_t c = std::uint64_t{1} << global_bit(control_reg, control_qubit);
    const std::uint64_t t = std::uint64_t{1} << global_bit(target_reg, target_qubit);
    if (c == t) throw DomainError("cnot: control and target are the same qubit");
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
}

void StateVector::apply_controlled_modmul(std::string_view control, std::string_view target,
                                          std::uint64_t multiplier, std::uint64_t n) {
    if (control == target) throw DomainError("controlled modmul: control and target must differ");
    if (n < 2) throw DomainError("controlled modmul: modulus must be >= 2");
    if (gcd(multiplier % n, n) != 1) throw DomainError("controlled modmul: multiplier must be a unit mod N");
    const int tw = layout_.width(target);
    if (tw < 63 && n > (std::uint64_t{1} << tw))
        throw DomainError("controlled modmul: target register too narrow for modulus");

    const int cw = layout_.width(control);
    const int cs = layout_.shift(control);
    const int ts = layout_.shift(target);
    const std::uint64_t cmask = mask_of(cw);
    const std::uint64_t tmask = mask_of(tw);

    // multiplier^j mod n for every control value j.
    std::vector<std::uint64_t> powers(std::size_t{1} << cw);
    powers[0] = 1 % n;
    const std::uint64_t m = multiplier % n;
    for (std::size_t j = 1; j < powers.size(); ++j)
        powers[j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(powers[j - 1]) * m) % n);

    std::vector<Amplitude> out(amps_.size());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        const std::uint64_t j = (i >> cs) & cmask;
        const std::uint64_t x = (i >> ts) & tmask;
        std::uint64_t dest = i;
        if (x < n) {
            const std::uint64_t y = static_cast<std::uint64_t>((static_cast<unsigned __int128>(powers[j]) * x) % n);
            dest = (i & ~(tmask << ts)) | (y << ts);
        }
        out[dest] = amps_[i];
    }
    amps_ = std::move(out);
}

void StateVector::apply_fourier(std::string_view reg, int sign) {
    const int w = layout_.width(reg);
    const int s = layout_.shift(reg);
    const std::uint64_t size = std::uint64_t{1} << w;
    const std::uint64_t low_count = std::uint64_t{1} << s;
    const std::uint64_t high_count = amps_.size() >> (s + w);
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));

    std::vector<Amplitude> slice(size);
    for (std::uint64_t hi = 0; hi < high_count; ++hi) {
        for (std::uint64_t lo = 0; lo < low_count; ++lo) {
            const std::uint64_t base = (hi << (s + w)) | lo;
            for (std::uint64_t k = 0; k < size; ++k) slice[k] = amps_[base | (k << s)];
            fft(slice, w, sign);
            for (std::uint64_t k = 0; k < size; ++k) amps_[base | (k << s)] = slice[k] * scale;
        }
    }
}

void StateVector::apply_qft(std::string_view reg) { apply_fourier(reg, +1); }

void StateVector::apply_inverse_qft(std::string_view reg) { apply_fourier(reg, -1); }

std::vector<double> StateVector::register_probabilities(std::string_view reg) const {
    const int w = layout_.width(reg);
    const int s = layout_.shift(reg);
    const std::uint64_t mask = mask_of(w);
    std::vector<double> probs(std::size_t{1} << w, 0.0);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) probs[(i >> s) & mask] += std::norm(amps_[i]);
    return probs;
}

double StateVector::project(std::string_view reg, std::uint64_t value) {
    const int w = layout_.width(reg);
    const int s = layout_.shift(reg);
    const std::uint64_t mask = mask_of(w);
    if (value > mask) throw DomainError("projection value out of range");
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if (((i >> s) & mask) == value) p += std::norm(amps_[i]);
    if (p <= 0.0) throw DomainError("projection onto a zero-probability outcome");
    const double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (((i >> s) & mask) == value)
            amps_[i] *= scale;
        else
            amps_[i] = 0.0;
    }
    return p;
}

BitString StateVector::measure(std::string_view reg, Rng& rng) {
    const auto probs = register_probabilities(reg);
    double total = 0.0;
    for (double p : probs) total += p;
    if (std::abs(total - 1.0) > kNormTolerance)
        throw InternalError("measurement: total probability " + std::to_string(total) + " deviates from 1");

    const double u = rng.uniform() * total;
    double acc = 0.0;
    std::uint64_t outcome = probs.size() - 1;
    for (std::uint64_t v = 0; v < probs.size(); ++v) {
        acc += probs[v];
        if (u < acc && probs[v] > 0.0) {
            outcome = v;
            break;
        }
    }
    // Rounding can leave u just past the last nonzero bucket.
    while (probs[outcome] <= 0.0 && outcome > 0) --outcome;
    project(reg, outcome);
    return BitString(layout_.width(reg), outcome);
}

double StateVector::project_qubit(std::string_view reg, int qubit, int bit) {
    if (bit != 0 && bit != 1) throw DomainError("qubit projection value must be 0 or 1");
    const std::uint64_t mask = std::uint64_t{1} << global_bit(reg, qubit);
    const std::uint64_t want = bit ? mask : 0;
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == want) p += std::norm(amps_[i]);
    if (p <= 0.0) throw DomainError("projection onto a zero-probability outcome");
    const double scale = 1.0 / std::sqrt(p);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == want)
            amps_[i] *= scale;
        else
            amps_[i] = 0.0;
    }
    return p;
}

int StateVector::measure_qubit(std::string_view reg, int qubit, Rng& rng) {
    const std::uint64_t mask = std::uint64_t{1} << global_bit(reg, qubit);
    double p0 = 0.0, total = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        total += p;
        if (!(i & mask)) p0 += p;
    }
    if (std::abs(total - 1.0) > kNormTolerance)
        throw InternalError("measurement: total probability " + std::to_string(total) + " deviates from 1");
    int bit = rng.uniform() * total < p0 ? 0 : 1;
    if (bit == 0 && p0 <= 0.0) bit = 1;
    if (bit == 1 && total - p0 <= 0.0) bit = 0;
    project_qubit(reg, qubit, bit);
    return bit;
}

void StateVector::add_register(const std::string& name, int width) {
    std::vector<Register> regs = layout_.registers();
    regs.push_back({name, width});
    RegisterLayout next(std::move(regs));
    std::vector<Amplitude> out(std::size_t{1} << next.total_qubits());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) out[i << width] = amps_[i];
    layout_ = std::move(next);
    amps_ = std::move(out);
}

void StateVector::remove_register(std::string_view name) {
    const auto probs = register_probabilities(name);
    std::uint64_t value = 0;
    for (std::uint64_t v = 1; v < probs.size(); ++v)
        if (probs[v] > probs[value]) value = v;
    if (probs[value] < 1.0 - 1e-10)
        throw DomainError("remove_register: register '" + std::string(name) + "' is not in a basis state");

    const int w = layout_.width(name);
    const int s = layout_.shift(name);
    std::vector<Register> regs;
    for (const auto& r : layout_.registers())
        if (r.name != name) regs.push_back(r);
    RegisterLayout next(std::move(regs));

    std::vector<Amplitude> out(std::size_t{1} << next.total_qubits());
    const std::uint64_t low = (std::uint64_t{1} << s) - 1;
    for (std::uint64_t k = 0; k < out.size(); ++k) {
        const std::uint64_t i = ((k & ~low) << w) | (value << s) | (k & low);
        out[k] = amps_[i];
    }
    layout_ = std::move(next);
    amps_ = std::move(out);
    const double n = norm_squared();
    for (auto& a : amps_) a /= std::sqrt(n);
}

void StateVector::rename_register(std::string_view from, const std::string& to) {
    std::vector<Register> regs = layout_.registers();
    bool found = false;
    for (auto& r : regs) {
        if (r.name == from) {
            r.name = to;
            found = true;
        }
    }
    if (!found) throw DomainError("unknown register '" + std::string(from) + "'");
    layout_ = RegisterLayout(std::move(regs));
}

void StateVector::move_register_to_end(std::string_view name) {
    const int w = layout_.width(name);
    const int s = layout_.shift(name);
    std::vector<Register> regs;
    Register moved;
    for (const auto& r : layout_.registers()) {
        if (r.name == name)
            moved = r;
        else
            regs.push_back(r);
    }
    regs.push_back(moved);
    RegisterLayout next(std::move(regs));

    const std::uint64_t low = (std::uint64_t{1} << s) - 1;
    const std::uint64_t mask = mask_of(w);
    std::vector<Amplitude> out(amps_.size());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        const std::uint64_t v = (i >> s) & mask;
        const std::uint64_t rest = ((i >> (s + w)) << s) | (i & low);
        out[(rest << w) | v] = amps_[i];
    }
    layout_ = std::move(next);
    amps_ = std::move(out);
}

std::map<BitString, double> outcome_distribution(const StateVector& state, std::string_view reg) {
    const int w = state.layout().width(reg);
    const auto probs = state.register_probabilities(reg);
    std::map<BitString, double> out;
    for (std::uint64_t v = 0; v < probs.size(); ++v)
        if (probs[v] > 0.0) out.emplace(BitString(w, v), probs[v]);
    return out;
}

std::map<std::vector<std::uint64_t>, double> joint_outcome_distribution(
    const StateVector& state, const std::vector<std::string>& regs) {
    std::vector<int> shifts, widths;
    for (const auto& r : regs) {
        shifts.push_back(state.layout().shift(r));
        widths.push_back(state.layout().width(r));
    }
    std::map<std::vector<std::uint64_t>, double> out;
    const auto amps = state.amplitudes();
    std::vector<std::uint64_t> key(regs.size());
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) continue;
        for (std::size_t r = 0; r < regs.size(); ++r) key[r] = (i >> shifts[r]) & mask_of(widths[r]);
        out[key] += p;
    }
    return out;
}

}  // namespace disq
