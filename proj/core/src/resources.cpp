#include "disq/resources.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "disq/error.hpp"

namespace disq {

ResourceReport account(int L, const Rational& epsilon, int aux_qubits) {
    if (L < 2 || L % 2 != 0) throw DomainError("account: L must be an even integer >= 2");
    if (epsilon.numerator() == 0 || epsilon.numerator() >= epsilon.denominator())
        throw DomainError("account: epsilon must lie in (0, 1)");
    if (aux_qubits < 0) throw DomainError("account: auxiliary qubit count must be non-negative");

    const std::uint64_t e = epsilon.numerator();
    const std::uint64_t d = epsilon.denominator();

    ResourceReport r;
    r.L = L;
    r.epsilon = epsilon;
    r.aux_qubits = aux_qubits;
    r.precision_monolithic = ceil_log2(Rational(4 * e + d, 2 * e));
    r.precision_distributed = ceil_log2(Rational(2 * e + d, e));

    r.qubits_monolithic = 3 * L + 1 + r.precision_monolithic + aux_qubits;
    r.qubits_node_a = 5 * L / 2 + 1 + r.precision_distributed + aux_qubits;
    r.qubits_node_b = 5 * L / 2 + 2 + r.precision_distributed + aux_qubits;
    r.qubit_savings = r.qubits_monolithic - std::max(r.qubits_node_a, r.qubits_node_b);

    r.depth_monolithic_t = 2 * L + 1 + r.precision_monolithic;
    r.depth_node_a_t1 = L / 2 + 1 + r.precision_distributed;
    r.depth_node_b_t2 = 3 * L / 2 + 2 + r.precision_distributed;

    r.epr_pairs = L;
    r.classical_bits_distributed = 2 * L;
    return r;
}

std::string format_table(const ResourceReport& r) {
    std::ostringstream os;
    auto row = [&os](const std::string& label, const std::string& mono, const std::string& a,
                     const std::string& b) {
        os << std::left << std::setw(24) << label << std::right << std::setw(12) << mono << std::setw(10) << a
           << std::setw(10) << b << '\n';
    };
    os << "L = " << r.L << ", epsilon = " << r.epsilon.to_string() << ", b = " << r.aux_qubits << '\n';
    row("", "monolithic", "node A", "node B");
    row("qubits", std::to_string(r.qubits_monolithic), std::to_string(r.qubits_node_a),
        std::to_string(r.qubits_node_b));
    row("control register (t)", std::to_string(r.depth_monolithic_t), std::to_string(r.depth_node_a_t1),
        std::to_string(r.depth_node_b_t2));
    row("gates", r.gate_count_order, r.gate_count_order, r.gate_count_order);
    os << "qubit savings:        " << r.qubit_savings << '\n';
    os << "depth per stage:      " << r.depth_stage_factor << '\n';
    os << "EPR pairs:            " << r.epr_pairs << '\n';
    os << "classical bits:       " << r.classical_bits_distributed << " (reference scheme "
       << r.classical_bits_reference << ")\n";
    return os.str();
}

}  // namespace disq
