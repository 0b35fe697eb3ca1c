#pragma once

#include <string>

#include "disq/numeric.hpp"

namespace disq {

/// Closed-form resource comparison between monolithic and two-node order
/// finding, with controlled multiplication built by the O(L^3)-time,
/// O(L)-space construction. `aux_qubits` (b) is that construction's workspace;
/// it enters every count identically.
///
/// Depths are reported as control-register lengths: each stage is one
/// controlled multiplier of depth O(L^2).
struct ResourceReport {
    int L = 0;
    Rational epsilon;
    int aux_qubits = 0;

    int precision_monolithic = 0;   // ceil(log2(2 + 1/(2 eps)))
    int precision_distributed = 0;  // ceil(log2(2 + 1/eps))

    int qubits_monolithic = 0;  // 3L + 1 + p_mono + b
    int qubits_node_a = 0;      // 5L/2 + 1 + p + b
    int qubits_node_b = 0;      // 5L/2 + 2 + p + b
    int qubit_savings = 0;      // monolithic - max(node A, node B)

    std::string aux_qubits_order = "O(L)";
    std::string gate_count_order = "O(L^3)";

    int depth_monolithic_t = 0;  // 2L + 1 + p_mono
    int depth_node_a_t1 = 0;     // L/2 + 1 + p
    int depth_node_b_t2 = 0;     // 3L/2 + 2 + p
    std::string depth_stage_factor = "O(L^2)";

    int epr_pairs = 0;                   // L
    int classical_bits_distributed = 0;  // 2L
    std::string classical_bits_reference = "O(L^2)";
};

ResourceReport account(int L, const Rational& epsilon, int aux_qubits = 0);

std::string format_table(const ResourceReport& report);

}  // namespace disq
