#include "disq/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace disq {

namespace {

using nlohmann::json;

template <typename T, typename F>
json optional_json(const std::optional<T>& v, F&& convert) {
    return v ? json(convert(*v)) : json(nullptr);
}

std::string fixed(double v, int digits = 6) {
    std::ostringstream os;
    os << std::setprecision(digits) << std::fixed << v;
    return os.str();
}

}  // namespace

json shot_to_json(const OutcomeRecord& rec, const ProtocolParams& params, std::size_t shot) {
    auto bits = [](const BitString& b) { return b.to_string(); };
    auto id = [](auto v) { return v; };
    json j{
        {"schema", kSchemaVersion},
        {"kind", "shot"},
        {"shot", shot},
        {"N", params.n()},
        {"a", params.a()},
        {"L", params.L()},
        {"p", rec.engine == Engine::monolithic ? params.monolithic_precision() : params.p()},
        {"epsilon", optional_json(params.epsilon(), [](const Rational& r) { return r.to_string(); })},
        {"engine", to_string(rec.engine)},
        {"m1", optional_json(rec.m1, bits)},
        {"m2", optional_json(rec.m2, bits)},
        {"correction_bit", optional_json(rec.correction_bit, id)},
        {"m", optional_json(rec.m, bits)},
        {"recovered_r", optional_json(rec.recovered_r, id)},
        {"nearest_s", optional_json(rec.nearest_s, id)},
        {"estimation_error", optional_json(rec.estimation_error, [](const Rational& r) { return r.to_string(); })},
        {"estimate_within_bound", rec.flags.estimate_within_bound},
        {"order_recovered", rec.flags.order_recovered},
        {"classical_bits", rec.classical_bits_used},
        {"epr_pairs", rec.epr_pairs_consumed},
        {"channel", rec.channel_transcript},
    };
    if (rec.engine == Engine::distributed) j["mode"] = to_string(rec.mode);
    return j;
}

json summary_to_json(const RunSummary& s) {
    json hist = json::object();
    for (const auto& [sv, count] : s.s_histogram) hist[std::to_string(sv)] = count;
    json j{
        {"schema", kSchemaVersion},
        {"kind", "summary"},
        {"N", s.n},
        {"a", s.a},
        {"epsilon", s.epsilon.to_string()},
        {"L", s.L},
        {"p", s.p},
        {"engine", to_string(s.engine)},
        {"shots", s.shots},
        {"r_true", s.r_true},
        {"within_bound", s.within_bound},
        {"success_rate", s.success_rate},
        {"theorem2_bound", s.theorem2_bound},
        {"order_recovered", s.order_recovered},
        {"no_correction", s.no_correction},
        {"mean_error", s.mean_error},
        {"s_histogram", hist},
    };
    if (s.engine == Engine::distributed) j["mode"] = to_string(s.mode);
    return j;
}

json resources_to_json(const ResourceReport& r) {
    return json{
        {"schema", kSchemaVersion},
        {"kind", "resources"},
        {"L", r.L},
        {"epsilon", r.epsilon.to_string()},
        {"aux_qubits", r.aux_qubits},
        {"aux_qubits_order", r.aux_qubits_order},
        {"precision_monolithic", r.precision_monolithic},
        {"precision_distributed", r.precision_distributed},
        {"qubits_monolithic", r.qubits_monolithic},
        {"qubits_node_a", r.qubits_node_a},
        {"qubits_node_b", r.qubits_node_b},
        {"qubit_savings", r.qubit_savings},
        {"gate_count_order", r.gate_count_order},
        {"depth_monolithic_t", r.depth_monolithic_t},
        {"depth_node_a_t1", r.depth_node_a_t1},
        {"depth_node_b_t2", r.depth_node_b_t2},
        {"depth_stage_factor", r.depth_stage_factor},
        {"epr_pairs", r.epr_pairs},
        {"classical_bits_distributed", r.classical_bits_distributed},
        {"classical_bits_reference", r.classical_bits_reference},
    };
}

json factor_to_json(std::uint64_t n, const FactorResult& result) {
    auto id = [](auto v) { return v; };
    json attempts = json::array();
    for (const auto& a : result.attempts) {
        attempts.push_back(json{
            {"a", a.a},
            {"gcd_shortcut", a.gcd_shortcut},
            {"recovered_r", optional_json(a.recovered_r, id)},
            {"true_r", optional_json(a.true_r, id)},
            {"factor", optional_json(a.factor, id)},
        });
    }
    return json{
        {"schema", kSchemaVersion},
        {"kind", "factor"},
        {"N", n},
        {"factor", optional_json(result.factor, id)},
        {"attempt_count", result.attempts.size()},
        {"attempts", attempts},
    };
}

std::string summary_csv_header() { return "N,a,epsilon,shots,success_rate,theorem2_bound,mean_error"; }

std::string summary_csv_row(const RunSummary& s) {
    std::ostringstream os;
    os << s.n << ',' << s.a << ',' << fixed(s.epsilon.to_double()) << ',' << s.shots << ','
       << fixed(s.success_rate) << ',' << fixed(s.theorem2_bound) << ',' << std::scientific
       << std::setprecision(6) << s.mean_error;
    return os.str();
}

std::string resources_csv_header() {
    return "L,epsilon,b,qubits_monolithic,qubits_node_a,qubits_node_b,qubit_savings,"
           "depth_monolithic_t,depth_node_a_t1,depth_node_b_t2,classical_bits_distributed";
}

std::string resources_csv_row(const ResourceReport& r) {
    std::ostringstream os;
    os << r.L << ',' << fixed(r.epsilon.to_double()) << ',' << r.aux_qubits << ',' << r.qubits_monolithic << ','
       << r.qubits_node_a << ',' << r.qubits_node_b << ',' << r.qubit_savings << ',' << r.depth_monolithic_t
       << ',' << r.depth_node_a_t1 << ',' << r.depth_node_b_t2 << ',' << r.classical_bits_distributed;
    return os.str();
}

}  // namespace disq
