#include <gtest/gtest.h>

#include "disq/serialize.hpp"

namespace disq {
namespace {

using nlohmann::json;

TEST(Serialize, ShotRecord) {
    const auto params = ProtocolParams::make(15, 7, Rational(1, 4));
    OutcomeRecord rec;
    rec.m1 = BitString::parse("100111");
    rec.m2 = BitString::parse("01011011011");
    rec.correction_bit = 1;
    rec.m = BitString::parse("101011011011");
    rec.channel_transcript = {0, 1, 1, 0, 0, 0, 1, 1};
    rec.classical_bits_used = 8;
    rec.epr_pairs_consumed = 4;
    rec = classify_outcome(rec, params, 4);

    const json j = json::parse(shot_to_json(rec, params, 3).dump());
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["kind"], "shot");
    EXPECT_EQ(j["shot"], 3);
    EXPECT_EQ(j["N"], 15);
    EXPECT_EQ(j["epsilon"], "1/4");
    EXPECT_EQ(j["m1"], "100111");
    EXPECT_EQ(j["m"], "101011011011");
    EXPECT_EQ(j["correction_bit"], 1);
    EXPECT_EQ(j["classical_bits"], 8);
    EXPECT_EQ(j["mode"], "sequential-teleport");
    EXPECT_TRUE(j["recovered_r"].is_null());
    EXPECT_EQ(j["nearest_s"], 3);
    EXPECT_EQ(j["channel"].size(), 8U);
}

TEST(Serialize, MonolithicShotHasNoNodeFields) {
    const auto params = ProtocolParams::make(15, 7, Rational(1, 4));
    OutcomeRecord rec;
    rec.engine = Engine::monolithic;
    rec.m = BitString(11, 0);
    rec.recovered_r = std::nullopt;
    const json j = shot_to_json(rec, params, 0);
    EXPECT_TRUE(j["m1"].is_null());
    EXPECT_TRUE(j["m2"].is_null());
    EXPECT_FALSE(j.contains("mode"));
    EXPECT_EQ(j["p"], 2);
}

TEST(Serialize, SummaryJsonAndCsv) {
    RunSummary s;
    s.n = 33;
    s.a = 2;
    s.epsilon = Rational(1, 4);
    s.shots = 500;
    s.success_rate = 0.962;
    s.theorem2_bound = 0.75;
    s.mean_error = 1.5e-5;
    s.s_histogram = {{0, 40}, {3, 60}};
    const json j = summary_to_json(s);
    EXPECT_EQ(j["kind"], "summary");
    EXPECT_EQ(j["s_histogram"]["3"], 60);
    EXPECT_EQ(summary_csv_header(), "N,a,epsilon,shots,success_rate,theorem2_bound,mean_error");
    EXPECT_EQ(summary_csv_row(s), "33,2,0.250000,500,0.962000,0.750000,1.500000e-05");
}

TEST(Serialize, ResourcesRowMatchesHeader) {
    const auto r = account(12, Rational(1, 4));
    const auto header = resources_csv_header();
    const auto row = resources_csv_row(r);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
    EXPECT_EQ(row.substr(0, 3), "12,");
    const json j = resources_to_json(r);
    EXPECT_EQ(j["qubits_monolithic"], r.qubits_monolithic);
    EXPECT_EQ(j["classical_bits_distributed"], 24);
}

TEST(Serialize, FactorResult) {
    FactorResult result;
    result.factor = 5;
    result.attempts.push_back({.a = 5, .gcd_shortcut = true, .recovered_r = {}, .true_r = {}, .factor = 5});
    const json j = factor_to_json(15, result);
    EXPECT_EQ(j["factor"], 5);
    EXPECT_EQ(j["attempt_count"], 1);
    EXPECT_TRUE(j["attempts"][0]["gcd_shortcut"].get<bool>());
}

}  // namespace
}  // namespace disq
