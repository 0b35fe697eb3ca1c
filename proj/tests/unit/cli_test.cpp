#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "disq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = disq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

nlohmann::json last_json(const std::string& text) { return nlohmann::json::parse(lines(text).back()); }

TEST(Cli, OrderIsByteIdenticalUnderFixedSeed) {
    const std::vector<std::string> args{"order", "--N", "15", "--a", "7", "--shots", "20", "--seed", "3"};
    const auto first = run(args);
    const auto second = run(args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    EXPECT_EQ(run(threaded).out, first.out);
}

TEST(Cli, DyadicOrderRunIsExact) {
    const auto r = run({"order", "--N", "15", "--a", "7", "--shots", "100", "--engine", "distributed"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto all = lines(r.out);
    ASSERT_EQ(all.size(), 101U);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        const auto shot = nlohmann::json::parse(all[i]);
        EXPECT_EQ(shot["kind"], "shot");
        EXPECT_EQ(shot["estimation_error"], "0/1");
    }
    const auto summary = last_json(r.out);
    EXPECT_EQ(summary["kind"], "summary");
    EXPECT_DOUBLE_EQ(summary["success_rate"].get<double>(), 1.0);
}

TEST(Cli, NonDyadicOrderMeetsBound) {
    const auto r = run({"order", "--N", "33", "--a", "2", "--epsilon", "0.25", "--shots", "60", "--engine",
                        "distributed", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto summary = last_json(r.out);
    EXPECT_EQ(summary["r_true"], 10);
    // 60 shots: 0.75 minus a three-sigma margin of about 0.168
    EXPECT_GE(summary["success_rate"].get<double>(), 0.75 - 3 * std::sqrt(0.75 * 0.25 / 60));
}

TEST(Cli, CsvSummaryAndOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "disq_cli_test.csv";
    const auto r = run({"order", "--N", "15", "--a", "11", "--shots", "5", "--format", "csv", "--engine",
                        "monolithic", "--output", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, "N,a,epsilon,shots,success_rate,theorem2_bound,mean_error");
    EXPECT_EQ(row.substr(0, 5), "15,11");
    std::filesystem::remove(path);
}

TEST(Cli, RandomBaseIsCoprimeAndSeeded) {
    const auto a = run({"order", "--N", "21", "--shots", "1", "--seed", "5"});
    const auto b = run({"order", "--N", "21", "--shots", "1", "--seed", "5"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto base = last_json(a.out)["a"].get<std::uint64_t>();
    EXPECT_NE(base % 3, 0U);
    EXPECT_NE(base % 7, 0U);
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("DISQ_SEED", "42", 1);
    const auto env = run({"order", "--N", "15", "--a", "7", "--shots", "10"});
    ::unsetenv("DISQ_SEED");
    const auto flag = run({"order", "--N", "15", "--a", "7", "--shots", "10", "--seed", "42"});
    EXPECT_EQ(env.out, flag.out);
    ::setenv("DISQ_SEED", "not-a-number", 1);
    EXPECT_EQ(run({"order", "--N", "15", "--a", "7"}).code, disq::cli::kExitUsage);
    ::unsetenv("DISQ_SEED");
}

TEST(Cli, Factor) {
    const auto r15 = run({"factor", "--N", "15", "--seed", "1"});
    ASSERT_EQ(r15.code, 0) << r15.err;
    EXPECT_TRUE(r15.out.starts_with("factor: 3\n") || r15.out.starts_with("factor: 5\n")) << r15.out;
    EXPECT_NE(r15.out.find("attempts: "), std::string::npos);

    const auto r21 = run({"factor", "--N", "21", "--seed", "2"});
    ASSERT_EQ(r21.code, 0) << r21.err;
    EXPECT_TRUE(r21.out.starts_with("factor: 3\n") || r21.out.starts_with("factor: 7\n")) << r21.out;

    const auto json = run({"factor", "--N", "15", "--seed", "1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(json.out)["kind"], "factor");

    EXPECT_EQ(run({"factor", "--N", "16"}).code, disq::cli::kExitUsage);
    EXPECT_EQ(run({"factor", "--N", "13"}).code, disq::cli::kExitUsage);
}

TEST(Cli, Resources) {
    const auto table = run({"resources", "--L", "4", "--epsilon", "1/4"});
    ASSERT_EQ(table.code, 0) << table.err;
    EXPECT_NE(table.out.find("qubits"), std::string::npos);

    const auto sweep = run({"resources", "--sweep-L", "4:64:4", "--format", "csv"});
    ASSERT_EQ(sweep.code, 0) << sweep.err;
    const auto rows = lines(sweep.out);
    ASSERT_EQ(rows.size(), 17U);
    EXPECT_TRUE(rows[1].starts_with("4,"));
    EXPECT_TRUE(rows[16].starts_with("64,"));

    const auto from_n = run({"resources", "--N", "33", "--format", "json"});
    ASSERT_EQ(from_n.code, 0) << from_n.err;
    EXPECT_EQ(nlohmann::json::parse(from_n.out)["L"], 6);

    EXPECT_EQ(run({"resources", "--L", "5"}).code, disq::cli::kExitUsage);
}

TEST(Cli, UsageAndCapacityErrors) {
    EXPECT_EQ(run({"order"}).code, disq::cli::kExitUsage);
    EXPECT_EQ(run({"order", "--N", "15", "--a", "5"}).code, disq::cli::kExitUsage);
    EXPECT_EQ(run({"order", "--N", "15", "--engine", "quantum"}).code, disq::cli::kExitUsage);
    EXPECT_EQ(run({"order", "--N", "15", "--shots", "0"}).code, disq::cli::kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, disq::cli::kExitUsage);
    const auto cap = run({"order", "--N", "60000", "--a", "7"});
    EXPECT_EQ(cap.code, disq::cli::kExitCapacity);
    EXPECT_NE(cap.err.find("capacity"), std::string::npos);
}

}  // namespace
