/*
   Copyright 2026 The arteq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "job_config.hpp"
#include "reports.hpp"

namespace arteq::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(::testing::TempDir()) / "arteq_cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

Outcome arteq(const std::string& args) {
    static int counter = 0;
    const fs::path dir = scratch("run" + std::to_string(counter++));
    const std::string cmd = std::string(ARTEQ_TOOL) + " " + args + " > " + (dir / "out").string() + " 2> " +
                            (dir / "err").string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(dir / "out"), slurp(dir / "err")};
}

std::string example(const std::string& name) { return std::string(ARTEQ_DOCS) + "/examples/" + name; }

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path p = scratch("configs") / name;
    std::ofstream(p) << body;
    return p;
}

TEST(CliExitCodes, Success) {
    const Outcome r = arteq("split --field Qi --bound 20");
    EXPECT_EQ(r.status, kExitOk) << r.err;
    EXPECT_NE(r.out.find("5\t0\t1\t1\tx + 2\n5\t1\t1\t1\tx + 3\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("2\t0\t2\t1\tx + 1\n"), std::string::npos);
    EXPECT_EQ(r.out.find("\n23\t"), std::string::npos);
}

TEST(CliExitCodes, NegativeVerdicts) {
    EXPECT_EQ(arteq("compare --field Qsqrt2 --field2 Qsqrt3 --bound 100").status, kExitNegative);
    EXPECT_EQ(arteq("reconstruct --field Qsqrt2 --field2 Qsqrt3 --bound 50").status, kExitNegative);
    const Outcome f = arteq("run --config " + example("falsified.json"));
    EXPECT_EQ(f.status, kExitNegative);
    EXPECT_NE(f.out.find("# verdict\tfalsified"), std::string::npos) << f.out;
}

TEST(CliExitCodes, UsageErrors) {
    EXPECT_EQ(arteq("split --bogus").status, kExitUsage);
    EXPECT_EQ(arteq("split --format xml").status, kExitUsage);
    EXPECT_EQ(arteq("split --bound 1").status, kExitUsage);
    EXPECT_EQ(arteq("").status, kExitUsage);
    EXPECT_EQ(arteq("run").status, kExitUsage);
    EXPECT_EQ(arteq("split --field NoSuchField").status, kExitUsage);
    EXPECT_EQ(arteq("remark --p 7").status, kExitUsage);
    EXPECT_EQ(arteq("--help").status, kExitOk);
}

TEST(CliExitCodes, SchemaErrorsCarryLinePositions) {
    const auto bad = write_config("notmonic.json", "{\n  \"fields\": [\n    {\"label\": \"K\", \"coefficients\": [1, 0, 2]}\n  ]\n}\n");
    const Outcome r = arteq("run --config " + bad.string());
    EXPECT_EQ(r.status, kExitUsage);
    EXPECT_NE(r.err.find("notmonic.json:3:"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("NotMonic"), std::string::npos) << r.err;

    const auto typo = write_config("typo.json", "{\n  \"bound\": 10,\n  \"taks\": []\n}\n");
    const Outcome t = arteq("run --config " + typo.string());
    EXPECT_EQ(t.status, kExitUsage);
    EXPECT_NE(t.err.find("typo.json:3:11: /taks: unknown key"), std::string::npos) << t.err;

    const auto syntax = write_config("syntax.json", "{\n  \"bound\": 10,\n  ]\n");
    EXPECT_NE(arteq("run --config " + syntax.string()).err.find("syntax.json:3:"), std::string::npos);
}

TEST(CliReports, RemarkPattern) {
    const Outcome r = arteq("remark --p 5 --dmax 30 --bound 100 --format json");
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["failures_at_1_mod_4"], 0);
    EXPECT_GT(j["failures_at_3_mod_4"].get<int>(), 0);
    EXPECT_TRUE(j["involution"].get<bool>());
    EXPECT_TRUE(j["every_swapped_character_caught"].get<bool>());
}

TEST(CliReports, ReconstructCubeRoots) {
    const Outcome r = arteq("reconstruct --field Qcbrt2 --field2 Qcbrt16 --bound 200 --format json");
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["search"]["verdict"], "unique sigma found");
    EXPECT_EQ(j["search"]["agreeing"][0]["image"], "1/2*t");
    EXPECT_EQ(j["search"]["matchings"][0], nlohmann::json::parse(R"({"p":5,"pairs":[[0,0],[1,1]],"f":[1,2]})"));
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
    for (const char* name : {"cube_roots.json", "gaussian.json", "falsified.json"}) {
        const fs::path a = scratch(std::string("a_") + name);
        const fs::path b = scratch(std::string("b_") + name);
        const int sa = arteq("run --config " + example(name) + " --out " + a.string()).status;
        const int sb = arteq("run --config " + example(name) + " --out " + b.string()).status;
        EXPECT_EQ(sa, sb);
        std::size_t files = 0;
        for (const auto& entry : fs::directory_iterator(a)) {
            ++files;
            EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << name << " " << entry.path();
        }
        EXPECT_GT(files, 0U) << name;
    }
}

TEST(CliDeterminism, SeedDoesNotChangeTables) {
    const Outcome a = arteq("split --field Qzeta8 --bound 200 --seed 1");
    const Outcome b = arteq("split --field Qzeta8 --bound 200 --seed 987654321");
    EXPECT_EQ(a.status, kExitOk);
    EXPECT_EQ(a.out, b.out);
}

TEST(JobConfig, ValuePositions) {
    const auto pos = value_positions("{\n  \"a\": [1,\n    {\"b/c\": \"x\"}],\n  \"d\": null\n}");
    EXPECT_EQ(pos.at(""), std::make_pair(1, 1));
    EXPECT_EQ(pos.at("/a"), std::make_pair(2, 8));
    EXPECT_EQ(pos.at("/a/1"), std::make_pair(3, 5));
    EXPECT_EQ(pos.at("/a/1/b~1c"), std::make_pair(3, 13));
    EXPECT_EQ(pos.at("/d"), std::make_pair(4, 8));
}

TEST(JobConfig, ParsesFieldsCharactersTasks) {
    const JobConfig cfg = load_config(example("gaussian.json"));
    EXPECT_EQ(cfg.bound, 100U);
    EXPECT_EQ(cfg.characters.size(), 3U);
    EXPECT_EQ(cfg.tasks.size(), 3U);
    const TaskOptions t = options_from_task(cfg, cfg.tasks[1], 1);
    EXPECT_EQ(t.name, "01-compare");
    EXPECT_EQ(t.bound, 100U);
    const Report r = run_task(cfg, t);
    EXPECT_EQ(r.verdict, kExitOk);
    EXPECT_EQ(r.json["comparison"]["tested_primes"], 25);

    EXPECT_THROW(parse_config(R"({"fields":[{"label":"Q","coefficients":[1,1]}]})", "x"), ConfigError);
    EXPECT_THROW(parse_config(R"({"characters":[{"name":"c","kind":"quad","field":"Qi","d":[0]}]})", "x"), ConfigError);
    EXPECT_THROW(parse_config(R"({"bound":1})", "x"), ConfigError);
    EXPECT_NO_THROW(parse_config(R"({"fields":[{"label":"Q","coefficients":[0,1]}]})", "x"));
}

}  // namespace
}  // namespace arteq::cli
