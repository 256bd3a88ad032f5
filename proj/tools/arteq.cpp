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

// arteq: splitting tables, L-series coefficients and comparisons, prime
// matchings reconstructed from character isomorphisms.
//
// Exit status: 0 success, 2 negative verdict, 1 usage or config error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "arteq/error.hpp"
#include "job_config.hpp"
#include "reports.hpp"

namespace {

using arteq::cli::JobConfig;
using arteq::cli::Report;
using arteq::cli::TaskOptions;

struct Common {
    std::string config;
    std::optional<arteq::u64> bound;
    std::optional<arteq::u64> seed;
    std::string format;
    std::string out;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--config", c.config, "job configuration (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--bound", c.bound, "prime or coefficient bound B")->check(CLI::Range(2ULL, 1ULL << 40));
    sub->add_option("--seed", c.seed, "seed for randomized factoring");
    sub->add_option("--format", c.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--out", c.out, "directory for report files; stdout when absent");
}

void emit(const Report& r, const std::string& format, const std::string& out) {
    const std::string body = r.render(format);
    if (out.empty()) {
        std::cout << body;
        return;
    }
    std::filesystem::create_directories(out);
    const auto path = std::filesystem::path(out) / (r.name + "." + format);
    std::ofstream f(path, std::ios::binary);
    f << body;
    if (!f) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arteq: characters, L-series and prime matchings of number fields"};
    app.require_subcommand(1);

    Common common;
    TaskOptions opt;
    const auto field_opt = [&](CLI::App* s) { s->add_option("--field", opt.field, "field label"); };
    const auto field2_opt = [&](CLI::App* s) { s->add_option("--field2", opt.field2, "second field label"); };
    const auto char_opt = [&](CLI::App* s) {
        s->add_option("--character", opt.character, "character name, 'trivial', or inline JSON");
        s->add_option("--l", opt.l, "character order")->check(CLI::Range(2U, 1000U));
    };

    CLI::App* split = app.add_subcommand("split", "splitting of rational primes up to B");
    field_opt(split);
    CLI::App* zeta = app.add_subcommand("zeta", "Dirichlet coefficients a_n, n <= B");
    field_opt(zeta);
    char_opt(zeta);
    CLI::App* lfactor = app.add_subcommand("lfactor", "local factors at p <= B");
    field_opt(lfactor);
    char_opt(lfactor);
    CLI::App* compare = app.add_subcommand("compare", "compare two L-series up to B");
    field_opt(compare);
    field2_opt(compare);
    char_opt(compare);
    compare->add_option("--character2", opt.character2, "second character");
    CLI::App* reconstruct = app.add_subcommand("reconstruct", "prime matchings from a character isomorphism");
    field_opt(reconstruct);
    field2_opt(reconstruct);
    reconstruct->add_option("--l", opt.l, "character order")->check(CLI::Range(2U, 1000U));
    reconstruct->add_option("--rule", opt.rule, "identity, sigma, remark or table")
        ->check(CLI::IsMember({"identity", "sigma", "remark", "table"}));
    reconstruct->add_option("--sigma-index", opt.sigma_index, "which field isomorphism induces the rule");
    reconstruct->add_option("--table", opt.table, "key=image character pairs for the table rule");
    reconstruct->add_option("--p", opt.p, "prime of the remark rule");
    CLI::App* gassmann = app.add_subcommand("gassmann", "arithmetic equivalence check up to B");
    field_opt(gassmann);
    field2_opt(gassmann);
    CLI::App* remark = app.add_subcommand("remark", "a rule compatible at p = 1 mod 4 only");
    remark->add_option("--p", opt.p, "prime = 1 mod 4");
    remark->add_option("--dmax", opt.dmax, "sample chi_sqrt(d) for squarefree |d| <= dmax")->check(CLI::Range(2L, 100000L));
    CLI::App* run = app.add_subcommand("run", "run every task of a config");

    for (CLI::App* s : {split, zeta, lfactor, compare, reconstruct, gassmann, remark, run}) add_common(s, common);
    run->get_option("--config")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return arteq::cli::kExitUsage;
    }

    try {
        JobConfig cfg;
        if (!common.config.empty()) cfg = arteq::cli::load_config(common.config);
        const std::string format = !common.format.empty() ? common.format : cfg.format.value_or("tsv");

        std::vector<TaskOptions> tasks;
        if (run->parsed()) {
            for (std::size_t k = 0; k < cfg.tasks.size(); ++k) {
                tasks.push_back(arteq::cli::options_from_task(cfg, cfg.tasks[k], k));
            }
        } else {
            opt.command = app.get_subcommands().front()->get_name();
            if (cfg.bound) opt.bound = *cfg.bound;
            if (cfg.seed) opt.seed = *cfg.seed;
            tasks.push_back(opt);
        }
        int status = arteq::cli::kExitOk;
        for (auto& t : tasks) {
            if (common.bound) t.bound = *common.bound;
            if (common.seed) t.seed = *common.seed;
            const Report r = arteq::cli::run_task(cfg, t);
            emit(r, format, common.out);
            status = std::max(status, r.verdict);
        }
        return status;
    } catch (const arteq::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
    } catch (const arteq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return arteq::cli::kExitUsage;
}
