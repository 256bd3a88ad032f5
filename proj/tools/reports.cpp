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

#include "reports.hpp"

#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "arteq/arith.hpp"
#include "arteq/error.hpp"
#include "arteq/fixtures.hpp"
#include "arteq/lseries.hpp"
#include "arteq/reconstruction.hpp"

namespace arteq::cli {

namespace {

std::string value_text(const std::optional<CycInt>& v) { return v ? v->to_string() : "0"; }

nlohmann::json exclusions_json(const std::vector<Exclusion>& ex) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : ex) out.push_back(to_json(e));
    return out;
}

void exclusions_tsv(std::ostringstream& os, const std::vector<Exclusion>& ex) {
    for (const auto& e : ex) os << "# excluded\t" << e.p << "\t" << e.reason << "\n";
}

Report base_report(const TaskOptions& opt) {
    Report r;
    r.name = opt.name.empty() ? opt.command : opt.name;
    r.json = {{"command", opt.command}, {"bound", opt.bound}};
    return r;
}

Report run_split(const JobConfig& cfg, const TaskOptions& opt) {
    const FieldPtr K = cfg.field(opt.field);
    Report r = base_report(opt);
    std::ostringstream tsv;
    tsv << "p\tindex\te\tf\tlocal_factor\n";
    nlohmann::json rows = nlohmann::json::array();
    for (u64 p : primes_up_to(opt.bound)) {
        try {
            nlohmann::json ideals = nlohmann::json::array();
            for (const auto& P : split_prime(*K, p, opt.seed)) {
                const std::string factor = P.local_factor.to_string();
                tsv << p << "\t" << P.index << "\t" << P.e << "\t" << P.f << "\t" << factor << "\n";
                ideals.push_back({{"index", P.index}, {"e", P.e}, {"f", P.f}, {"local_factor", factor}});
            }
            rows.push_back({{"p", p}, {"primes", ideals}});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotPMaximal) throw;
            tsv << p << "\t-\t-\t-\t-\n";
            rows.push_back({{"p", p}, {"excluded", e.what()}});
        }
    }
    r.json["field"] = K->label();
    r.json["degree"] = K->degree();
    r.json["rows"] = rows;
    r.tsv = tsv.str();
    return r;
}

Report run_zeta(const JobConfig& cfg, const TaskOptions& opt) {
    const FieldPtr K = cfg.field(opt.field);
    const CharacterRep chi = cfg.character(opt.character, K, opt.l);
    const DirichletCoefficients c = dirichlet_coefficients_skipping(chi, *K, opt.bound);
    Report r = base_report(opt);
    r.json["field"] = K->label();
    r.json["character"] = to_json(chi);
    r.json["coefficients"] = to_json(c);
    std::ostringstream tsv;
    exclusions_tsv(tsv, c.excluded);
    tsv << to_tsv(c);
    r.tsv = tsv.str();
    return r;
}

Report run_lfactor(const JobConfig& cfg, const TaskOptions& opt) {
    const FieldPtr K = cfg.field(opt.field);
    const CharacterRep chi = cfg.character(opt.character, K, opt.l);
    const auto excluded = excluded_primes(*K, opt.bound);
    Report r = base_report(opt);
    std::ostringstream tsv;
    exclusions_tsv(tsv, excluded);
    tsv << "p\tdegree\tvanishing_order\tlocal_factor\n";
    nlohmann::json rows = nlohmann::json::array();
    std::size_t next = 0;
    for (u64 p : primes_up_to(opt.bound)) {
        if (next < excluded.size() && excluded[next].p == p) {
            ++next;
            continue;
        }
        const LocalFactor F = local_factor_at_p(chi, *K, p);
        const unsigned order = vanishing_order_at_one(F);
        tsv << p << "\t" << F.degree() << "\t" << order << "\t" << F.to_string() << "\n";
        rows.push_back({{"p", p}, {"vanishing_order", order}, {"factor", to_json(F)}});
    }
    r.json["field"] = K->label();
    r.json["character"] = to_json(chi);
    r.json["excluded"] = exclusions_json(excluded);
    r.json["rows"] = rows;
    r.tsv = tsv.str();
    return r;
}

Report run_compare(const JobConfig& cfg, const TaskOptions& opt) {
    const FieldPtr K = cfg.field(opt.field);
    const FieldPtr Kp = cfg.field(opt.field2.empty() ? opt.field : opt.field2);
    const CharacterRep chi = cfg.character(opt.character, K, opt.l);
    const CharacterRep chip = cfg.character(opt.character2, Kp, opt.l);
    const LComparison c = compare_lseries(chi, *K, chip, *Kp, opt.bound);
    Report r = base_report(opt);
    r.json["left"] = {{"field", K->label()}, {"character", to_json(chi)}};
    r.json["right"] = {{"field", Kp->label()}, {"character", to_json(chip)}};
    r.json["comparison"] = to_json(c);
    std::ostringstream tsv;
    exclusions_tsv(tsv, c.excluded);
    tsv << "equal\t" << (c.equal ? "yes" : "no") << "\n";
    tsv << "tested\t" << c.tested << "\n";
    if (!c.equal) {
        tsv << "first_mismatch\t" << c.first_mismatch << "\n";
        tsv << "left_factor\t" << c.left->to_string() << "\n";
        tsv << "right_factor\t" << c.right->to_string() << "\n";
    }
    r.tsv = tsv.str();
    r.verdict = c.equal ? kExitOk : kExitNegative;
    return r;
}

std::optional<CharIso> build_iso(const JobConfig& cfg, const TaskOptions& opt, const FieldPtr& K, const FieldPtr& Kp) {
    if (opt.rule == "identity") return CharIso(opt.l, K, Kp, IdentityRule{});
    if (opt.rule == "remark") return remark_rule(opt.p);
    if (opt.rule == "sigma") {
        const auto isos = find_isomorphisms(K, Kp);
        if (isos.empty()) return std::nullopt;
        if (opt.sigma_index >= isos.size()) {
            throw Error(ErrorKind::InvalidArgument, "sigma index " + std::to_string(opt.sigma_index) + " out of range; " +
                                                        std::to_string(isos.size()) + " isomorphisms");
        }
        return CharIso::induced_by(isos[opt.sigma_index], opt.l);
    }
    if (opt.rule == "table") {
        TableRule t;
        for (const auto& entry : opt.table) {
            const auto eq = entry.find('=');
            if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "table entry '" + entry + "' is not key=image");
            t.entries.emplace_back(cfg.character(entry.substr(0, eq), K, opt.l),
                                   cfg.character(entry.substr(eq + 1), Kp, opt.l));
        }
        return CharIso(opt.l, K, Kp, std::move(t));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown rule '" + opt.rule + "'");
}

Report run_reconstruct(const JobConfig& cfg, const TaskOptions& opt) {
    const FieldPtr K = cfg.field(opt.field);
    const FieldPtr Kp = cfg.field(opt.field2.empty() ? opt.field : opt.field2);
    Report r = base_report(opt);
    r.json["source"] = K->label();
    r.json["target"] = Kp->label();
    const auto psi = build_iso(cfg, opt, K, Kp);
    if (!psi) {
        r.json["verdict"] = "none found";
        r.json["reason"] = "no field isomorphism to induce a character isomorphism from";
        r.tsv = "# verdict\tnone found\n";
        r.verdict = kExitNegative;
        return r;
    }
    const SigmaSearch s = recover_isomorphism(*psi, opt.bound);
    r.json["rule"] = psi->describe();
    r.json["search"] = to_json(s);
    std::ostringstream tsv;
    tsv << "# verdict\t" << s.verdict() << "\n";
    if (s.falsified()) tsv << "# failure\t" << *s.failure_prime << "\t" << s.failure << "\n";
    for (const auto& sigma : s.agreeing) tsv << "# sigma\ttheta -> " << sigma.image_of_generator().to_string() << "\n";
    exclusions_tsv(tsv, s.excluded);
    tsv << "p\tsource_index\ttarget_index\tf\n";
    for (const auto& [p, m] : s.matchings) {
        for (std::size_t k = 0; k < m.pairs.size(); ++k) {
            tsv << p << "\t" << m.pairs[k].first << "\t" << m.pairs[k].second << "\t" << m.f[k] << "\n";
        }
    }
    r.tsv = tsv.str();
    r.verdict = s.unique() ? kExitOk : kExitNegative;
    return r;
}

Report run_gassmann(const JobConfig& cfg, const TaskOptions& opt) {
    const FieldPtr K = cfg.field(opt.field);
    const FieldPtr Kp = cfg.field(opt.field2.empty() ? opt.field : opt.field2);
    const GassmannReport g = gassmann_check(K, Kp, opt.bound);
    Report r = base_report(opt);
    r.json["fields"] = {K->label(), Kp->label()};
    r.json["report"] = to_json(g);
    const bool equivalent = g.zeta.equal && g.splitting_types_equal;
    r.json["arithmetically_equivalent"] = equivalent;
    std::ostringstream tsv;
    exclusions_tsv(tsv, g.excluded);
    tsv << "zeta_equal\t" << (g.zeta.equal ? "yes" : "no") << "\n";
    if (!g.zeta.equal) tsv << "zeta_first_mismatch\t" << g.zeta.first_mismatch << "\n";
    tsv << "splitting_types_equal\t" << (g.splitting_types_equal ? "yes" : "no") << "\n";
    if (!g.splitting_types_equal) tsv << "splitting_first_mismatch\t" << g.first_type_mismatch << "\n";
    tsv << "tested\t" << g.tested << "\n";
    tsv << "isomorphisms\t" << g.isomorphisms << "\n";
    r.tsv = tsv.str();
    r.verdict = equivalent ? kExitOk : kExitNegative;
    return r;
}

Report run_remark(const TaskOptions& opt) {
    const FieldPtr Q = fixtures::field("Q");
    const CharIso psi = remark_rule(opt.p);
    std::vector<CharacterRep> sample;
    for (long d = -opt.dmax; d <= opt.dmax; ++d) {
        if (d == 0 || d == 1) continue;
        bool squarefree = true;
        for (const auto& [q, e] : factor_u64(static_cast<u64>(d < 0 ? -d : d))) squarefree = squarefree && e == 1;
        if (squarefree) sample.push_back(quad_char(FieldElement::from_int(Q, d)));
    }
    std::map<u64, PrimeMatching> phi;
    for (u64 q : primes_up_to(opt.bound)) phi.emplace(q, identity_matching(*Q, q));
    const CompatReport c = verify_compatibility(psi, phi, opt.bound, sample);

    std::vector<std::string> fixed;
    std::vector<std::string> swapped;
    bool involution = true;
    for (const auto& chi : sample) {
        const CharacterRep image = psi.apply(chi);
        (image == chi ? fixed : swapped).push_back(chi.describe());
        involution = involution && psi.apply(image) == chi;
    }
    std::size_t one_mod_four = 0;
    std::set<std::string> caught;
    std::ostringstream tsv;
    tsv << "q\tq_mod_4\tcharacter\texpected\tgot\n";
    for (const auto& f : c.failures) {
        if (f.p % 4 == 1) ++one_mod_four;
        if (f.p % 4 == 3) caught.insert(f.character);
        tsv << f.p << "\t" << f.p % 4 << "\t" << f.character << "\t" << value_text(f.expected) << "\t"
            << value_text(f.got) << "\n";
    }
    const bool all_caught = caught.size() == swapped.size();

    Report r = base_report(opt);
    r.json["p"] = opt.p;
    r.json["dmax"] = opt.dmax;
    r.json["fixed"] = fixed;
    r.json["swapped"] = swapped;
    r.json["involution"] = involution;
    r.json["failures_at_1_mod_4"] = one_mod_four;
    r.json["failures_at_3_mod_4"] = c.failures.size() - one_mod_four;
    r.json["every_swapped_character_caught"] = all_caught;
    r.json["report"] = to_json(c);
    r.tsv = tsv.str();
    const bool pattern = one_mod_four == 0 && involution && all_caught && !swapped.empty();
    r.verdict = pattern ? kExitOk : kExitNegative;
    return r;
}

template <class T>
T task_value(const nlohmann::json& task, const char* key, T fallback) {
    if (!task.contains(key)) return fallback;
    return task.at(key).get<T>();
}

}  // namespace

std::string Report::render(const std::string& format) const {
    if (format == "json") return json.dump(2) + "\n";
    return tsv;
}

TaskOptions options_from_task(const JobConfig& cfg, const nlohmann::json& task, std::size_t position) {
    TaskOptions o;
    try {
        o.command = task.at("command").get<std::string>();
        std::ostringstream name;
        name << std::setw(2) << std::setfill('0') << position << "-" << o.command;
        o.name = task_value<std::string>(task, "name", name.str());
        o.bound = task_value<u64>(task, "bound", cfg.bound.value_or(o.bound));
        o.seed = task_value<u64>(task, "seed", cfg.seed.value_or(o.seed));
        o.field = task_value<std::string>(task, "field", o.field);
        o.field2 = task_value<std::string>(task, "field2", o.field2);
        o.character = task_value<std::string>(task, "character", o.character);
        o.character2 = task_value<std::string>(task, "character2", o.character2);
        o.l = task_value<unsigned>(task, "l", o.l);
        o.rule = task_value<std::string>(task, "rule", o.rule);
        o.sigma_index = task_value<std::size_t>(task, "sigma_index", o.sigma_index);
        o.table = task_value<std::vector<std::string>>(task, "table", o.table);
        o.p = task_value<u64>(task, "p", o.p);
        o.dmax = task_value<long>(task, "dmax", o.dmax);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(cfg.source + ": /tasks/" + std::to_string(position) + ": " + e.what());
    }
    return o;
}

Report run_task(const JobConfig& cfg, const TaskOptions& opt) {
    if (opt.bound < 2) throw Error(ErrorKind::InvalidArgument, "bound must be at least 2");
    if (opt.command == "split") return run_split(cfg, opt);
    if (opt.command == "zeta") return run_zeta(cfg, opt);
    if (opt.command == "lfactor") return run_lfactor(cfg, opt);
    if (opt.command == "compare") return run_compare(cfg, opt);
    if (opt.command == "reconstruct") return run_reconstruct(cfg, opt);
    if (opt.command == "gassmann") return run_gassmann(cfg, opt);
    if (opt.command == "remark") return run_remark(opt);
    throw Error(ErrorKind::InvalidArgument, "unknown command '" + opt.command + "'");
}

}  // namespace arteq::cli
