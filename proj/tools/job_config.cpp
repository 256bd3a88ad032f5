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

#include "job_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "arteq/error.hpp"
#include "arteq/fixtures.hpp"

namespace arteq::cli {

namespace {

// Structural walk over valid JSON recording where each value starts.
class PositionIndex {
  public:
    explicit PositionIndex(const std::string& text) : s_(text) {}

    std::map<std::string, std::pair<int, int>> run() {
        value("");
        return std::move(out_);
    }

  private:
    void advance() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])) != 0) advance();
    }

    std::string string_token() {
        std::string raw;
        advance();  // opening quote
        while (s_[i_] != '"') {
            if (s_[i_] == '\\') {
                raw += s_[i_];
                advance();
            }
            raw += s_[i_];
            advance();
        }
        advance();
        return nlohmann::json::parse("\"" + raw + "\"").get<std::string>();
    }

    static std::string escape(const std::string& key) {
        std::string out;
        for (char c : key) {
            if (c == '~') out += "~0";
            else if (c == '/') out += "~1";
            else out += c;
        }
        return out;
    }

    void value(const std::string& ptr) {
        skip_ws();
        out_[ptr] = {line_, col_};
        const char c = s_[i_];
        if (c == '{') {
            advance();
            skip_ws();
            while (s_[i_] != '}') {
                const std::string key = string_token();
                skip_ws();
                advance();  // colon
                value(ptr + "/" + escape(key));
                skip_ws();
                if (s_[i_] == ',') advance();
                skip_ws();
            }
            advance();
        } else if (c == '[') {
            advance();
            skip_ws();
            for (std::size_t k = 0; s_[i_] != ']'; ++k) {
                value(ptr + "/" + std::to_string(k));
                skip_ws();
                if (s_[i_] == ',') advance();
                skip_ws();
            }
            advance();
        } else if (c == '"') {
            string_token();
        } else {
            while (i_ < s_.size() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) advance();
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::map<std::string, std::pair<int, int>> out_;
};

class Schema {
  public:
    Schema(const std::string& source, const std::string& text) : source_(source), pos_(value_positions(text)) {}

    [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
        std::ostringstream os;
        os << source_;
        // Walk up to the nearest recorded ancestor for missing keys.
        std::string p = ptr;
        while (pos_.find(p) == pos_.end() && !p.empty()) p = p.substr(0, p.rfind('/'));
        if (const auto it = pos_.find(p); it != pos_.end()) os << ":" << it->second.first << ":" << it->second.second;
        os << ": " << (ptr.empty() ? "/" : ptr) << ": " << msg;
        throw ConfigError(os.str());
    }

    u64 positive(const nlohmann::json& j, const std::string& ptr, u64 min) const {
        if (!j.is_number_unsigned() || j.get<u64>() < min) fail(ptr, "expected an integer >= " + std::to_string(min));
        return j.get<u64>();
    }

    std::string label(const nlohmann::json& j, const std::string& ptr) const {
        if (!j.is_string() || j.get<std::string>().empty()) fail(ptr, "expected a non-empty string");
        return j.get<std::string>();
    }

  private:
    std::string source_;
    std::map<std::string, std::pair<int, int>> pos_;
};

const std::set<std::string> kTopKeys = {"fields", "characters", "tasks", "bound", "seed", "format"};

}  // namespace

std::map<std::string, std::pair<int, int>> value_positions(const std::string& text) { return PositionIndex(text).run(); }

FieldPtr JobConfig::field(const std::string& label) const {
    if (const auto it = fields.find(label); it != fields.end()) return it->second;
    return fixtures::field(label);
}

CharacterRep JobConfig::character(const std::string& ref, const FieldPtr& base, unsigned l) const {
    if (ref.empty() || ref == "trivial") return TrivialChar{base, l};
    if (const auto it = characters.find(ref); it != characters.end()) return it->second;
    if (ref.front() == '{') {
        return character_from_json(nlohmann::json::parse(ref), [this](const std::string& s) { return field(s); });
    }
    throw Error(ErrorKind::InvalidArgument, "unknown character '" + ref + "'");
}

JobConfig parse_config(const std::string& text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Report the byte offset as a line and column.
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
    const Schema schema(source, text);
    if (!doc.is_object()) schema.fail("", "expected an object");
    for (const auto& [key, v] : doc.items()) {
        if (kTopKeys.count(key) == 0) schema.fail("/" + key, "unknown key");
    }

    JobConfig cfg;
    cfg.source = source;
    if (doc.contains("bound")) cfg.bound = schema.positive(doc["bound"], "/bound", 2);
    if (doc.contains("seed")) cfg.seed = schema.positive(doc["seed"], "/seed", 0);
    if (doc.contains("format")) {
        const std::string f = schema.label(doc["format"], "/format");
        if (f != "tsv" && f != "json") schema.fail("/format", "expected \"tsv\" or \"json\"");
        cfg.format = f;
    }

    if (doc.contains("fields")) {
        const auto& fields = doc["fields"];
        if (!fields.is_array()) schema.fail("/fields", "expected an array");
        for (std::size_t k = 0; k < fields.size(); ++k) {
            const std::string ptr = "/fields/" + std::to_string(k);
            const auto& f = fields[k];
            if (!f.is_object() || !f.contains("label")) schema.fail(ptr, "expected {\"label\", \"coefficients\"}");
            if (!f.contains("coefficients")) schema.fail(ptr, "missing key 'coefficients'");
            const std::string label = schema.label(f["label"], ptr + "/label");
            if (cfg.fields.count(label) != 0) schema.fail(ptr + "/label", "duplicate label " + label);
            const auto& c = f["coefficients"];
            if (!c.is_array() || c.size() < 2) schema.fail(ptr + "/coefficients", "expected at least two integers");
            IntPoly poly;
            for (std::size_t i = 0; i < c.size(); ++i) {
                const std::string cp = ptr + "/coefficients/" + std::to_string(i);
                if (c[i].is_number_integer()) {
                    poly.emplace_back(std::to_string(c[i].get<long long>()));
                } else if (c[i].is_string()) {
                    mpz_class z;
                    if (z.set_str(c[i].get<std::string>(), 10) != 0) schema.fail(cp, "not an integer");
                    poly.push_back(z);
                } else {
                    schema.fail(cp, "expected an integer or a decimal string");
                }
            }
            try {
                FieldPtr K = NumberField::make(label, poly);
                const auto& labels = fixtures::labels();
                if (std::find(labels.begin(), labels.end(), label) != labels.end() &&
                    !(fixtures::field(label)->poly() == K->poly())) {
                    schema.fail(ptr + "/label", "label " + label + " names a built-in field with another polynomial");
                }
                cfg.fields.emplace(label, std::move(K));
            } catch (const Error& e) {
                schema.fail(ptr + "/coefficients", e.what());
            }
        }
    }

    if (doc.contains("characters")) {
        const auto& chars = doc["characters"];
        if (!chars.is_array()) schema.fail("/characters", "expected an array");
        for (std::size_t k = 0; k < chars.size(); ++k) {
            const std::string ptr = "/characters/" + std::to_string(k);
            const auto& c = chars[k];
            if (!c.is_object() || !c.contains("name")) schema.fail(ptr, "expected an object with a 'name'");
            const std::string name = schema.label(c["name"], ptr + "/name");
            if (cfg.characters.count(name) != 0 || name == "trivial") schema.fail(ptr + "/name", "duplicate name " + name);
            nlohmann::json body = c;
            body.erase("name");
            try {
                cfg.characters.emplace(name, character_from_json(body, [&](const std::string& s) {
                                           try {
                                               return cfg.field(s);
                                           } catch (const Error&) {
                                               schema.fail(ptr + "/field", "undefined field " + s);
                                           }
                                       }));
            } catch (const Error& e) {
                schema.fail(ptr, e.what());
            }
        }
    }

    if (doc.contains("tasks")) {
        const auto& tasks = doc["tasks"];
        if (!tasks.is_array()) schema.fail("/tasks", "expected an array");
        static const std::set<std::string> kCommands = {"split",       "zeta",     "lfactor", "compare",
                                                        "reconstruct", "gassmann", "remark"};
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            const std::string ptr = "/tasks/" + std::to_string(k);
            const auto& t = tasks[k];
            if (!t.is_object() || !t.contains("command")) schema.fail(ptr, "expected an object with a 'command'");
            const std::string cmd = schema.label(t["command"], ptr + "/command");
            if (kCommands.count(cmd) == 0) schema.fail(ptr + "/command", "unknown command " + cmd);
            for (const char* key : {"field", "field2"}) {
                if (!t.contains(key)) continue;
                const std::string label = schema.label(t[key], ptr + "/" + key);
                try {
                    cfg.field(label);
                } catch (const Error&) {
                    schema.fail(ptr + "/" + key, "undefined field " + label);
                }
            }
            for (const char* key : {"character", "character2"}) {
                if (!t.contains(key)) continue;
                const std::string name = schema.label(t[key], ptr + "/" + key);
                if (name != "trivial" && cfg.characters.count(name) == 0) {
                    schema.fail(ptr + "/" + key, "undefined character " + name);
                }
            }
            if (t.contains("bound")) schema.positive(t["bound"], ptr + "/bound", 2);
            cfg.tasks.push_back(t);
        }
    }
    return cfg;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace arteq::cli
