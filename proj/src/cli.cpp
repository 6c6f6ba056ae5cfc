/*
 * Copyright 2026 the sprat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sprat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sprat/derivatives.hpp"
#include "sprat/extraction.hpp"
#include "sprat/io.hpp"

namespace sprat {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCapExceeded = 2;
constexpr int kStructureError = 3;

int report_parse_error(const ParseError& e, std::ostream& err) {
    err << "syntax error at column " << e.column() << ": " << e.what() << "\n";
    return kInputError;
}

nlohmann::json expr_to_json(const Expr& e) {
    using nlohmann::json;
    switch (e.kind()) {
    case Expr::Kind::Zero:
        return json{{"op", "zero"}};
    case Expr::Kind::One:
        return json{{"op", "one"}};
    case Expr::Kind::Letter:
        return json{{"op", "letter"}, {"symbol", e.letter_symbol().name}};
    case Expr::Kind::Star:
        return json{{"op", "star"}, {"arg", expr_to_json(e.body())}};
    case Expr::Kind::Plus:
        return json{{"op", "plus"}, {"lhs", expr_to_json(e.lhs())}, {"rhs", expr_to_json(e.rhs())}};
    case Expr::Kind::Dot:
        return json{{"op", "dot"}, {"lhs", expr_to_json(e.lhs())}, {"rhs", expr_to_json(e.rhs())}};
    case Expr::Kind::Par:
        return json{{"op", "par"}, {"lhs", expr_to_json(e.lhs())}, {"rhs", expr_to_json(e.rhs())}};
    }
    return {};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidAutomatonError("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void print_cycle(const PomsetAutomaton& a, const std::vector<State>& cycle, std::ostream& err) {
    err << "not fork-acyclic; witness cycle:";
    for (State s : cycle) err << " " << a.names().at(s);
    if (!cycle.empty()) err << " " << a.names().at(cycle.front());
    err << "\n";
}

} // namespace

int cmd_parse(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
              std::ostream& err) {
    try {
        Expr e = parse_expr(expr_text);
        if (cfg.format == OutputFormat::Json)
            out << expr_to_json(e).dump(2) << "\n";
        else
            out << e.ast_text() << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    }
}

int cmd_normalize(const std::string& expr_text, const CliConfig&, std::ostream& out,
                  std::ostream& err) {
    try {
        out << normalize(parse_expr(expr_text)).text() << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    }
}

int cmd_nullable(const std::string& expr_text, const CliConfig&, std::ostream& out,
                 std::ostream& err) {
    try {
        out << (nullable(parse_expr(expr_text)) ? "true" : "false") << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    }
}

int cmd_empty(const std::string& expr_text, const CliConfig&, std::ostream& out,
              std::ostream& err) {
    try {
        out << (is_empty(parse_expr(expr_text)) ? "true" : "false") << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    }
}

int cmd_enum(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
             std::ostream& err) {
    try {
        LanguageSample sample = enumerate_language(parse_expr(expr_text), cfg.max_size);
        for (const Pomset& u : sample) out << u.text() << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    }
}

int cmd_member(const std::string& expr_text, const std::string& pomset_text, const CliConfig& cfg,
               std::ostream& out, std::ostream& err) {
    try {
        Expr e = parse_expr(expr_text);
        Pomset u = parse_pomset(pomset_text);
        CompiledPA compiled = expr_to_pa(e, cfg.state_cap);
        out << (membership(compiled.pa, compiled.start, u) ? "true" : "false") << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    } catch (const CapExceededError& e) {
        err << e.what() << "\n";
        return kCapExceeded;
    }
}

int cmd_compile(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
                std::ostream& err) {
    try {
        CompiledPA compiled = expr_to_pa(parse_expr(expr_text), cfg.state_cap);
        switch (cfg.format) {
        case OutputFormat::Dot:
            out << pa_to_dot(compiled.pa);
            break;
        case OutputFormat::Text: {
            const PomsetAutomaton& a = compiled.pa;
            out << "start: " << a.names().at(compiled.start) << "\n";
            out << "sink: " << a.names().at(a.sink_state()) << "\n";
            out << "states:";
            for (const std::string& n : a.names()) out << " " << n;
            out << "\nfinals:";
            for (State f : a.finals()) out << " " << a.names().at(f);
            out << "\n";
            for (State q = 0; q < a.state_count(); ++q)
                for (const Symbol& s : a.alphabet())
                    out << "delta " << a.names().at(q) << " --" << s.name << "--> "
                        << a.names().at(a.delta_at(q, s)) << "\n";
            for (const auto& [key, target] : a.gamma_table())
                out << "gamma " << a.names().at(key.first) << " {" << a.names().at(key.second.lo)
                    << ", " << a.names().at(key.second.hi) << "} --> " << a.names().at(target)
                    << "\n";
            break;
        }
        case OutputFormat::Json:
        default:
            out << pa_to_json(compiled.pa).dump(2) << "\n";
            break;
        }
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    } catch (const CapExceededError& e) {
        err << e.what() << "\n";
        return kCapExceeded;
    }
}

int cmd_extract(const std::string& automaton_path, const std::string& state_name,
                const CliConfig&, std::ostream& out, std::ostream& err) {
    try {
        PomsetAutomaton a = pa_from_json(load_json_file(automaton_path));
        const auto& names = a.names();
        auto it = std::find(names.begin(), names.end(), state_name);
        if (it == names.end()) {
            err << "unknown state: " << state_name << "\n";
            return kInputError;
        }
        State q = static_cast<State>(it - names.begin());
        try {
            out << pa_to_expr(a, q).text() << "\n";
            return kOk;
        } catch (const NotForkAcyclicError& e) {
            print_cycle(a, e.cycle(), err);
            return kStructureError;
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kInputError;
    }
}

int cmd_equiv(const std::string& expr_text1, const std::string& expr_text2, std::size_t bound,
              const CliConfig&, std::ostream& out, std::ostream& err) {
    try {
        LanguageSample a = enumerate_language(parse_expr(expr_text1), bound);
        LanguageSample b = enumerate_language(parse_expr(expr_text2), bound);
        if (a == b) {
            out << "equivalent up to " << bound << "\n";
        } else {
            // Smallest witness in canonical order from the symmetric difference.
            LanguageSample diff;
            for (const Pomset& u : a)
                if (!b.count(u)) diff.insert(u);
            for (const Pomset& u : b)
                if (!a.count(u)) diff.insert(u);
            out << "counterexample: " << diff.begin()->text() << "\n";
        }
        return kOk;
    } catch (const ParseError& e) {
        return report_parse_error(e, err);
    }
}

int cmd_check_pa(const std::string& automaton_path, const CliConfig& cfg, std::ostream& out,
                 std::ostream& err) {
    try {
        PomsetAutomaton a = pa_from_json(load_json_file(automaton_path));
        StateSet all;
        for (State q = 0; q < a.state_count(); ++q) all.insert(q);
        bool closed = is_closed(a, all);

        std::vector<State> cycle;
        ForkOrder order;
        bool acyclic = true;
        try {
            order = fork_order(a);
        } catch (const NotForkAcyclicError& e) {
            acyclic = false;
            cycle = e.cycle();
        }

        if (cfg.format == OutputFormat::Json) {
            nlohmann::json j;
            j["states"] = a.state_count();
            j["alphabet"] = a.alphabet().size();
            j["totality"] = true; // enforced on load
            j["closed"] = closed;
            j["fork_acyclic"] = acyclic;
            if (acyclic) {
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& [r, q] : order.pairs)
                    pairs.push_back(nlohmann::json::array({a.names().at(r), a.names().at(q)}));
                j["fork_order"] = std::move(pairs);
            } else {
                nlohmann::json c = nlohmann::json::array();
                for (State s : cycle) c.push_back(a.names().at(s));
                j["cycle"] = std::move(c);
            }
            out << j.dump(2) << "\n";
        } else {
            out << "states: " << a.state_count() << "\n";
            out << "alphabet: " << a.alphabet().size() << "\n";
            out << "totality: ok\n";
            out << "closure(all states): " << (closed ? "closed" : "not closed") << "\n";
            out << "fork-acyclic: " << (acyclic ? "yes" : "no") << "\n";
            if (acyclic) {
                for (const auto& [r, q] : order.pairs)
                    out << "  " << a.names().at(r) << " < " << a.names().at(q) << "\n";
            }
        }
        if (!acyclic) {
            print_cycle(a, cycle, err);
            return kStructureError;
        }
        return kOk;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kInputError;
    }
}

int cmd_dot(const std::string& automaton_path, const CliConfig&, std::ostream& out,
            std::ostream& err) {
    try {
        PomsetAutomaton a = pa_from_json(load_json_file(automaton_path));
        out << pa_to_dot(a);
        return kOk;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kInputError;
    }
}

} // namespace sprat
