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

#include "sprat/io.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sprat {

using nlohmann::json;

namespace {

std::string want_string(const json& j, const char* what) {
    if (!j.is_string()) throw InvalidAutomatonError(std::string("expected string for ") + what);
    return j.get<std::string>();
}

} // namespace

PomsetAutomaton pa_from_json(const json& j) {
    if (!j.is_object()) throw InvalidAutomatonError("automaton document must be an object");
    for (const char* key : {"alphabet", "states", "sink", "finals", "delta"})
        if (!j.contains(key))
            throw InvalidAutomatonError(std::string("missing field: ") + key);

    Alphabet sigma;
    for (const json& s : j.at("alphabet")) alphabet_insert(sigma, Symbol(want_string(s, "alphabet")));
    if (sigma.size() != j.at("alphabet").size())
        throw InvalidAutomatonError("alphabet contains duplicates");

    std::vector<std::string> names;
    std::map<std::string, State> index;
    for (const json& s : j.at("states")) {
        std::string name = want_string(s, "states");
        if (index.count(name)) throw InvalidAutomatonError("duplicate state name: " + name);
        index[name] = static_cast<State>(names.size());
        names.push_back(std::move(name));
    }
    auto state_of = [&](const json& s, const char* what) -> State {
        std::string name = want_string(s, what);
        auto it = index.find(name);
        if (it == index.end()) throw InvalidAutomatonError("unknown state: " + name);
        return it->second;
    };

    State sink = state_of(j.at("sink"), "sink");
    StateSet finals;
    for (const json& s : j.at("finals")) finals.insert(state_of(s, "finals"));

    std::vector<std::vector<State>> delta_table(names.size(),
                                                std::vector<State>(sigma.size(), sink));
    std::vector<std::vector<bool>> seen(names.size(), std::vector<bool>(sigma.size(), false));
    for (const json& row : j.at("delta")) {
        if (!row.is_array() || row.size() != 3)
            throw InvalidAutomatonError("delta entries must be [state, symbol, state]");
        State from = state_of(row[0], "delta");
        Symbol sym(want_string(row[1], "delta"));
        auto it = std::lower_bound(sigma.begin(), sigma.end(), sym);
        if (it == sigma.end() || *it != sym)
            throw InvalidAutomatonError("delta uses symbol outside the alphabet: " + sym.name);
        std::size_t col = static_cast<std::size_t>(it - sigma.begin());
        if (seen[from][col])
            throw InvalidAutomatonError("duplicate delta entry for state " + names[from] +
                                        " and symbol " + sym.name);
        seen[from][col] = true;
        delta_table[from][col] = state_of(row[2], "delta");
    }
    for (std::size_t q = 0; q < names.size(); ++q)
        for (std::size_t c = 0; c < sigma.size(); ++c)
            if (!seen[q][c])
                throw InvalidAutomatonError("delta is not total: state " + names[q] +
                                            " lacks symbol " + sigma[c].name);

    std::vector<PomsetAutomaton::GammaEntry> gammas;
    if (j.contains("gamma")) {
        for (const json& row : j.at("gamma")) {
            if (!row.is_array() || row.size() != 3 || !row[1].is_array() || row[1].size() != 2)
                throw InvalidAutomatonError("gamma entries must be [state, [state, state], state]");
            State from = state_of(row[0], "gamma");
            StatePair f(state_of(row[1][0], "gamma"), state_of(row[1][1], "gamma"));
            gammas.push_back({from, f, state_of(row[2], "gamma")});
        }
    }
    return PomsetAutomaton(std::move(names), std::move(sigma), sink, std::move(finals),
                           std::move(delta_table), std::move(gammas));
}

json pa_to_json(const PomsetAutomaton& a) {
    json j;
    json alphabet = json::array();
    for (const Symbol& s : a.alphabet()) alphabet.push_back(s.name);
    j["alphabet"] = std::move(alphabet);

    json states = json::array();
    for (const std::string& n : a.names()) states.push_back(n);
    j["states"] = std::move(states);

    j["sink"] = a.names().at(a.sink_state());

    json finals = json::array();
    for (State f : a.finals()) finals.push_back(a.names().at(f));
    j["finals"] = std::move(finals);

    json delta = json::array();
    for (State q = 0; q < a.state_count(); ++q)
        for (const Symbol& s : a.alphabet())
            delta.push_back(json::array(
                {a.names().at(q), s.name, a.names().at(a.delta_at(q, s))}));
    j["delta"] = std::move(delta);

    json gamma = json::array();
    for (const auto& [key, target] : a.gamma_table()) {
        const auto& [from, f] = key;
        gamma.push_back(json::array({a.names().at(from),
                                     json::array({a.names().at(f.lo), a.names().at(f.hi)}),
                                     a.names().at(target)}));
    }
    j["gamma"] = std::move(gamma);
    return j;
}

std::string pa_to_dot(const PomsetAutomaton& a) {
    std::string out = "digraph pomset_automaton {\n  rankdir=LR;\n";
    auto quoted = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        q += '"';
        return q;
    };
    for (State q = 0; q < a.state_count(); ++q) {
        if (q == a.sink_state()) continue;
        out += "  " + quoted(a.names().at(q)) + " [shape=" +
               (a.final_at(q) ? "doublecircle" : "circle") + "];\n";
    }
    for (State q = 0; q < a.state_count(); ++q) {
        if (q == a.sink_state()) continue;
        for (const Symbol& s : a.alphabet()) {
            State t = a.delta_at(q, s);
            if (t == a.sink_state()) continue;
            out += "  " + quoted(a.names().at(q)) + " -> " + quoted(a.names().at(t)) +
                   " [label=" + quoted(s.name) + "];\n";
        }
    }
    std::size_t fork_id = 0;
    for (const auto& [key, target] : a.gamma_table()) {
        const auto& [from, f] = key;
        std::string hub = "fork" + std::to_string(fork_id++);
        out += "  " + hub + " [shape=point,label=\"\"];\n";
        out += "  " + quoted(a.names().at(from)) + " -> " + hub + " [dir=none];\n";
        out += "  " + hub + " -> " + quoted(a.names().at(f.lo)) + ";\n";
        out += "  " + hub + " -> " + quoted(a.names().at(f.hi)) + ";\n";
        out += "  " + hub + " -> " + quoted(a.names().at(target)) + " [style=dashed];\n";
    }
    out += "}\n";
    return out;
}

LabeledPoset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("order"))
        throw InvalidPosetError("poset document needs \"nodes\" and \"order\"");
    std::vector<std::string> ids;
    std::vector<Symbol> labels;
    std::map<std::string, std::size_t> index;
    for (const json& node : j.at("nodes")) {
        if (!node.is_object() || !node.contains("id") || !node.contains("label"))
            throw InvalidPosetError("poset nodes need \"id\" and \"label\"");
        std::string id = node.at("id").get<std::string>();
        if (index.count(id)) throw InvalidPosetError("duplicate node id: " + id);
        index[id] = ids.size();
        ids.push_back(id);
        labels.emplace_back(node.at("label").get<std::string>());
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const json& pr : j.at("order")) {
        if (!pr.is_array() || pr.size() != 2)
            throw InvalidPosetError("order entries must be [id, id]");
        auto a = index.find(pr[0].get<std::string>());
        auto b = index.find(pr[1].get<std::string>());
        if (a == index.end() || b == index.end())
            throw InvalidPosetError("order references unknown node");
        pairs.emplace_back(a->second, b->second);
    }
    return LabeledPoset::from_pairs(std::move(ids), std::move(labels), pairs);
}

json poset_to_json(const LabeledPoset& p) {
    json j;
    json nodes = json::array();
    for (std::size_t i = 0; i < p.count(); ++i)
        nodes.push_back(json{{"id", p.ids[i]}, {"label", p.labels[i].name}});
    j["nodes"] = std::move(nodes);
    json order = json::array();
    for (std::size_t i = 0; i < p.count(); ++i)
        for (std::size_t k = 0; k < p.count(); ++k)
            if (p.order[i][k]) order.push_back(json::array({p.ids[i], p.ids[k]}));
    j["order"] = std::move(order);
    return j;
}

} // namespace sprat
