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

#ifndef SPRAT_IO_HPP
#define SPRAT_IO_HPP

#include <string>

#include "json.hpp"

#include "sprat/automaton.hpp"
#include "sprat/pomset.hpp"

namespace sprat {

/// Automaton wire format:
///   { "alphabet": [str], "states": [str], "sink": str, "finals": [str],
///     "delta": [[state, symbol, state]], "gamma": [[state, [state, state], state]] }
/// Every (state, symbol) pair must appear exactly once in "delta"; missing
/// "gamma" entries mean the sink. Throws InvalidAutomatonError.
PomsetAutomaton pa_from_json(const nlohmann::json& j);

/// Inverse of pa_from_json; keys are emitted sorted and arrays in state and
/// alphabet order, so output is byte-stable.
nlohmann::json pa_to_json(const PomsetAutomaton& a);

/// Graphviz rendering: labelled arrows for sequential steps; each fork is a
/// fan-in point node connected to both components with a dashed arrow to the
/// join state. Edges into the sink are not drawn.
std::string pa_to_dot(const PomsetAutomaton& a);

/// Poset wire format:
///   { "nodes": [{"id": str, "label": str}], "order": [[id, id], ...] }
/// Order pairs give the strict order; the transitive closure is applied on
/// load. Throws InvalidPosetError.
LabeledPoset poset_from_json(const nlohmann::json& j);

nlohmann::json poset_to_json(const LabeledPoset& p);

} // namespace sprat

#endif
