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

// Independent oracles used by the test suites. Everything here recomputes
// results from first principles (exhaustive search over explicit posets and
// traces) so it exercises none of the code paths it is checking.

#ifndef SPRAT_TESTS_ORACLES_HPP
#define SPRAT_TESTS_ORACLES_HPP

#include <vector>

#include "sprat/automaton.hpp"
#include "sprat/expr.hpp"
#include "sprat/pomset.hpp"

namespace sprat::testing {

/// Maximum antichain size by exhaustive subset search.
std::size_t brute_width(const LabeledPoset& p);

/// Labelled-poset isomorphism by backtracking over label/degree-compatible
/// node assignments.
bool poset_isomorphic(const LabeledPoset& a, const LabeledPoset& b);

/// All non-empty canonical series-parallel pomsets over `sigma` with at most
/// `max_size` points.
LanguageSample pomset_universe(const Alphabet& sigma, std::size_t max_size);

/// Memo-free membership decision, written directly against the trace rules.
bool naive_accepts(StateSpace& space, State q, const Pomset& u);

/// Exhaustive search for a trace of non-empty `u` from `q` to `q2` whose
/// strictly interior states of the top-level sequential run all lie in
/// `through`. Fork steps go only through the support (productive joins).
bool trace_within(PomsetAutomaton& a, State q, const Pomset& u, State q2,
                  const StateSet& through);

/// The worked example automaton: prepare, then bake beside caramelize, then
/// glaze. States q0..q7 plus the sink, indices 0..8 with sink = 8.
PomsetAutomaton cookie_pa();

} // namespace sprat::testing

#endif
