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

#ifndef SPRAT_EXTRACTION_HPP
#define SPRAT_EXTRACTION_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "sprat/automaton.hpp"
#include "sprat/expr.hpp"

namespace sprat {

/// Memo tables for the path-expression recursion over one automaton.
///
/// `plus_expr(r)` denotes the non-empty part of the language at `r`; it is
/// filled lazily in an order compatible with the fork hierarchy, so entries
/// for fork components exist by the time a base case reads them. Invocation
/// local; not thread-safe.
class PathExprTable {
public:
    explicit PathExprTable(const PomsetAutomaton& a) : a_(a) {}

    const PomsetAutomaton& automaton() const { return a_; }

    /// Expression for all non-empty traces from `r` to an accepting state.
    const Expr& plus_expr(State r);

    std::map<std::tuple<State, State, std::vector<State>>, Expr> memo;

private:
    const PomsetAutomaton& a_;
    std::map<State, Expr> plus_;
};

/// Expression denoting the non-empty traces from `q` to `q2` whose
/// intermediate states of the top-level sequential run stay inside
/// `through`. Base case: one summand per letter stepping q -> q2 plus one
/// parallel summand per supported fork joining at q2. Pivot case: removes
/// the least state of `through` and routes around it with a star.
Expr path_expr(const PomsetAutomaton& a, State q, State q2, const StateSet& through,
               PathExprTable& table);

/// Series-rational expression whose language equals the language of `q`.
/// Requires a fork hierarchy; throws NotForkAcyclicError with a witness
/// cycle otherwise. The result is passed through the additive normal form,
/// so it is deterministic and zero-pruned but not otherwise simplified.
Expr pa_to_expr(const PomsetAutomaton& a, State q);

} // namespace sprat

#endif
