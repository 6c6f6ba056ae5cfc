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

#ifndef SPRAT_TESTS_GENERATORS_HPP
#define SPRAT_TESTS_GENERATORS_HPP

#include <random>

#include "sprat/automaton.hpp"
#include "sprat/expr.hpp"

namespace sprat::testing {

using Rng = std::mt19937_64;

/// Random expression with roughly `budget` nodes; draws all constructors.
Expr random_expr(Rng& rng, std::size_t budget, const Alphabet& sigma);

/// Random expression congruent to `e`, obtained by a handful of rewrites
/// that are sound for the additive congruence (summand shuffles, adding and
/// removing zero summands, duplicating summands, annihilator insertion).
Expr congruent_mutation(Rng& rng, const Expr& e);

/// Random explicit automaton: `n` states plus a sink, arbitrary transitions.
/// Not necessarily fork-acyclic.
PomsetAutomaton random_pa(Rng& rng, std::size_t n, const Alphabet& sigma);

/// Random automaton built against a level assignment so a fork hierarchy is
/// guaranteed to exist.
PomsetAutomaton random_fork_acyclic_pa(Rng& rng, std::size_t n, const Alphabet& sigma);

/// Random closed subset containing `q`: the least closed set around a random
/// seed set that includes `q`.
StateSet random_closed_subset(Rng& rng, PomsetAutomaton& a, State q);

} // namespace sprat::testing

#endif
