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

#ifndef SPRAT_DERIVATIVES_HPP
#define SPRAT_DERIVATIVES_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sprat/automaton.hpp"
#include "sprat/expr.hpp"

namespace sprat {

/// Sequential derivative: the residual expression after consuming one
/// occurrence of `a`, built symbolically and left un-normalized.
Expr delta_deriv(const Expr& e, const Symbol& a);

/// Parallel derivative: the residual after a completed fork whose two
/// branches started at `f` and `g` (an unordered pair, compared up to the
/// additive congruence). Un-normalized.
Expr gamma_deriv(const Expr& e, const Expr& f, const Expr& g);

/// Normal-form pairs {g, h} for every parallel subterm g || h of `n`.
/// A superset of the state's productive forks: any pair outside it joins to
/// zero.
std::set<std::pair<NormalExpr, NormalExpr>> candidate_forks(const NormalExpr& n);

/// The derivative-generated state space over congruence classes, unfolded
/// lazily: states are interned normal forms, the empty sum is the sink,
/// finality is nullability, and both transition functions normalize the
/// symbolic derivative of a representative. Not thread-safe (interns and
/// memoises on demand).
class SyntacticStateSpace final : public StateSpace {
public:
    explicit SyntacticStateSpace(Alphabet sigma);

    /// Returns the state for a normal form, creating it when new.
    State intern(const NormalExpr& n);
    const NormalExpr& expr_of(State q) const { return exprs_.at(q); }

    State sink() override { return 0; }
    bool is_final(State q) override;
    State delta(State q, const Symbol& a) override;
    State gamma(State q, StatePair forks) override;
    std::vector<StatePair> fork_candidates(State q) override;
    const Alphabet& alphabet() const override { return sigma_; }
    std::string state_label(State q) override { return exprs_.at(q).text(); }

private:
    Alphabet sigma_;
    std::vector<NormalExpr> exprs_;
    std::map<std::string, State> index_; // key -> state
    std::map<std::pair<State, Symbol>, State> delta_memo_;
    std::map<std::pair<State, StatePair>, State> gamma_memo_;
};

/// A finite automaton compiled from an expression; `start` accepts exactly
/// the expression's language. State names are normal-form renderings.
struct CompiledPA {
    PomsetAutomaton pa;
    State start;
};

/// Compiles by materialising the closed sub-space around the normal form of
/// `e`. Throws CapExceededError when `cap` is too small (the reachable
/// quotient is always finite).
CompiledPA expr_to_pa(const Expr& e, std::size_t cap = 10000);

} // namespace sprat

#endif
