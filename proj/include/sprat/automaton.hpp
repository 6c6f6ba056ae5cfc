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

#ifndef SPRAT_AUTOMATON_HPP
#define SPRAT_AUTOMATON_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sprat/errors.hpp"
#include "sprat/pomset.hpp"
#include "sprat/symbol.hpp"

namespace sprat {

using State = std::uint32_t;
using StateSet = std::set<State>;

/// Unordered pair of states (a two-element multiset: lo may equal hi).
struct StatePair {
    State lo;
    State hi;

    StatePair(State a, State b) : lo(a < b ? a : b), hi(a < b ? b : a) {}
    auto operator<=>(const StatePair&) const = default;
};

/// Abstract pomset-automaton state space. A concrete automaton implements
/// it, and so does the lazily unfolded derivative space, so trace queries
/// and sub-automaton extraction run over either.
///
/// Contract: the sink is absorbing and non-final; `gamma(q, f)` returns the
/// sink for every pair `f` outside `fork_candidates(q)`, which in turn must
/// cover every pair whose join at `q` is productive. Methods are non-const
/// because lazy implementations intern states on demand; implementations
/// must either be safe for concurrent read-only use or say they are not.
class StateSpace {
public:
    virtual ~StateSpace() = default;

    virtual State sink() = 0;
    virtual bool is_final(State q) = 0;
    virtual State delta(State q, const Symbol& a) = 0;
    virtual State gamma(State q, StatePair forks) = 0;

    /// Finite overapproximation of the productive fork pairs at `q`,
    /// in a deterministic order.
    virtual std::vector<StatePair> fork_candidates(State q) = 0;

    virtual const Alphabet& alphabet() const = 0;

    /// Human-readable name for diagnostics and serialization.
    virtual std::string state_label(State q) = 0;
};

/// Finite pomset automaton with explicit tables.
///
/// `delta` is total over states x alphabet; symbols outside the alphabet go
/// to the sink. `gamma` is stored sparsely; a missing entry means the sink.
/// Entries whose source, components or target involve the sink never
/// contribute a trace and are dropped at construction. Immutable after
/// construction and freely shareable.
class PomsetAutomaton final : public StateSpace {
public:
    struct GammaEntry {
        State source;
        StatePair forks;
        State target;
    };

    PomsetAutomaton(std::vector<std::string> names, Alphabet sigma, State sink_state,
                    StateSet finals, std::vector<std::vector<State>> delta_table,
                    std::vector<GammaEntry> gamma_entries);

    std::size_t state_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const StateSet& finals() const { return finals_; }
    const std::map<std::pair<State, StatePair>, State>& gamma_table() const { return gamma_; }

    State sink_state() const { return sink_; }
    bool final_at(State q) const { return finals_.count(q) != 0; }
    State delta_at(State q, const Symbol& a) const;
    State gamma_at(State q, StatePair f) const;

    // StateSpace interface.
    State sink() override { return sink_; }
    bool is_final(State q) override { return final_at(q); }
    State delta(State q, const Symbol& a) override { return delta_at(q, a); }
    State gamma(State q, StatePair f) override { return gamma_at(q, f); }
    std::vector<StatePair> fork_candidates(State q) override;
    const Alphabet& alphabet() const override { return sigma_; }
    std::string state_label(State q) override { return names_.at(q); }

private:
    std::vector<std::string> names_;
    Alphabet sigma_;
    State sink_;
    StateSet finals_;
    std::vector<std::vector<State>> delta_; // [state][symbol index]
    std::map<std::pair<State, StatePair>, State> gamma_;
};

/// Trace-relation membership with per-instance memoisation. One instance
/// serves many queries against the same space; it is not thread-safe.
class Matcher {
public:
    explicit Matcher(StateSpace& space) : space_(space) {}

    /// True iff `u` is in the language of `q`.
    bool accepts(State q, const Pomset& u);

    /// States reachable from `q` by a trace labelled with non-empty `u`,
    /// excluding the sink (the sink never leads to acceptance).
    const StateSet& targets(State q, const Pomset& u);

private:
    bool accepts_nonempty(State q, const Pomset& u);

    StateSpace& space_;
    std::map<std::pair<State, Pomset>, StateSet> memo_;
};

/// Convenience wrapper: one-shot membership query.
bool membership(StateSpace& space, State q, const Pomset& u);

/// Fork pairs at `q` whose join and both components avoid the sink.
std::vector<StatePair> support(const PomsetAutomaton& a, State q);

/// Least set containing `q` and closed under sequential successors and joins
/// of supported forks (of each member).
StateSet reach(const PomsetAutomaton& a, State q);

/// Checks the four closure rules: contains the sink, closed under delta,
/// closed under supported joins, and contains both components of every
/// supported fork.
bool is_closed(const PomsetAutomaton& a, const StateSet& states);

/// Generated sub-automaton induced by a closed set; states are re-indexed in
/// ascending order of the original indices. Throws NotClosedError.
PomsetAutomaton restrict(const PomsetAutomaton& a, const StateSet& states);

/// Strict order witnessing fork-acyclicity: fork components sit strictly
/// below the forking state, propagated backwards along transitions.
struct ForkOrder {
    std::set<std::pair<State, State>> pairs; // (below, above), transitively closed

    bool less(State below, State above) const {
        return pairs.count({below, above}) != 0;
    }
};

/// Least relation closed under the hierarchy rules and transitivity; throws
/// NotForkAcyclicError with a witness cycle if it is reflexive anywhere.
ForkOrder fork_order(const PomsetAutomaton& a);

/// Length of the longest strictly descending chain below each state.
std::vector<std::size_t> descending_chain_bounds(const ForkOrder& order, std::size_t state_count);

struct SubPaResult {
    PomsetAutomaton pa;
    State start;
};

/// Materialises the least closed set of states containing `q` as an explicit
/// automaton; languages of retained states are preserved. Throws
/// CapExceededError once more than `cap` states have been collected, which
/// signals a non-fork-acyclic input or a cap that is too small.
SubPaResult bounded_subpa(StateSpace& space, State q, std::size_t cap);

} // namespace sprat

#endif
