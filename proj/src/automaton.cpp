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

#include "sprat/automaton.hpp"

#include <algorithm>
#include <deque>

namespace sprat {

PomsetAutomaton::PomsetAutomaton(std::vector<std::string> names, Alphabet sigma, State sink_state,
                                 StateSet finals, std::vector<std::vector<State>> delta_table,
                                 std::vector<GammaEntry> gamma_entries)
    : names_(std::move(names)), sigma_(std::move(sigma)), sink_(sink_state),
      finals_(std::move(finals)), delta_(std::move(delta_table)) {
    const std::size_t n = names_.size();
    if (n == 0) throw InvalidAutomatonError("automaton needs at least the sink state");
    if (sink_ >= n) throw InvalidAutomatonError("sink index out of range");
    if (finals_.count(sink_)) throw InvalidAutomatonError("sink state must not be final");
    for (State f : finals_)
        if (f >= n) throw InvalidAutomatonError("final state index out of range");
    if (delta_.size() != n) throw InvalidAutomatonError("delta table must cover every state");
    for (std::size_t q = 0; q < n; ++q) {
        if (delta_[q].size() != sigma_.size())
            throw InvalidAutomatonError("delta row must cover the whole alphabet");
        for (State t : delta_[q])
            if (t >= n) throw InvalidAutomatonError("delta target out of range");
    }
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        if (delta_[sink_][i] != sink_)
            throw InvalidAutomatonError("sink must loop to itself on every symbol");
    for (const GammaEntry& g : gamma_entries) {
        if (g.source >= n || g.target >= n || g.forks.lo >= n || g.forks.hi >= n)
            throw InvalidAutomatonError("gamma entry references unknown state");
        if (g.source == sink_) throw InvalidAutomatonError("gamma entry must not start at the sink");
        // Entries involving the sink never produce a trace; keep the table
        // sparse and canonical by dropping them.
        if (g.target == sink_ || g.forks.lo == sink_ || g.forks.hi == sink_) continue;
        auto [it, fresh] = gamma_.emplace(std::make_pair(g.source, g.forks), g.target);
        if (!fresh && it->second != g.target)
            throw InvalidAutomatonError("conflicting gamma entries for one fork");
    }
}

State PomsetAutomaton::delta_at(State q, const Symbol& a) const {
    auto it = std::lower_bound(sigma_.begin(), sigma_.end(), a);
    if (it == sigma_.end() || *it != a) return sink_;
    return delta_[q][static_cast<std::size_t>(it - sigma_.begin())];
}

State PomsetAutomaton::gamma_at(State q, StatePair f) const {
    auto it = gamma_.find({q, f});
    return it == gamma_.end() ? sink_ : it->second;
}

std::vector<StatePair> PomsetAutomaton::fork_candidates(State q) {
    std::vector<StatePair> out;
    for (auto it = gamma_.lower_bound({q, StatePair(0, 0)});
         it != gamma_.end() && it->first.first == q; ++it)
        out.push_back(it->first.second);
    return out;
}

// ---------------------------------------------------------------------------
// Membership

namespace {

// Deterministically ordered productive forks of `q` in an abstract space.
std::vector<StatePair> productive_forks(StateSpace& space, State q) {
    const State bot = space.sink();
    std::vector<StatePair> out;
    if (q == bot) return out;
    for (StatePair f : space.fork_candidates(q)) {
        if (f.lo == bot || f.hi == bot) continue;
        if (space.gamma(q, f) == bot) continue;
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

const StateSet& Matcher::targets(State q, const Pomset& u) {
    auto key = std::make_pair(q, u);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const State bot = space_.sink();
    StateSet out;
    Factorization f = factorize(u);
    switch (f.kind) {
    case Factorization::Kind::Primitive: {
        State t = space_.delta(q, f.label);
        if (t != bot) out.insert(t);
        break;
    }
    case Factorization::Kind::SeqSplit: {
        // Fold the per-factor target sets left to right; every sequential
        // split of the canonical term is a cut between factors.
        StateSet current{q};
        for (const Pomset& part : f.parts) {
            StateSet next;
            for (State s : current) {
                const StateSet& t = targets(s, part);
                next.insert(t.begin(), t.end());
            }
            current = std::move(next);
            if (current.empty()) break;
        }
        out = std::move(current);
        break;
    }
    case Factorization::Kind::ParSplit: {
        // Every way of writing u as a parallel pair is a bipartition of the
        // canonical parallel factors.
        const std::vector<Pomset>& parts = f.parts;
        const std::size_t m = parts.size();
        std::set<std::pair<Pomset, Pomset>> splits;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
            std::vector<Pomset> left, right;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (std::uint64_t{1} << i))
                    left.push_back(parts[i]);
                else
                    right.push_back(parts[i]);
            }
            Pomset v = par_of(left);
            Pomset w = par_of(right);
            splits.insert(v < w ? std::make_pair(v, w) : std::make_pair(w, v));
        }
        for (StatePair fork : productive_forks(space_, q)) {
            State join = space_.gamma(q, fork);
            if (out.count(join)) continue;
            for (const auto& [v, w] : splits) {
                bool ok = (accepts_nonempty(fork.lo, v) && accepts_nonempty(fork.hi, w)) ||
                          (accepts_nonempty(fork.lo, w) && accepts_nonempty(fork.hi, v));
                if (ok) {
                    out.insert(join);
                    break;
                }
            }
        }
        break;
    }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

bool Matcher::accepts_nonempty(State q, const Pomset& u) {
    for (State t : targets(q, u))
        if (space_.is_final(t)) return true;
    return false;
}

bool Matcher::accepts(State q, const Pomset& u) {
    if (u.is_empty()) return space_.is_final(q);
    return accepts_nonempty(q, u);
}

bool membership(StateSpace& space, State q, const Pomset& u) {
    Matcher m(space);
    return m.accepts(q, u);
}

// ---------------------------------------------------------------------------
// Structure queries on explicit automata

std::vector<StatePair> support(const PomsetAutomaton& a, State q) {
    std::vector<StatePair> out;
    const State bot = a.sink_state();
    if (q == bot) return out;
    for (auto it = a.gamma_table().lower_bound({q, StatePair(0, 0)});
         it != a.gamma_table().end() && it->first.first == q; ++it) {
        const StatePair& f = it->first.second;
        if (f.lo == bot || f.hi == bot || it->second == bot) continue;
        out.push_back(f);
    }
    return out;
}

StateSet reach(const PomsetAutomaton& a, State q) {
    StateSet seen{q};
    std::deque<State> work{q};
    while (!work.empty()) {
        State s = work.front();
        work.pop_front();
        for (const Symbol& sym : a.alphabet()) {
            State t = a.delta_at(s, sym);
            if (seen.insert(t).second) work.push_back(t);
        }
        for (StatePair f : support(a, s)) {
            State t = a.gamma_at(s, f);
            if (seen.insert(t).second) work.push_back(t);
        }
    }
    return seen;
}

bool is_closed(const PomsetAutomaton& a, const StateSet& states) {
    if (!states.count(a.sink_state())) return false;
    for (State q : states) {
        if (q >= a.state_count()) return false;
        for (const Symbol& sym : a.alphabet())
            if (!states.count(a.delta_at(q, sym))) return false;
        for (StatePair f : support(a, q)) {
            if (!states.count(a.gamma_at(q, f))) return false;
            if (!states.count(f.lo) || !states.count(f.hi)) return false;
        }
    }
    return true;
}

PomsetAutomaton restrict(const PomsetAutomaton& a, const StateSet& states) {
    if (!is_closed(a, states))
        throw NotClosedError("state set is not closed under transitions and forks");
    std::vector<State> order(states.begin(), states.end());
    std::map<State, State> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<State>(i);

    std::vector<std::string> names;
    names.reserve(order.size());
    StateSet finals;
    std::vector<std::vector<State>> delta_table;
    std::vector<PomsetAutomaton::GammaEntry> gammas;
    for (State q : order) {
        names.push_back(a.names().at(q));
        if (a.final_at(q)) finals.insert(index[q]);
        std::vector<State> row;
        row.reserve(a.alphabet().size());
        for (const Symbol& sym : a.alphabet()) row.push_back(index.at(a.delta_at(q, sym)));
        delta_table.push_back(std::move(row));
        for (StatePair f : support(a, q))
            gammas.push_back({index[q], StatePair(index.at(f.lo), index.at(f.hi)),
                              index.at(a.gamma_at(q, f))});
    }
    return PomsetAutomaton(std::move(names), a.alphabet(), index.at(a.sink_state()),
                           std::move(finals), std::move(delta_table), std::move(gammas));
}

// ---------------------------------------------------------------------------
// Fork hierarchy

ForkOrder fork_order(const PomsetAutomaton& a) {
    const std::size_t n = a.state_count();

    // One-step facts: r sits below q when some state reachable from q
    // supports a fork with component r. The full order is the transitive
    // closure, so a reflexive point corresponds to a cycle of these edges.
    std::vector<StateSet> below(n); // below[q] = direct lower neighbours of q
    for (State q = 0; q < n; ++q) {
        for (State s : reach(a, q))
            for (StatePair f : support(a, s)) {
                below[q].insert(f.lo);
                below[q].insert(f.hi);
            }
    }

    // Cycle detection on edges q -> r for r in below[q].
    std::vector<int> mark(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<State> stack;
    auto dfs = [&](auto&& self, State q) -> std::vector<State> {
        mark[q] = 1;
        stack.push_back(q);
        for (State r : below[q]) {
            if (mark[r] == 1) {
                std::vector<State> cycle;
                auto it = std::find(stack.begin(), stack.end(), r);
                cycle.assign(it, stack.end());
                return cycle;
            }
            if (mark[r] == 0) {
                auto cycle = self(self, r);
                if (!cycle.empty()) return cycle;
            }
        }
        mark[q] = 2;
        stack.pop_back();
        return {};
    };
    for (State q = 0; q < n; ++q) {
        if (mark[q] == 0) {
            auto cycle = dfs(dfs, q);
            if (!cycle.empty()) throw NotForkAcyclicError(cycle);
        }
    }

    // Transitive closure of the acyclic one-step relation.
    ForkOrder order;
    std::vector<StateSet> closed(n);
    std::vector<int> done(n, 0);
    auto close = [&](auto&& self, State q) -> const StateSet& {
        if (done[q]) return closed[q];
        done[q] = 1;
        StateSet acc;
        for (State r : below[q]) {
            acc.insert(r);
            const StateSet& deeper = self(self, r);
            acc.insert(deeper.begin(), deeper.end());
        }
        closed[q] = std::move(acc);
        return closed[q];
    };
    for (State q = 0; q < n; ++q)
        for (State r : close(close, q)) order.pairs.insert({r, q});
    return order;
}

std::vector<std::size_t> descending_chain_bounds(const ForkOrder& order, std::size_t state_count) {
    std::vector<std::size_t> bound(state_count, 0);
    // The order is transitively closed, so chain length below q is
    // 1 + max over direct-or-indirect lower states' bounds; iterate states in
    // an order compatible with the relation via memoised recursion.
    std::vector<int> done(state_count, 0);
    std::vector<StateSet> lower(state_count);
    for (const auto& [r, q] : order.pairs) lower[q].insert(r);
    auto eval = [&](auto&& self, State q) -> std::size_t {
        if (done[q]) return bound[q];
        done[q] = 1;
        std::size_t best = 0;
        for (State r : lower[q]) best = std::max(best, self(self, r) + 1);
        bound[q] = best;
        return best;
    };
    for (State q = 0; q < state_count; ++q) eval(eval, q);
    return bound;
}

// ---------------------------------------------------------------------------
// Bounded sub-automaton extraction

SubPaResult bounded_subpa(StateSpace& space, State q, std::size_t cap) {
    const State bot = space.sink();

    std::vector<State> order;   // discovery order, start first
    std::map<State, State> idx; // original id -> new index
    std::deque<State> work;
    auto add = [&](State s) {
        if (idx.count(s)) return;
        if (order.size() >= cap) throw CapExceededError(cap);
        idx[s] = static_cast<State>(order.size());
        order.push_back(s);
        work.push_back(s);
    };

    add(q);
    while (!work.empty()) {
        State s = work.front();
        work.pop_front();
        for (const Symbol& sym : space.alphabet()) add(space.delta(s, sym));
        for (StatePair f : productive_forks(space, s)) {
            add(f.lo);
            add(f.hi);
            add(space.gamma(s, f));
        }
    }
    add(bot); // closure always includes the sink, reached or not

    std::vector<std::string> names;
    names.reserve(order.size());
    StateSet finals;
    std::vector<std::vector<State>> delta_table;
    std::vector<PomsetAutomaton::GammaEntry> gammas;
    for (State s : order) {
        names.push_back(space.state_label(s));
        if (space.is_final(s)) finals.insert(idx.at(s));
        std::vector<State> row;
        row.reserve(space.alphabet().size());
        for (const Symbol& sym : space.alphabet()) row.push_back(idx.at(space.delta(s, sym)));
        delta_table.push_back(std::move(row));
        for (StatePair f : productive_forks(space, s))
            gammas.push_back({idx.at(s), StatePair(idx.at(f.lo), idx.at(f.hi)),
                              idx.at(space.gamma(s, f))});
    }
    PomsetAutomaton pa(std::move(names), space.alphabet(), idx.at(bot), std::move(finals),
                       std::move(delta_table), std::move(gammas));
    return {std::move(pa), idx.at(q)};
}

} // namespace sprat
