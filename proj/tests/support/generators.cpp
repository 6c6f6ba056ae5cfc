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

#include "support/generators.hpp"

#include <algorithm>
#include <deque>

namespace sprat::testing {

Expr random_expr(Rng& rng, std::size_t budget, const Alphabet& sigma) {
    std::uniform_int_distribution<int> leaf_pick(0, 9);
    if (budget <= 1) {
        int k = leaf_pick(rng);
        if (k == 0) return Expr::zero();
        if (k == 1) return Expr::one();
        std::uniform_int_distribution<std::size_t> li(0, sigma.size() - 1);
        return Expr::letter(sigma[li(rng)]);
    }
    std::uniform_int_distribution<int> op_pick(0, 9);
    int k = op_pick(rng);
    if (k < 3) { // plus
        std::uniform_int_distribution<std::size_t> split(1, budget - 1);
        std::size_t l = split(rng);
        return Expr::plus(random_expr(rng, l, sigma), random_expr(rng, budget - l, sigma));
    }
    if (k < 6) { // dot
        std::uniform_int_distribution<std::size_t> split(1, budget - 1);
        std::size_t l = split(rng);
        return Expr::dot(random_expr(rng, l, sigma), random_expr(rng, budget - l, sigma));
    }
    if (k < 8) { // par
        std::uniform_int_distribution<std::size_t> split(1, budget - 1);
        std::size_t l = split(rng);
        return Expr::par(random_expr(rng, l, sigma), random_expr(rng, budget - l, sigma));
    }
    return Expr::star(random_expr(rng, budget - 1, sigma));
}

namespace {

Expr mutate(Rng& rng, const Expr& e, const Alphabet& sigma, int fuel) {
    std::uniform_int_distribution<int> d(0, 99);
    Expr out = e;
    switch (e.kind()) {
    case Expr::Kind::Plus: {
        Expr l = mutate(rng, e.lhs(), sigma, fuel - 1);
        Expr r = mutate(rng, e.rhs(), sigma, fuel - 1);
        out = d(rng) < 40 ? Expr::plus(r, l) : Expr::plus(l, r);
        break;
    }
    case Expr::Kind::Dot:
        out = Expr::dot(mutate(rng, e.lhs(), sigma, fuel - 1),
                        mutate(rng, e.rhs(), sigma, fuel - 1));
        break;
    case Expr::Kind::Par:
        out = Expr::par(mutate(rng, e.lhs(), sigma, fuel - 1),
                        mutate(rng, e.rhs(), sigma, fuel - 1));
        break;
    case Expr::Kind::Star:
        out = Expr::star(mutate(rng, e.body(), sigma, fuel - 1));
        break;
    default:
        break;
    }
    if (fuel <= 0) return out;
    // Wrappers sound for the additive congruence.
    int roll = d(rng);
    if (roll < 15) return Expr::plus(out, Expr::zero());
    if (roll < 25) return Expr::plus(Expr::zero(), out);
    if (roll < 35) return Expr::plus(out, out);
    if (roll < 45) {
        // A summand congruent to zero: annihilated composition.
        Expr junk = random_expr(rng, 2, sigma);
        Expr zeroish = d(rng) < 50 ? Expr::dot(Expr::zero(), junk) : Expr::par(junk, Expr::zero());
        return d(rng) < 50 ? Expr::plus(out, zeroish) : Expr::plus(zeroish, out);
    }
    return out;
}

} // namespace

Expr congruent_mutation(Rng& rng, const Expr& e) {
    Alphabet sigma = letters(e);
    if (sigma.empty()) sigma.push_back(Symbol("a"));
    return mutate(rng, e, sigma, 4);
}

PomsetAutomaton random_pa(Rng& rng, std::size_t n, const Alphabet& sigma) {
    const State bot = static_cast<State>(n);
    const std::size_t total = n + 1;
    std::uniform_int_distribution<State> any(0, static_cast<State>(n)); // includes sink
    std::uniform_int_distribution<State> live(0, static_cast<State>(n - 1));
    std::uniform_int_distribution<int> d(0, 99);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    names.push_back("bot");

    std::vector<std::vector<State>> delta(total, std::vector<State>(sigma.size(), bot));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t c = 0; c < sigma.size(); ++c) delta[q][c] = any(rng);

    std::vector<PomsetAutomaton::GammaEntry> gammas;
    std::size_t fork_count = n / 2 + 1;
    for (std::size_t i = 0; i < fork_count; ++i) {
        State src = live(rng);
        StatePair f(live(rng), live(rng));
        State tgt = live(rng);
        gammas.push_back({src, f, tgt});
    }

    StateSet finals;
    for (std::size_t q = 0; q < n; ++q)
        if (d(rng) < 40) finals.insert(static_cast<State>(q));

    return PomsetAutomaton(std::move(names), sigma, bot, std::move(finals), std::move(delta),
                           std::move(gammas));
}

PomsetAutomaton random_fork_acyclic_pa(Rng& rng, std::size_t n, const Alphabet& sigma) {
    const State bot = static_cast<State>(n);
    const std::size_t total = n + 1;
    std::uniform_int_distribution<int> d(0, 99);
    std::uniform_int_distribution<int> lvl(0, 2);

    std::vector<int> level(total, 0);
    for (std::size_t i = 0; i < n; ++i) level[i] = lvl(rng);

    // Successors never climb levels and fork components sit strictly lower,
    // so the level order is a fork hierarchy.
    auto pick_at_most = [&](int max_level) -> State {
        std::vector<State> pool{bot};
        for (std::size_t i = 0; i < n; ++i)
            if (level[i] <= max_level) pool.push_back(static_cast<State>(i));
        std::uniform_int_distribution<std::size_t> pi(0, pool.size() - 1);
        return pool[pi(rng)];
    };
    auto pick_below = [&](int max_level) -> State { // strictly below, never sink
        std::vector<State> pool;
        for (std::size_t i = 0; i < n; ++i)
            if (level[i] < max_level) pool.push_back(static_cast<State>(i));
        if (pool.empty()) return bot;
        std::uniform_int_distribution<std::size_t> pi(0, pool.size() - 1);
        return pool[pi(rng)];
    };

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    names.push_back("bot");

    std::vector<std::vector<State>> delta(total, std::vector<State>(sigma.size(), bot));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t c = 0; c < sigma.size(); ++c) delta[q][c] = pick_at_most(level[q]);

    std::vector<PomsetAutomaton::GammaEntry> gammas;
    for (std::size_t q = 0; q < n; ++q) {
        if (level[q] == 0 || d(rng) >= 60) continue;
        State lo = pick_below(level[q]);
        State hi = pick_below(level[q]);
        if (lo == bot || hi == bot) continue;
        State tgt = pick_at_most(level[q]);
        gammas.push_back({static_cast<State>(q), StatePair(lo, hi), tgt});
    }

    StateSet finals;
    for (std::size_t q = 0; q < n; ++q)
        if (d(rng) < 40) finals.insert(static_cast<State>(q));

    return PomsetAutomaton(std::move(names), sigma, bot, std::move(finals), std::move(delta),
                           std::move(gammas));
}

StateSet random_closed_subset(Rng& rng, PomsetAutomaton& a, State q) {
    std::uniform_int_distribution<int> d(0, 99);
    StateSet set{q, a.sink_state()};
    for (State s = 0; s < a.state_count(); ++s)
        if (d(rng) < 25) set.insert(s);

    // Close under the four rules with a worklist.
    std::deque<State> work(set.begin(), set.end());
    auto add = [&](State s) {
        if (set.insert(s).second) work.push_back(s);
    };
    while (!work.empty()) {
        State s = work.front();
        work.pop_front();
        for (const Symbol& sym : a.alphabet()) add(a.delta_at(s, sym));
        for (StatePair f : support(a, s)) {
            add(a.gamma_at(s, f));
            add(f.lo);
            add(f.hi);
        }
    }
    return set;
}

} // namespace sprat::testing
