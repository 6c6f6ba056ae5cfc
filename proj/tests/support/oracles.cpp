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

#include "support/oracles.hpp"

#include <algorithm>
#include <map>

namespace sprat::testing {

std::size_t brute_width(const LabeledPoset& p) {
    const std::size_t n = p.count();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool antichain = true;
        std::size_t sz = 0;
        for (std::size_t i = 0; i < n && antichain; ++i) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            ++sz;
            for (std::size_t j = i + 1; j < n && antichain; ++j) {
                if (!(mask & (std::uint64_t{1} << j))) continue;
                if (p.order[i][j] || p.order[j][i]) antichain = false;
            }
        }
        if (antichain) best = std::max(best, sz);
    }
    return best;
}

namespace {

// (label, #strict predecessors, #strict successors) per node.
std::vector<std::tuple<std::string, std::size_t, std::size_t>> signatures(const LabeledPoset& p) {
    const std::size_t n = p.count();
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t preds = 0, succs = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (p.order[j][i]) ++preds;
            if (p.order[i][j]) ++succs;
        }
        sig[i] = {p.labels[i].name, preds, succs};
    }
    return sig;
}

bool extend(const LabeledPoset& a, const LabeledPoset& b,
            const std::vector<std::tuple<std::string, std::size_t, std::size_t>>& sa,
            const std::vector<std::tuple<std::string, std::size_t, std::size_t>>& sb,
            std::vector<std::size_t>& image, std::vector<bool>& used, std::size_t i) {
    const std::size_t n = a.count();
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
        if (used[j] || sa[i] != sb[j]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k) {
            if (a.order[i][k] != b.order[j][image[k]]) ok = false;
            if (a.order[k][i] != b.order[image[k]][j]) ok = false;
        }
        if (!ok) continue;
        image[i] = j;
        used[j] = true;
        if (extend(a, b, sa, sb, image, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

} // namespace

bool poset_isomorphic(const LabeledPoset& a, const LabeledPoset& b) {
    if (a.count() != b.count()) return false;
    auto sa = signatures(a);
    auto sb = signatures(b);
    auto sorted_a = sa;
    auto sorted_b = sb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
    std::vector<std::size_t> image(a.count());
    std::vector<bool> used(a.count(), false);
    return extend(a, b, sa, sb, image, used, 0);
}

LanguageSample pomset_universe(const Alphabet& sigma, std::size_t max_size) {
    std::vector<LanguageSample> by_size(max_size + 1);
    if (max_size >= 1)
        for (const Symbol& s : sigma) by_size[1].insert(Pomset::primitive(s));
    for (std::size_t k = 2; k <= max_size; ++k) {
        for (std::size_t i = 1; i < k; ++i) {
            for (const Pomset& u : by_size[i]) {
                for (const Pomset& v : by_size[k - i]) {
                    by_size[k].insert(seq_compose(u, v));
                    by_size[k].insert(par_compose(u, v));
                }
            }
        }
    }
    LanguageSample all;
    for (std::size_t k = 1; k <= max_size; ++k) all.insert(by_size[k].begin(), by_size[k].end());
    return all;
}

namespace {

StateSet naive_targets(StateSpace& space, State q, const Pomset& u) {
    StateSet out;
    Factorization f = factorize(u);
    switch (f.kind) {
    case Factorization::Kind::Primitive:
        out.insert(space.delta(q, f.label));
        break;
    case Factorization::Kind::SeqSplit: {
        StateSet cur{q};
        for (const Pomset& part : f.parts) {
            StateSet next;
            for (State s : cur) {
                StateSet t = naive_targets(space, s, part);
                next.insert(t.begin(), t.end());
            }
            cur = std::move(next);
        }
        out = std::move(cur);
        break;
    }
    case Factorization::Kind::ParSplit: {
        const std::size_t m = f.parts.size();
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
            std::vector<Pomset> l, r;
            for (std::size_t i = 0; i < m; ++i)
                (mask & (std::uint64_t{1} << i) ? l : r).push_back(f.parts[i]);
            Pomset v = par_of(l);
            Pomset w = par_of(r);
            for (StatePair fork : space.fork_candidates(q)) {
                bool ok =
                    (naive_accepts(space, fork.lo, v) && naive_accepts(space, fork.hi, w)) ||
                    (naive_accepts(space, fork.lo, w) && naive_accepts(space, fork.hi, v));
                if (ok) out.insert(space.gamma(q, fork));
            }
        }
        break;
    }
    }
    return out;
}

} // namespace

bool naive_accepts(StateSpace& space, State q, const Pomset& u) {
    if (u.is_empty()) return space.is_final(q);
    for (State t : naive_targets(space, q, u))
        if (space.is_final(t)) return true;
    return false;
}

namespace {

// Single-step targets: one letter, or one productive fork consuming a whole
// parallel block.
StateSet step_targets(PomsetAutomaton& a, State q, const Pomset& block) {
    StateSet out;
    if (block.kind() == Pomset::Kind::Primitive) {
        out.insert(a.delta_at(q, block.label()));
        return out;
    }
    // Parallel block: split it across a supported fork.
    Factorization f = factorize(block);
    const std::size_t m = f.parts.size();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
        std::vector<Pomset> l, r;
        for (std::size_t i = 0; i < m; ++i)
            (mask & (std::uint64_t{1} << i) ? l : r).push_back(f.parts[i]);
        Pomset v = par_of(l);
        Pomset w = par_of(r);
        for (StatePair fork : support(a, q)) {
            bool ok = (naive_accepts(a, fork.lo, v) && naive_accepts(a, fork.hi, w)) ||
                      (naive_accepts(a, fork.lo, w) && naive_accepts(a, fork.hi, v));
            if (ok) out.insert(a.gamma_at(q, fork));
        }
    }
    return out;
}

} // namespace

bool trace_within(PomsetAutomaton& a, State q, const Pomset& u, State q2,
                  const StateSet& through) {
    std::vector<Pomset> blocks;
    if (u.kind() == Pomset::Kind::Seq)
        blocks = u.children();
    else
        blocks = {u};
    const std::size_t n = blocks.size();

    std::map<std::pair<std::size_t, State>, bool> memo;
    auto run = [&](auto&& self, std::size_t i, State s) -> bool {
        if (i == n) return s == q2;
        auto key = std::make_pair(i, s);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (State t : step_targets(a, s, blocks[i])) {
            bool interior = i + 1 < n;
            if (interior && !through.count(t)) continue;
            if (self(self, i + 1, t)) {
                ok = true;
                break;
            }
        }
        memo[key] = ok;
        return ok;
    };
    return run(run, 0, q);
}

PomsetAutomaton cookie_pa() {
    const Alphabet sigma{Symbol("bake"), Symbol("caramelize"), Symbol("glaze"), Symbol("prepare")};
    std::vector<std::string> names{"q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7", "bot"};
    const State bot = 8;
    std::vector<std::vector<State>> delta(9, std::vector<State>(4, bot));
    auto col = [&](const char* s) {
        return static_cast<std::size_t>(
            std::lower_bound(sigma.begin(), sigma.end(), Symbol(s)) - sigma.begin());
    };
    delta[0][col("prepare")] = 1;
    delta[3][col("bake")] = 5;
    delta[4][col("caramelize")] = 6;
    delta[2][col("glaze")] = 7;
    std::vector<PomsetAutomaton::GammaEntry> gammas{{1, StatePair(3, 4), 2}};
    return PomsetAutomaton(std::move(names), sigma, bot, StateSet{5, 6, 7}, std::move(delta),
                           std::move(gammas));
}

} // namespace sprat::testing
