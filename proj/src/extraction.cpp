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

#include "sprat/extraction.hpp"

namespace sprat {

namespace {

// Additive-congruence-level constructors: drop zero summands, annihilate
// compositions with a literal zero. Anything deeper is left to normalize().
Expr mk_plus(Expr a, Expr b) {
    if (a.kind() == Expr::Kind::Zero) return b;
    if (b.kind() == Expr::Kind::Zero) return a;
    return Expr::plus(std::move(a), std::move(b));
}

Expr mk_dot(Expr a, Expr b) {
    if (a.kind() == Expr::Kind::Zero || b.kind() == Expr::Kind::Zero) return Expr::zero();
    return Expr::dot(std::move(a), std::move(b));
}

} // namespace

const Expr& PathExprTable::plus_expr(State r) {
    auto it = plus_.find(r);
    if (it != plus_.end()) return it->second;

    // Sum the path expressions from r to each accepting state it can reach,
    // with the whole of its reach available as intermediate states.
    StateSet rho = reach(a_, r);
    Expr acc = Expr::zero();
    for (State f : rho) {
        if (!a_.final_at(f)) continue;
        acc = mk_plus(std::move(acc), path_expr(a_, r, f, rho, *this));
    }
    acc = embed(normalize(acc));
    return plus_.emplace(r, std::move(acc)).first->second;
}

Expr path_expr(const PomsetAutomaton& a, State q, State q2, const StateSet& through,
               PathExprTable& table) {
    auto key = std::make_tuple(q, q2, std::vector<State>(through.begin(), through.end()));
    auto it = table.memo.find(key);
    if (it != table.memo.end()) return it->second;

    Expr result = Expr::zero();
    if (through.empty()) {
        for (const Symbol& sym : a.alphabet())
            if (a.delta_at(q, sym) == q2) result = mk_plus(std::move(result), Expr::letter(sym));
        for (StatePair f : support(a, q)) {
            if (a.gamma_at(q, f) != q2) continue;
            result = mk_plus(std::move(result),
                             Expr::par(table.plus_expr(f.lo), table.plus_expr(f.hi)));
        }
    } else {
        // Route around the least remaining state: paths avoiding it, plus
        // paths entering it, looping on it, and leaving it.
        State pivot = *through.begin();
        StateSet rest(std::next(through.begin()), through.end());
        Expr direct = path_expr(a, q, q2, rest, table);
        Expr into = path_expr(a, q, pivot, rest, table);
        Expr loop = path_expr(a, pivot, pivot, rest, table);
        Expr out = path_expr(a, pivot, q2, rest, table);
        result = mk_plus(std::move(direct),
                         mk_dot(mk_dot(std::move(into), Expr::star(std::move(loop))),
                                std::move(out)));
    }
    return table.memo.emplace(std::move(key), std::move(result)).first->second;
}

Expr pa_to_expr(const PomsetAutomaton& a, State q) {
    fork_order(a); // throws with a witness cycle when no hierarchy exists

    PathExprTable table(a);
    Expr plus_part = table.plus_expr(q);
    Expr full = mk_plus(plus_part, a.final_at(q) ? Expr::one() : Expr::zero());
    return embed(normalize(full));
}

} // namespace sprat
