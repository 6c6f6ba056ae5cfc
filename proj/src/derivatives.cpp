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

#include "sprat/derivatives.hpp"

#include <algorithm>

namespace sprat {

namespace {

// e ? f: passes f through when e accepts the empty pomset, else 0.
Expr guard(const Expr& e, Expr f) {
    return nullable(e) ? std::move(f) : Expr::zero();
}

// Unordered-pair congruence test {f, g} ~ {x, y}.
bool pair_congruent(const NormalExpr& f, const NormalExpr& g, const NormalExpr& x,
                    const NormalExpr& y) {
    return (f == x && g == y) || (f == y && g == x);
}

} // namespace

Expr delta_deriv(const Expr& e, const Symbol& a) {
    switch (e.kind()) {
    case Expr::Kind::Zero:
    case Expr::Kind::One:
        return Expr::zero();
    case Expr::Kind::Letter:
        return e.letter_symbol() == a ? Expr::one() : Expr::zero();
    case Expr::Kind::Plus:
        return Expr::plus(delta_deriv(e.lhs(), a), delta_deriv(e.rhs(), a));
    case Expr::Kind::Dot:
        return Expr::plus(Expr::dot(delta_deriv(e.lhs(), a), e.rhs()),
                          guard(e.lhs(), delta_deriv(e.rhs(), a)));
    case Expr::Kind::Par:
        return Expr::plus(guard(e.lhs(), delta_deriv(e.rhs(), a)),
                          guard(e.rhs(), delta_deriv(e.lhs(), a)));
    case Expr::Kind::Star:
        return Expr::dot(delta_deriv(e.body(), a), e);
    }
    return Expr::zero();
}

Expr gamma_deriv(const Expr& e, const Expr& f, const Expr& g) {
    switch (e.kind()) {
    case Expr::Kind::Zero:
    case Expr::Kind::One:
    case Expr::Kind::Letter:
        return Expr::zero();
    case Expr::Kind::Plus:
        return Expr::plus(gamma_deriv(e.lhs(), f, g), gamma_deriv(e.rhs(), f, g));
    case Expr::Kind::Dot:
        return Expr::plus(Expr::dot(gamma_deriv(e.lhs(), f, g), e.rhs()),
                          guard(e.lhs(), gamma_deriv(e.rhs(), f, g)));
    case Expr::Kind::Par: {
        Expr indicator = pair_congruent(normalize(f), normalize(g), normalize(e.lhs()),
                                        normalize(e.rhs()))
                             ? Expr::one()
                             : Expr::zero();
        return Expr::plus(Expr::plus(std::move(indicator), guard(e.lhs(), gamma_deriv(e.rhs(), f, g))),
                          guard(e.rhs(), gamma_deriv(e.lhs(), f, g)));
    }
    case Expr::Kind::Star:
        return Expr::dot(gamma_deriv(e.body(), f, g), e);
    }
    return Expr::zero();
}

std::set<std::pair<NormalExpr, NormalExpr>> candidate_forks(const NormalExpr& n) {
    std::set<std::pair<NormalExpr, NormalExpr>> out;
    auto walk = [&](auto&& self, const NormalExpr& x) -> void {
        switch (x.kind()) {
        case NormalExpr::Kind::Sum:
            for (const NormalExpr& s : x.summands()) self(self, s);
            return;
        case NormalExpr::Kind::Par: {
            // Normal forms never carry zero operands under || so the pair is
            // productive by construction.
            const NormalExpr& a = x.lhs();
            const NormalExpr& b = x.rhs();
            out.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            self(self, a);
            self(self, b);
            return;
        }
        case NormalExpr::Kind::Dot:
            self(self, x.lhs());
            self(self, x.rhs());
            return;
        case NormalExpr::Kind::Star:
            self(self, x.body());
            return;
        default:
            return;
        }
    };
    walk(walk, n);
    return out;
}

SyntacticStateSpace::SyntacticStateSpace(Alphabet sigma) : sigma_(std::move(sigma)) {
    intern(NormalExpr()); // the empty sum is state 0, the sink
}

State SyntacticStateSpace::intern(const NormalExpr& n) {
    auto it = index_.find(n.key());
    if (it != index_.end()) return it->second;
    State q = static_cast<State>(exprs_.size());
    exprs_.push_back(n);
    index_.emplace(n.key(), q);
    return q;
}

bool SyntacticStateSpace::is_final(State q) { return nullable(exprs_.at(q)); }

State SyntacticStateSpace::delta(State q, const Symbol& a) {
    auto key = std::make_pair(q, a);
    auto it = delta_memo_.find(key);
    if (it != delta_memo_.end()) return it->second;
    State t = intern(normalize(delta_deriv(embed(exprs_.at(q)), a)));
    delta_memo_.emplace(std::move(key), t);
    return t;
}

State SyntacticStateSpace::gamma(State q, StatePair forks) {
    if (forks.lo == sink() || forks.hi == sink()) return sink();
    auto key = std::make_pair(q, forks);
    auto it = gamma_memo_.find(key);
    if (it != gamma_memo_.end()) return it->second;
    Expr residual = gamma_deriv(embed(exprs_.at(q)), embed(exprs_.at(forks.lo)),
                                embed(exprs_.at(forks.hi)));
    State t = intern(normalize(residual));
    gamma_memo_.emplace(key, t);
    return t;
}

std::vector<StatePair> SyntacticStateSpace::fork_candidates(State q) {
    std::vector<StatePair> out;
    for (const auto& [lo, hi] : candidate_forks(exprs_.at(q)))
        out.emplace_back(intern(lo), intern(hi));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CompiledPA expr_to_pa(const Expr& e, std::size_t cap) {
    SyntacticStateSpace space(letters(e));
    State start = space.intern(normalize(e));
    SubPaResult sub = bounded_subpa(space, start, cap);
    return {std::move(sub.pa), sub.start};
}

} // namespace sprat
