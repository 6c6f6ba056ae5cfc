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

#ifndef SPRAT_EXPR_HPP
#define SPRAT_EXPR_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sprat/errors.hpp"
#include "sprat/pomset.hpp"
#include "sprat/symbol.hpp"

namespace sprat {

/// A series-rational expression: rational operators plus parallel
/// composition. Plain AST, immutable, structurally shared.
class Expr {
public:
    enum class Kind { Zero, One, Letter, Plus, Dot, Par, Star };

    Expr(); // Zero

    static Expr zero();
    static Expr one();
    static Expr letter(Symbol s);
    static Expr plus(Expr lhs, Expr rhs);
    static Expr dot(Expr lhs, Expr rhs);
    static Expr par(Expr lhs, Expr rhs);
    static Expr star(Expr body);

    Kind kind() const { return node_->kind; }
    const Symbol& letter_symbol() const { return node_->sym; }
    const Expr& lhs() const { return node_->kids[0]; }
    const Expr& rhs() const { return node_->kids[1]; }
    const Expr& body() const { return node_->kids[0]; }

    /// Grammar rendering with minimal parentheses; re-parses to the same tree.
    std::string text() const;

    /// Prefix rendering showing the exact tree, e.g. "(. a (+ b 0))".
    std::string ast_text() const;

    /// Deep structural equality (not the additive congruence).
    bool identical(const Expr& other) const;

    /// Node count.
    std::size_t size_nodes() const;

    /// Stable identity of the shared node; used to memoise over shared
    /// subtrees.
    const void* node_id() const { return node_.get(); }

private:
    struct Node {
        Kind kind;
        Symbol sym;
        std::vector<Expr> kids;
    };
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the expression grammar
///   E ::= "0" | "1" | symbol | "(" E ")" | E "*" | E "." E | E "||" E | E "+" E
/// with precedence * > . > || > + and left associativity; symbols match
/// [a-zA-Z][a-zA-Z0-9_]*. Throws ParseError with a 1-based column.
Expr parse_expr(std::string_view text);

/// True when the empty pomset belongs to the expression's language.
bool nullable(const Expr& e);

/// The set of letters occurring in `e`.
Alphabet letters(const Expr& e);

/// Canonical representative modulo the additive congruence: sums are
/// flattened, zero-free, duplicate-free and sorted; zero annihilates both
/// compositions. Sequential and parallel structure is preserved as-is (the
/// congruence has no associativity or commutativity for them).
class NormalExpr {
public:
    enum class Kind { Sum, One, Letter, Dot, Par, Star };

    NormalExpr(); // the empty sum, i.e. zero

    Kind kind() const { return node_->kind; }
    bool is_zero() const { return node_->kind == Kind::Sum && node_->kids.empty(); }

    const Symbol& letter_symbol() const { return node_->sym; }
    const std::vector<NormalExpr>& summands() const { return node_->kids; }
    const NormalExpr& lhs() const { return node_->kids[0]; }
    const NormalExpr& rhs() const { return node_->kids[1]; }
    const NormalExpr& body() const { return node_->kids[0]; }

    /// Injective key used for ordering, hashing and state identity.
    const std::string& key() const { return node_->key; }

    /// Grammar rendering ("0" for the empty sum).
    std::string text() const;

    bool operator==(const NormalExpr& o) const { return node_ == o.node_ || key() == o.key(); }
    bool operator!=(const NormalExpr& o) const { return !(*this == o); }
    bool operator<(const NormalExpr& o) const { return key() < o.key(); }

    static NormalExpr sum(std::vector<NormalExpr> summands); // sorts, dedups, drops zeros
    static NormalExpr one();
    static NormalExpr letter(Symbol s);
    static NormalExpr dot(NormalExpr lhs, NormalExpr rhs); // zero operand -> zero
    static NormalExpr par(NormalExpr lhs, NormalExpr rhs); // zero operand -> zero
    static NormalExpr star(NormalExpr body);

private:
    struct Node {
        Kind kind;
        Symbol sym;
        std::vector<NormalExpr> kids;
        std::string key;
    };
    explicit NormalExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static NormalExpr make(Kind kind, Symbol sym, std::vector<NormalExpr> kids);
    std::shared_ptr<const Node> node_;
};

NormalExpr normalize(const Expr& e);

/// Re-reads a normal form as a plain expression (sums fold left over the
/// sorted summands; the empty sum becomes 0).
Expr embed(const NormalExpr& n);

/// Decides the additive congruence via normal forms.
bool congruent(const Expr& e, const Expr& f);

/// True iff the language of `e` is empty, i.e. `e` collapses to the empty sum.
bool is_empty(const Expr& e);

bool nullable(const NormalExpr& n);

/// Nesting depth of parallel composition: 0 for expressions with empty
/// language and for 1, 1 for letters, parallel adds one, the remaining
/// operators take the maximum of their operands.
std::size_t parallel_depth(const Expr& e);

/// Finite slice of a pomset language, used as the extensional test oracle.
using LanguageSample = std::set<Pomset>;

/// Exactly the members of the expression's language with at most `max_size`
/// labelled points. Star is evaluated as a union of powers, which stabilises
/// because non-empty factors strictly grow the size.
LanguageSample enumerate_language(const Expr& e, std::size_t max_size);

/// Maximum width over the sample; 0 when empty.
std::size_t language_width(const LanguageSample& sample);

} // namespace sprat

#endif
