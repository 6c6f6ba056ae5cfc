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

#ifndef SPRAT_POMSET_HPP
#define SPRAT_POMSET_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sprat/errors.hpp"
#include "sprat/symbol.hpp"

namespace sprat {

/// A series-parallel pomset, kept as its canonical term.
///
/// Canonical shape: no child of a sequential node is empty or itself
/// sequential, no child of a parallel node is empty or itself parallel, and
/// parallel children are sorted by their canonical text. Two values compare
/// equal exactly when the underlying labelled posets are isomorphic.
///
/// Values are immutable and cheap to copy (shared nodes); they can be shared
/// across threads freely.
class Pomset {
public:
    enum class Kind { Empty, Primitive, Seq, Par };

    /// The empty pomset (unit of both compositions).
    Pomset();

    static Pomset empty();
    static Pomset primitive(Symbol label);

    Kind kind() const { return node_->kind; }
    bool is_empty() const { return node_->kind == Kind::Empty; }

    /// Label of a primitive node; only valid for Kind::Primitive.
    const Symbol& label() const { return node_->label; }

    /// Children of a Seq (ordered, >= 2) or Par (sorted, >= 2) node.
    const std::vector<Pomset>& children() const { return node_->children; }

    /// Number of labelled points.
    std::size_t size() const { return node_->size; }

    /// Size of the largest antichain: 1 per point, max across sequential
    /// factors, sum across parallel factors.
    std::size_t width() const { return node_->width; }

    /// Canonical text. "1" for the empty pomset; "." binds tighter than "|";
    /// parallel children appear in sorted order, fully determined by the term.
    const std::string& text() const { return node_->text; }

    bool operator==(const Pomset& o) const { return node_ == o.node_ || text() == o.text(); }
    bool operator!=(const Pomset& o) const { return !(*this == o); }
    bool operator<(const Pomset& o) const { return text() < o.text(); }

private:
    struct Node {
        Kind kind;
        Symbol label;                 // Primitive only
        std::vector<Pomset> children; // Seq/Par only
        std::string text;
        std::uint32_t size = 0;
        std::uint32_t width = 0;
    };

    explicit Pomset(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Pomset make(Kind kind, Symbol label, std::vector<Pomset> children);

    std::shared_ptr<const Node> node_;

    friend Pomset seq_compose(const Pomset&, const Pomset&);
    friend Pomset par_compose(const Pomset&, const Pomset&);
};

/// u then v; the empty pomset is a two-sided unit, sequential nesting is
/// flattened.
Pomset seq_compose(const Pomset& u, const Pomset& v);

/// u beside v; commutative on canonical terms, parallel nesting is flattened.
Pomset par_compose(const Pomset& u, const Pomset& v);

/// Folds seq_compose over a list (empty list gives the empty pomset).
Pomset seq_of(const std::vector<Pomset>& parts);

/// Folds par_compose over a list (empty list gives the empty pomset).
Pomset par_of(const std::vector<Pomset>& parts);

std::size_t width(const Pomset& u);
std::size_t size(const Pomset& u);

/// Root decomposition of a non-empty pomset: exactly one case applies.
struct Factorization {
    enum class Kind { Primitive, SeqSplit, ParSplit };
    Kind kind;
    Symbol label;              // Primitive
    std::vector<Pomset> parts; // SeqSplit (ordered) / ParSplit (sorted)
};

/// Splits a non-empty pomset at its root; throws EmptyPomsetError otherwise.
Factorization factorize(const Pomset& u);

/// Parses the pomset grammar:
///   P ::= "1" | symbol | "(" P ")" | P "." P | P "|" P
/// with "." binding tighter than "|". Throws ParseError.
Pomset parse_pomset(std::string_view text);

/// An explicit labelled poset: the boundary representation for recognizing
/// series-parallel shape. `order[i][j]` holds when node i is strictly below
/// node j; the matrix is transitively closed and irreflexive.
struct LabeledPoset {
    std::vector<std::string> ids;
    std::vector<Symbol> labels;
    std::vector<std::vector<bool>> order;

    std::size_t count() const { return ids.size(); }

    /// Builds from strict-order pairs (indices into ids); applies transitive
    /// closure and rejects cyclic input.
    static LabeledPoset from_pairs(std::vector<std::string> ids, std::vector<Symbol> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
};

/// Expands a canonical term into an explicit poset with fresh node ids.
LabeledPoset to_labeled_poset(const Pomset& u);

/// Recovers the canonical term isomorphic to `p`: parallel split into
/// connected components first, else the earliest sequential cut, recursively.
/// Throws NotSeriesParallelError when the poset embeds the "N" shape.
Pomset sp_decompose(const LabeledPoset& p);

} // namespace sprat

#endif
