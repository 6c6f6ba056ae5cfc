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

#include "sprat/pomset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace sprat {

void alphabet_insert(Alphabet& sigma, const Symbol& s) {
    auto it = std::lower_bound(sigma.begin(), sigma.end(), s);
    if (it == sigma.end() || *it != s) sigma.insert(it, s);
}

bool alphabet_contains(const Alphabet& sigma, const Symbol& s) {
    return std::binary_search(sigma.begin(), sigma.end(), s);
}

namespace {

std::string render(Pomset::Kind kind, const Symbol& label, const std::vector<Pomset>& children) {
    switch (kind) {
    case Pomset::Kind::Empty:
        return "1";
    case Pomset::Kind::Primitive:
        return label.name;
    case Pomset::Kind::Seq: {
        std::string out;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += '.';
            // "." binds tighter than "|", so parallel children need parens.
            if (children[i].kind() == Pomset::Kind::Par) {
                out += '(';
                out += children[i].text();
                out += ')';
            } else {
                out += children[i].text();
            }
        }
        return out;
    }
    case Pomset::Kind::Par: {
        std::string out;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) out += '|';
            out += children[i].text();
        }
        return out;
    }
    }
    return {};
}

} // namespace

Pomset::Pomset() : node_(nullptr) {
    static const std::shared_ptr<const Node> kEmpty = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Empty;
        n->text = "1";
        return n;
    }();
    node_ = kEmpty;
}

Pomset Pomset::empty() { return Pomset(); }

Pomset Pomset::primitive(Symbol label) {
    return make(Kind::Primitive, std::move(label), {});
}

Pomset Pomset::make(Kind kind, Symbol label, std::vector<Pomset> children) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->label = std::move(label);
    n->children = std::move(children);
    switch (kind) {
    case Kind::Empty:
        break;
    case Kind::Primitive:
        n->size = 1;
        n->width = 1;
        break;
    case Kind::Seq:
        for (const Pomset& c : n->children) {
            n->size += static_cast<std::uint32_t>(c.size());
            n->width = std::max(n->width, static_cast<std::uint32_t>(c.width()));
        }
        break;
    case Kind::Par:
        for (const Pomset& c : n->children) {
            n->size += static_cast<std::uint32_t>(c.size());
            n->width += static_cast<std::uint32_t>(c.width());
        }
        break;
    }
    n->text = render(kind, n->label, n->children);
    return Pomset(std::move(n));
}

Pomset seq_compose(const Pomset& u, const Pomset& v) {
    if (u.is_empty()) return v;
    if (v.is_empty()) return u;
    std::vector<Pomset> kids;
    if (u.kind() == Pomset::Kind::Seq)
        kids = u.children();
    else
        kids.push_back(u);
    if (v.kind() == Pomset::Kind::Seq)
        kids.insert(kids.end(), v.children().begin(), v.children().end());
    else
        kids.push_back(v);
    return Pomset::make(Pomset::Kind::Seq, Symbol{}, std::move(kids));
}

Pomset par_compose(const Pomset& u, const Pomset& v) {
    if (u.is_empty()) return v;
    if (v.is_empty()) return u;
    std::vector<Pomset> kids;
    if (u.kind() == Pomset::Kind::Par)
        kids = u.children();
    else
        kids.push_back(u);
    if (v.kind() == Pomset::Kind::Par)
        kids.insert(kids.end(), v.children().begin(), v.children().end());
    else
        kids.push_back(v);
    std::sort(kids.begin(), kids.end());
    return Pomset::make(Pomset::Kind::Par, Symbol{}, std::move(kids));
}

Pomset seq_of(const std::vector<Pomset>& parts) {
    Pomset acc;
    for (const Pomset& p : parts) acc = seq_compose(acc, p);
    return acc;
}

Pomset par_of(const std::vector<Pomset>& parts) {
    Pomset acc;
    for (const Pomset& p : parts) acc = par_compose(acc, p);
    return acc;
}

std::size_t width(const Pomset& u) { return u.width(); }
std::size_t size(const Pomset& u) { return u.size(); }

Factorization factorize(const Pomset& u) {
    switch (u.kind()) {
    case Pomset::Kind::Empty:
        throw EmptyPomsetError();
    case Pomset::Kind::Primitive:
        return {Factorization::Kind::Primitive, u.label(), {}};
    case Pomset::Kind::Seq:
        return {Factorization::Kind::SeqSplit, Symbol{}, u.children()};
    case Pomset::Kind::Par:
        return {Factorization::Kind::ParSplit, Symbol{}, u.children()};
    }
    throw EmptyPomsetError();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct PomsetParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what, pos + 1);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Pomset parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected pomset");
        char c = text[pos];
        if (c == '1') {
            ++pos;
            return Pomset::empty();
        }
        if (c == '(') {
            ++pos;
            Pomset inner = parse_par();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return Pomset::primitive(Symbol(std::string(text.substr(start, pos - start))));
        }
        fail("expected pomset");
    }

    Pomset parse_seq() {
        Pomset acc = parse_atom();
        while (eat('.')) acc = seq_compose(acc, parse_atom());
        return acc;
    }

    Pomset parse_par() {
        Pomset acc = parse_seq();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '|') {
                ++pos;
                acc = par_compose(acc, parse_seq());
            } else {
                break;
            }
        }
        return acc;
    }
};

} // namespace

Pomset parse_pomset(std::string_view text) {
    PomsetParser p{text};
    Pomset result = p.parse_par();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return result;
}

// ---------------------------------------------------------------------------
// Explicit posets

LabeledPoset LabeledPoset::from_pairs(std::vector<std::string> ids, std::vector<Symbol> labels,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    if (ids.size() != labels.size()) throw InvalidPosetError("every node needs a label");
    std::set<std::string> seen;
    for (const std::string& id : ids)
        if (!seen.insert(id).second) throw InvalidPosetError("duplicate node id: " + id);

    const std::size_t n = ids.size();
    LabeledPoset p;
    p.ids = std::move(ids);
    p.labels = std::move(labels);
    p.order.assign(n, std::vector<bool>(n, false));
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw InvalidPosetError("order pair references unknown node");
        p.order[a][b] = true;
    }
    // Warshall closure, then irreflexivity.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.order[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.order[k][j]) p.order[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (p.order[i][i]) throw InvalidPosetError("order is cyclic at node " + p.ids[i]);
    return p;
}

LabeledPoset to_labeled_poset(const Pomset& u) {
    LabeledPoset p;
    const std::size_t n = u.size();
    p.ids.reserve(n);
    p.labels.reserve(n);
    p.order.assign(n, std::vector<bool>(n, false));

    // Returns the node indices of the expanded subterm.
    auto expand = [&](auto&& self, const Pomset& v) -> std::vector<std::size_t> {
        switch (v.kind()) {
        case Pomset::Kind::Empty:
            return {};
        case Pomset::Kind::Primitive: {
            std::size_t idx = p.ids.size();
            p.ids.push_back("n" + std::to_string(idx));
            p.labels.push_back(v.label());
            return {idx};
        }
        case Pomset::Kind::Seq: {
            std::vector<std::size_t> all;
            for (const Pomset& c : v.children()) {
                std::vector<std::size_t> cur = self(self, c);
                // Everything seen so far precedes the new block.
                for (std::size_t a : all)
                    for (std::size_t b : cur) p.order[a][b] = true;
                all.insert(all.end(), cur.begin(), cur.end());
            }
            return all;
        }
        case Pomset::Kind::Par: {
            std::vector<std::size_t> all;
            for (const Pomset& c : v.children()) {
                std::vector<std::size_t> cur = self(self, c);
                all.insert(all.end(), cur.begin(), cur.end());
            }
            return all;
        }
        }
        return {};
    };
    expand(expand, u);
    return p;
}

namespace {

// Connected components of the comparability graph restricted to `nodes`.
std::vector<std::vector<std::size_t>> comparability_components(const LabeledPoset& p,
                                                               const std::vector<std::size_t>& nodes) {
    std::map<std::size_t, std::size_t> comp;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t seed : nodes) {
        if (comp.count(seed)) continue;
        std::vector<std::size_t> stack{seed};
        std::vector<std::size_t> members;
        comp[seed] = out.size();
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (std::size_t y : nodes) {
                if (comp.count(y)) continue;
                if (p.order[x][y] || p.order[y][x]) {
                    comp[y] = out.size();
                    stack.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Pomset decompose_nodes(const LabeledPoset& p, std::vector<std::size_t> nodes);

// `nodes` is comparability-connected with at least two members: peel factors
// at sequential cuts. A cut is a prefix of a fixed linear extension whose
// members all precede every later node.
Pomset decompose_connected(const LabeledPoset& p, const std::vector<std::size_t>& nodes) {
    const std::size_t n = nodes.size();
    // Linear extension by predecessor counts within `nodes`.
    std::vector<std::size_t> topo(nodes);
    std::stable_sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
        std::size_t pa = 0, pb = 0;
        for (std::size_t x : nodes) {
            if (p.order[x][a]) ++pa;
            if (p.order[x][b]) ++pb;
        }
        return pa < pb;
    });

    std::vector<std::vector<std::size_t>> factors;
    std::size_t lo = 0;
    for (std::size_t cut = 1; cut < n; ++cut) {
        bool ok = true;
        for (std::size_t i = lo; i < cut && ok; ++i)
            for (std::size_t j = cut; j < n && ok; ++j)
                if (!p.order[topo[i]][topo[j]]) ok = false;
        if (ok) {
            factors.emplace_back(topo.begin() + static_cast<std::ptrdiff_t>(lo),
                                 topo.begin() + static_cast<std::ptrdiff_t>(cut));
            lo = cut;
        }
    }
    if (factors.empty()) throw NotSeriesParallelError();
    factors.emplace_back(topo.begin() + static_cast<std::ptrdiff_t>(lo), topo.end());

    Pomset acc;
    for (auto& f : factors) acc = seq_compose(acc, decompose_nodes(p, std::move(f)));
    return acc;
}

Pomset decompose_nodes(const LabeledPoset& p, std::vector<std::size_t> nodes) {
    if (nodes.empty()) return Pomset::empty();
    if (nodes.size() == 1) return Pomset::primitive(p.labels[nodes[0]]);
    auto comps = comparability_components(p, nodes);
    if (comps.size() > 1) {
        Pomset acc;
        for (auto& c : comps) acc = par_compose(acc, decompose_nodes(p, std::move(c)));
        return acc;
    }
    return decompose_connected(p, nodes);
}

} // namespace

Pomset sp_decompose(const LabeledPoset& p) {
    std::vector<std::size_t> all(p.count());
    std::iota(all.begin(), all.end(), 0);
    return decompose_nodes(p, std::move(all));
}

} // namespace sprat
