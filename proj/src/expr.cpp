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

#include "sprat/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sprat {

Expr::Expr() {
    static const std::shared_ptr<const Node> kZero = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Zero;
        return n;
    }();
    node_ = kZero;
}

Expr Expr::zero() { return Expr(); }

Expr Expr::one() {
    static const std::shared_ptr<const Node> kOne = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::One;
        return n;
    }();
    return Expr(kOne);
}

Expr Expr::letter(Symbol s) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Letter;
    n->sym = std::move(s);
    return Expr(std::move(n));
}

Expr Expr::plus(Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Plus;
    n->kids = {std::move(lhs), std::move(rhs)};
    return Expr(std::move(n));
}

Expr Expr::dot(Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Dot;
    n->kids = {std::move(lhs), std::move(rhs)};
    return Expr(std::move(n));
}

Expr Expr::par(Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Par;
    n->kids = {std::move(lhs), std::move(rhs)};
    return Expr(std::move(n));
}

Expr Expr::star(Expr body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Star;
    n->kids = {std::move(body)};
    return Expr(std::move(n));
}

namespace {

// Precedence levels used when rendering with minimal parentheses.
int prec(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Plus:
        return 1;
    case Expr::Kind::Par:
        return 2;
    case Expr::Kind::Dot:
        return 3;
    case Expr::Kind::Star:
        return 4;
    default:
        return 5;
    }
}

const char* op_token(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Plus:
        return "+";
    case Expr::Kind::Par:
        return "||";
    case Expr::Kind::Dot:
        return ".";
    default:
        return "";
    }
}

void render_expr(const Expr& e, int context, std::string& out) {
    switch (e.kind()) {
    case Expr::Kind::Zero:
        out += '0';
        return;
    case Expr::Kind::One:
        out += '1';
        return;
    case Expr::Kind::Letter:
        out += e.letter_symbol().name;
        return;
    case Expr::Kind::Star: {
        bool parens = prec(e.body().kind()) < prec(Expr::Kind::Star);
        if (parens) out += '(';
        render_expr(e.body(), 0, out);
        if (parens) out += ')';
        out += '*';
        return;
    }
    default: {
        int p = prec(e.kind());
        bool parens = p < context;
        if (parens) out += '(';
        // Left operand keeps the operator's level, the right operand gets a
        // stricter one so right-nested trees stay parenthesised.
        render_expr(e.lhs(), p, out);
        out += op_token(e.kind());
        render_expr(e.rhs(), p + 1, out);
        if (parens) out += ')';
        return;
    }
    }
}

} // namespace

std::string Expr::text() const {
    std::string out;
    render_expr(*this, 0, out);
    return out;
}

std::string Expr::ast_text() const {
    switch (kind()) {
    case Kind::Zero:
        return "0";
    case Kind::One:
        return "1";
    case Kind::Letter:
        return letter_symbol().name;
    case Kind::Star:
        return "(* " + body().ast_text() + ")";
    case Kind::Plus:
        return "(+ " + lhs().ast_text() + " " + rhs().ast_text() + ")";
    case Kind::Dot:
        return "(. " + lhs().ast_text() + " " + rhs().ast_text() + ")";
    case Kind::Par:
        return "(|| " + lhs().ast_text() + " " + rhs().ast_text() + ")";
    }
    return {};
}

bool Expr::identical(const Expr& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
    case Kind::Zero:
    case Kind::One:
        return true;
    case Kind::Letter:
        return letter_symbol() == other.letter_symbol();
    case Kind::Star:
        return body().identical(other.body());
    default:
        return lhs().identical(other.lhs()) && rhs().identical(other.rhs());
    }
}

std::size_t Expr::size_nodes() const {
    std::size_t n = 1;
    for (const Expr& k : node_->kids) n += k.size_nodes();
    return n;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos + 1); }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    Expr parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected expression");
        char c = text[pos];
        if (c == '0') {
            ++pos;
            return Expr::zero();
        }
        if (c == '1') {
            ++pos;
            return Expr::one();
        }
        if (c == '(') {
            ++pos;
            Expr inner = parse_plus();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            ++pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return Expr::letter(Symbol(std::string(text.substr(start, pos - start))));
        }
        fail("expected expression");
    }

    Expr parse_postfix() {
        Expr e = parse_atom();
        while (peek('*')) {
            ++pos;
            e = Expr::star(std::move(e));
        }
        return e;
    }

    Expr parse_dot() {
        Expr e = parse_postfix();
        while (peek('.')) {
            ++pos;
            e = Expr::dot(std::move(e), parse_postfix());
        }
        return e;
    }

    Expr parse_par() {
        Expr e = parse_dot();
        while (true) {
            skip_ws();
            if (pos + 1 < text.size() && text[pos] == '|' && text[pos + 1] == '|') {
                pos += 2;
                e = Expr::par(std::move(e), parse_dot());
            } else if (pos < text.size() && text[pos] == '|') {
                fail("expected '||'");
            } else {
                break;
            }
        }
        return e;
    }

    Expr parse_plus() {
        Expr e = parse_par();
        while (peek('+')) {
            ++pos;
            e = Expr::plus(std::move(e), parse_par());
        }
        return e;
    }
};

} // namespace

Expr parse_expr(std::string_view text) {
    ExprParser p{text};
    Expr e = p.parse_plus();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected trailing input");
    return e;
}

bool nullable(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Zero:
    case Expr::Kind::Letter:
        return false;
    case Expr::Kind::One:
    case Expr::Kind::Star:
        return true;
    case Expr::Kind::Plus:
        return nullable(e.lhs()) || nullable(e.rhs());
    case Expr::Kind::Dot:
    case Expr::Kind::Par:
        return nullable(e.lhs()) && nullable(e.rhs());
    }
    return false;
}

Alphabet letters(const Expr& e) {
    Alphabet sigma;
    auto walk = [&](auto&& self, const Expr& x) -> void {
        switch (x.kind()) {
        case Expr::Kind::Letter:
            alphabet_insert(sigma, x.letter_symbol());
            return;
        case Expr::Kind::Star:
            self(self, x.body());
            return;
        case Expr::Kind::Plus:
        case Expr::Kind::Dot:
        case Expr::Kind::Par:
            self(self, x.lhs());
            self(self, x.rhs());
            return;
        default:
            return;
        }
    };
    walk(walk, e);
    return sigma;
}

// ---------------------------------------------------------------------------
// Normal forms

NormalExpr::NormalExpr() {
    static const std::shared_ptr<const Node> kZero = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Sum;
        n->key = "+()";
        return n;
    }();
    node_ = kZero;
}

NormalExpr NormalExpr::make(Kind kind, Symbol sym, std::vector<NormalExpr> kids) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->sym = std::move(sym);
    n->kids = std::move(kids);
    switch (kind) {
    case Kind::Sum: {
        std::string key = "+(";
        for (std::size_t i = 0; i < n->kids.size(); ++i) {
            if (i) key += ',';
            key += n->kids[i].key();
        }
        key += ')';
        n->key = std::move(key);
        break;
    }
    case Kind::One:
        n->key = "1";
        break;
    case Kind::Letter:
        n->key = n->sym.name;
        break;
    case Kind::Dot:
        n->key = ".(" + n->kids[0].key() + "," + n->kids[1].key() + ")";
        break;
    case Kind::Par:
        n->key = "|(" + n->kids[0].key() + "," + n->kids[1].key() + ")";
        break;
    case Kind::Star:
        n->key = "*(" + n->kids[0].key() + ")";
        break;
    }
    return NormalExpr(std::move(n));
}

NormalExpr NormalExpr::sum(std::vector<NormalExpr> summands) {
    std::vector<NormalExpr> flat;
    for (NormalExpr& s : summands) {
        if (s.kind() == Kind::Sum) {
            for (const NormalExpr& inner : s.summands()) flat.push_back(inner);
        } else {
            flat.push_back(std::move(s));
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    return make(Kind::Sum, Symbol{}, std::move(flat));
}

NormalExpr NormalExpr::one() { return make(Kind::One, Symbol{}, {}); }

NormalExpr NormalExpr::letter(Symbol s) { return make(Kind::Letter, std::move(s), {}); }

NormalExpr NormalExpr::dot(NormalExpr lhs, NormalExpr rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return NormalExpr();
    return make(Kind::Dot, Symbol{}, {std::move(lhs), std::move(rhs)});
}

NormalExpr NormalExpr::par(NormalExpr lhs, NormalExpr rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return NormalExpr();
    return make(Kind::Par, Symbol{}, {std::move(lhs), std::move(rhs)});
}

NormalExpr NormalExpr::star(NormalExpr body) {
    return make(Kind::Star, Symbol{}, {std::move(body)});
}

NormalExpr normalize(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Zero:
        return NormalExpr();
    case Expr::Kind::One:
        return NormalExpr::one();
    case Expr::Kind::Letter:
        return NormalExpr::letter(e.letter_symbol());
    case Expr::Kind::Plus:
        return NormalExpr::sum({normalize(e.lhs()), normalize(e.rhs())});
    case Expr::Kind::Dot:
        return NormalExpr::dot(normalize(e.lhs()), normalize(e.rhs()));
    case Expr::Kind::Par:
        return NormalExpr::par(normalize(e.lhs()), normalize(e.rhs()));
    case Expr::Kind::Star:
        return NormalExpr::star(normalize(e.body()));
    }
    return NormalExpr();
}

Expr embed(const NormalExpr& n) {
    switch (n.kind()) {
    case NormalExpr::Kind::Sum: {
        if (n.summands().empty()) return Expr::zero();
        Expr acc = embed(n.summands().front());
        for (std::size_t i = 1; i < n.summands().size(); ++i)
            acc = Expr::plus(std::move(acc), embed(n.summands()[i]));
        return acc;
    }
    case NormalExpr::Kind::One:
        return Expr::one();
    case NormalExpr::Kind::Letter:
        return Expr::letter(n.letter_symbol());
    case NormalExpr::Kind::Dot:
        return Expr::dot(embed(n.lhs()), embed(n.rhs()));
    case NormalExpr::Kind::Par:
        return Expr::par(embed(n.lhs()), embed(n.rhs()));
    case NormalExpr::Kind::Star:
        return Expr::star(embed(n.body()));
    }
    return Expr::zero();
}

std::string NormalExpr::text() const { return embed(*this).text(); }

bool congruent(const Expr& e, const Expr& f) { return normalize(e) == normalize(f); }

bool is_empty(const Expr& e) { return normalize(e).is_zero(); }

bool nullable(const NormalExpr& n) {
    switch (n.kind()) {
    case NormalExpr::Kind::Sum:
        for (const NormalExpr& s : n.summands())
            if (nullable(s)) return true;
        return false;
    case NormalExpr::Kind::One:
    case NormalExpr::Kind::Star:
        return true;
    case NormalExpr::Kind::Letter:
        return false;
    case NormalExpr::Kind::Dot:
    case NormalExpr::Kind::Par:
        return nullable(n.lhs()) && nullable(n.rhs());
    }
    return false;
}

std::size_t parallel_depth(const Expr& e) {
    if (is_empty(e)) return 0;
    switch (e.kind()) {
    case Expr::Kind::Zero: // unreachable: zero is empty
    case Expr::Kind::One:
        return 0;
    case Expr::Kind::Letter:
        return 1;
    case Expr::Kind::Plus:
    case Expr::Kind::Dot:
        return std::max(parallel_depth(e.lhs()), parallel_depth(e.rhs()));
    case Expr::Kind::Par:
        return std::max(parallel_depth(e.lhs()), parallel_depth(e.rhs())) + 1;
    case Expr::Kind::Star:
        return parallel_depth(e.body());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Bounded enumeration

namespace {

// The bound is fixed across the recursion, so memoisation keys on the shared
// node alone; extracted expressions reuse subtrees heavily.
struct Enumerator {
    std::size_t bound;
    std::map<const void*, LanguageSample> memo;

    const LanguageSample& run(const Expr& e) {
        auto it = memo.find(e.node_id());
        if (it != memo.end()) return it->second;
        LanguageSample out = compute(e);
        return memo.emplace(e.node_id(), std::move(out)).first->second;
    }

    LanguageSample compute(const Expr& e) {
        switch (e.kind()) {
        case Expr::Kind::Zero:
            return {};
        case Expr::Kind::One:
            return {Pomset::empty()};
        case Expr::Kind::Letter:
            if (bound >= 1) return {Pomset::primitive(e.letter_symbol())};
            return {};
        case Expr::Kind::Plus: {
            LanguageSample out = run(e.lhs());
            const LanguageSample& r = run(e.rhs());
            out.insert(r.begin(), r.end());
            return out;
        }
        case Expr::Kind::Dot:
        case Expr::Kind::Par: {
            const LanguageSample& l = run(e.lhs());
            const LanguageSample& r = run(e.rhs());
            const bool seq = e.kind() == Expr::Kind::Dot;
            LanguageSample out;
            for (const Pomset& u : l)
                for (const Pomset& v : r)
                    if (u.size() + v.size() <= bound)
                        out.insert(seq ? seq_compose(u, v) : par_compose(u, v));
            return out;
        }
        case Expr::Kind::Star: {
            const LanguageSample& base = run(e.body());
            LanguageSample out{Pomset::empty()};
            LanguageSample power{Pomset::empty()};
            // Union of powers; stops once a power contributes nothing new,
            // which happens within `bound` rounds since non-empty factors
            // strictly grow the size.
            while (true) {
                LanguageSample next;
                for (const Pomset& u : base)
                    for (const Pomset& v : power)
                        if (u.size() + v.size() <= bound) next.insert(seq_compose(u, v));
                std::size_t before = out.size();
                out.insert(next.begin(), next.end());
                if (out.size() == before) break;
                power = std::move(next);
            }
            return out;
        }
        }
        return {};
    }
};

} // namespace

LanguageSample enumerate_language(const Expr& e, std::size_t max_size) {
    Enumerator en{max_size, {}};
    return en.run(e);
}

std::size_t language_width(const LanguageSample& sample) {
    std::size_t w = 0;
    for (const Pomset& u : sample) w = std::max(w, u.width());
    return w;
}

} // namespace sprat
