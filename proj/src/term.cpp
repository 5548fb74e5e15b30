#include "termalg/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace termalg {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace

Variable::Variable(std::uint32_t i) : index(i) {
    if (i == 0)
        throw PreconditionViolated("variable index must be >= 1");
}

Term Term::make(NodeKind kind, std::string symbol, std::uint32_t var, std::vector<Term> children) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->symbol = std::move(symbol);
    n->var = var;
    n->children = std::move(children);
    std::size_t h = mix(static_cast<std::size_t>(kind), std::hash<std::string>{}(n->symbol));
    h = mix(h, var);
    for (const Term& c : n->children) {
        n->size += c.size();
        h = mix(h, c.node_->hash);
    }
    n->hash = h;
    return Term(std::move(n));
}

Term Term::constant(std::string symbol) { return make(NodeKind::constant, std::move(symbol), 0, {}); }
Term Term::variable(Variable v) { return make(NodeKind::variable, {}, v.index, {}); }
Term Term::unary(std::string symbol, Term child) {
    return make(NodeKind::unary, std::move(symbol), 0, {std::move(child)});
}
Term Term::binary(std::string symbol, Term left, Term right) {
    return make(NodeKind::binary, std::move(symbol), 0, {std::move(left), std::move(right)});
}
Term Term::nary(std::string symbol, std::vector<Term> children) {
    if (children.size() < 3)
        throw PreconditionViolated("k-ary node needs at least 3 children");
    return make(NodeKind::nary, std::move(symbol), 0, std::move(children));
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_)
        return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.size != y.size || x.kind != y.kind || x.var != y.var || x.symbol != y.symbol)
        return false;
    return std::equal(x.children.begin(), x.children.end(), y.children.begin(), y.children.end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.var <=> y.var; c != 0) return c;
    if (auto c = x.symbol <=> y.symbol; c != 0) return c;
    return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(),
                                                  y.children.begin(), y.children.end());
}

Position Position::child(std::size_t i) const {
    Position p = *this;
    p.path.push_back(i);
    return p;
}

Position Position::parent() const {
    if (path.empty())
        throw InvalidPosition("root has no parent");
    Position p = *this;
    p.path.pop_back();
    return p;
}

bool Position::is_prefix_of(const Position& other) const noexcept {
    return path.size() <= other.path.size() && std::equal(path.begin(), path.end(), other.path.begin());
}

std::string Position::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(path[i]);
    }
    return s + "]";
}

void AritySignature::add(std::string symbol, unsigned arity) {
    if (symbol.empty() || symbol.find_first_of("(),") != std::string::npos || symbol[0] == 'x')
        throw PreconditionViolated("bad symbol name '" + symbol + "'");
    auto [it, fresh] = arity_.emplace(symbol, arity);
    if (!fresh && it->second != arity)
        throw PreconditionViolated("symbol '" + symbol + "' already has arity " + std::to_string(it->second));
}

void AritySignature::add_alias(std::string alias, std::string symbol) {
    if (!arity_.contains(symbol))
        throw PreconditionViolated("alias target '" + symbol + "' is not a symbol");
    aliases_[std::move(alias)] = std::move(symbol);
}

std::optional<unsigned> AritySignature::arity(std::string_view symbol) const {
    if (auto it = arity_.find(symbol); it != arity_.end())
        return it->second;
    if (ring_literals_ && is_ring_literal(symbol))
        return 0u;
    return std::nullopt;
}

bool is_ring_literal(std::string_view s) noexcept {
    if (s.size() < 4 || s.substr(0, 2) != "c{" || s.back() != '}')
        return false;
    std::string_view body = s.substr(2, s.size() - 3);
    auto digits = [](std::string_view d) {
        if (!d.empty() && d[0] == '-') d.remove_prefix(1);
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = body.find('/');
    if (slash == std::string_view::npos)
        return digits(body);
    std::string_view den = body.substr(slash + 1);
    return digits(body.substr(0, slash)) && !den.empty() && den[0] != '-' && digits(den);
}

// ---- parsing ----

namespace {

struct Token {
    enum Kind { lparen, rparen, comma, variable, sym, end } kind;
    std::string text;
    std::uint32_t var = 0;
    std::size_t offset = 0;
};

class Lexer {
public:
    Lexer(std::string_view w, const AritySignature& sig) : w_(w), sig_(sig) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            if (i_ >= w_.size()) {
                out.push_back({Token::end, {}, 0, i_});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void skip_ws() {
        while (i_ < w_.size() && std::isspace(static_cast<unsigned char>(w_[i_])))
            ++i_;
    }

    Token next() {
        std::size_t start = i_;
        char c = w_[i_];
        if (c == '(') { ++i_; return {Token::lparen, "(", 0, start}; }
        if (c == ')') { ++i_; return {Token::rparen, ")", 0, start}; }
        if (c == ',') { ++i_; return {Token::comma, ",", 0, start}; }
        if (c == 'x' && i_ + 1 < w_.size() && std::isdigit(static_cast<unsigned char>(w_[i_ + 1]))) {
            std::size_t j = i_ + 1;
            while (j < w_.size() && std::isdigit(static_cast<unsigned char>(w_[j])))
                ++j;
            std::string digits(w_.substr(i_ + 1, j - i_ - 1));
            unsigned long long v = 0;
            try {
                v = std::stoull(digits);
            } catch (const std::exception&) {
                throw ParseError(ParseError::Kind::not_a_term, start, "variable index out of range");
            }
            if (v == 0 || v > UINT32_MAX)
                throw ParseError(ParseError::Kind::not_a_term, start, "variable index must be in 1..2^32-1");
            i_ = j;
            return {Token::variable, "x" + digits, static_cast<std::uint32_t>(v), start};
        }
        if (sig_.ring_literals() && w_.substr(i_, 2) == "c{") {
            auto close = w_.find('}', i_);
            if (close != std::string_view::npos) {
                std::string_view lit = w_.substr(i_, close - i_ + 1);
                if (is_ring_literal(lit)) {
                    i_ = close + 1;
                    return {Token::sym, std::string(lit), 0, start};
                }
            }
            throw ParseError(ParseError::Kind::unknown_symbol, start, "malformed ring literal");
        }
        // greedy: longest symbol or alias that matches here
        std::size_t best = 0;
        std::string resolved;
        for (const auto& [name, _] : sig_.symbols())
            if (name.size() > best && w_.substr(i_, name.size()) == name) {
                best = name.size();
                resolved = name;
            }
        for (const auto& [alias, target] : sig_.aliases())
            if (alias.size() > best && w_.substr(i_, alias.size()) == alias) {
                best = alias.size();
                resolved = target;
            }
        if (best == 0)
            throw ParseError(ParseError::Kind::unknown_symbol, start,
                             "unknown letter at offset " + std::to_string(start));
        i_ += best;
        return {Token::sym, resolved, 0, start};
    }

    std::string_view w_;
    const AritySignature& sig_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const AritySignature& sig) : t_(std::move(toks)), sig_(sig) {}

    Term run() {
        Term r = term();
        if (peek().kind != Token::end)
            fail("trailing input after term");
        return r;
    }

private:
    const Token& peek() const { return t_[k_]; }
    const Token& take() { return t_[k_ == t_.size() - 1 ? k_ : k_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ParseError::Kind::not_a_term, peek().offset,
                         msg + " at offset " + std::to_string(peek().offset));
    }

    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k)
            fail(std::string("expected ") + what);
        take();
    }

    unsigned arity_of(const std::string& s) const { return *sig_.arity(s); }

    Term term() {
        const Token& tok = peek();
        switch (tok.kind) {
        case Token::variable: {
            auto v = tok.var;
            take();
            return Term::variable(v);
        }
        case Token::sym: {
            std::string s = tok.text;
            unsigned a = arity_of(s);
            if (a == 2)
                fail("binary symbol '" + s + "' outside parentheses");
            take();
            if (a == 0)
                return Term::constant(s);
            expect(Token::lparen, "'('");
            std::vector<Term> args;
            args.push_back(term());
            while (args.size() < a) {
                // the comma before the last argument may be omitted
                if (peek().kind == Token::comma)
                    take();
                else if (args.size() + 1 != a || a < 3)
                    fail("expected ','");
                args.push_back(term());
            }
            expect(Token::rparen, "')'");
            if (a == 1)
                return Term::unary(s, std::move(args[0]));
            return Term::nary(s, std::move(args));
        }
        case Token::lparen: {
            take();
            Term l = term();
            if (peek().kind != Token::sym || arity_of(peek().text) != 2)
                fail("expected binary symbol");
            std::string s = take().text;
            Term r = term();
            expect(Token::rparen, "')'");
            return Term::binary(s, std::move(l), std::move(r));
        }
        default:
            fail("expected a term");
        }
    }

    std::vector<Token> t_;
    const AritySignature& sig_;
    std::size_t k_ = 0;
};

void write(const Term& t, std::string& out) {
    switch (t.kind()) {
    case NodeKind::constant:
        out += t.symbol();
        break;
    case NodeKind::variable:
        out += 'x';
        out += std::to_string(t.var_index());
        break;
    case NodeKind::unary:
        out += t.symbol();
        out += '(';
        write(t.child(1), out);
        out += ')';
        break;
    case NodeKind::binary:
        out += '(';
        write(t.left(), out);
        out += t.symbol();
        write(t.right(), out);
        out += ')';
        break;
    case NodeKind::nary:
        out += t.symbol();
        out += '(';
        for (std::size_t i = 1; i <= t.arity(); ++i) {
            if (i > 1) out += ',';
            write(t.child(i), out);
        }
        out += ')';
        break;
    }
}

void letters(const Term& t, std::vector<std::string>& out) {
    switch (t.kind()) {
    case NodeKind::constant: out.push_back(t.symbol()); break;
    case NodeKind::variable: out.push_back("x" + std::to_string(t.var_index())); break;
    case NodeKind::unary:
        out.push_back(t.symbol());
        out.push_back("(");
        letters(t.child(1), out);
        out.push_back(")");
        break;
    case NodeKind::binary:
        out.push_back("(");
        letters(t.left(), out);
        out.push_back(t.symbol());
        letters(t.right(), out);
        out.push_back(")");
        break;
    case NodeKind::nary:
        out.push_back(t.symbol());
        out.push_back("(");
        for (std::size_t i = 1; i <= t.arity(); ++i) {
            if (i > 1) out.push_back(",");
            letters(t.child(i), out);
        }
        out.push_back(")");
        break;
    }
}

Term rebuild(const Term& t, std::vector<Term> kids) {
    switch (t.kind()) {
    case NodeKind::unary: return Term::unary(t.symbol(), std::move(kids[0]));
    case NodeKind::binary: return Term::binary(t.symbol(), std::move(kids[0]), std::move(kids[1]));
    case NodeKind::nary: return Term::nary(t.symbol(), std::move(kids));
    default: return t;
    }
}

Term replace_rec(const Term& t, const std::vector<std::size_t>& path, std::size_t at, const Term& u) {
    if (at == path.size())
        return u;
    std::size_t i = path[at];
    if (i == 0 || i > t.arity())
        throw InvalidPosition("position " + Position(path).to_string() + " is not in the term");
    std::vector<Term> kids(t.children().begin(), t.children().end());
    kids[i - 1] = replace_rec(kids[i - 1], path, at + 1, u);
    return rebuild(t, std::move(kids));
}

void positions_rec(const Term& t, Position& cur, std::vector<Position>& out) {
    out.push_back(cur);
    for (std::size_t i = 1; i <= t.arity(); ++i) {
        cur.path.push_back(i);
        positions_rec(t.child(i), cur, out);
        cur.path.pop_back();
    }
}

} // namespace

Term parse(std::string_view word, const AritySignature& sig) {
    return Parser(Lexer(word, sig).run(), sig).run();
}

std::string serialize(const Term& t) {
    std::string out;
    write(t, out);
    return out;
}

std::vector<std::string> to_letters(const Term& t) {
    std::vector<std::string> out;
    letters(t, out);
    return out;
}

Term subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (std::size_t i : p.path) {
        if (i == 0 || i > cur->arity())
            throw InvalidPosition("position " + p.to_string() + " is not in the term");
        cur = &cur->child(i);
    }
    return *cur;
}

bool is_valid_position(const Term& t, const Position& p) noexcept {
    const Term* cur = &t;
    for (std::size_t i : p.path) {
        if (i == 0 || i > cur->arity())
            return false;
        cur = &cur->child(i);
    }
    return true;
}

Term replace_at(const Term& t, const Position& p, const Term& u) { return replace_rec(t, p.path, 0, u); }

Term substitute_var(const Term& t, Variable x, const Term& u) {
    if (t.is_variable())
        return t.var_index() == x.index ? u : t;
    if (t.is_atomic())
        return t;
    std::vector<Term> kids;
    kids.reserve(t.arity());
    bool changed = false;
    for (const Term& c : t.children()) {
        kids.push_back(substitute_var(c, x, u));
        changed = changed || !kids.back().same_node(c);
    }
    return changed ? rebuild(t, std::move(kids)) : t;
}

std::size_t depth(const Term& t) {
    std::size_t d = 0;
    for (const Term& c : t.children())
        d = std::max(d, depth(c) + 1);
    return d;
}

std::set<std::uint32_t> variables_of(const Term& t) {
    std::set<std::uint32_t> vs;
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        if (cur->is_variable())
            vs.insert(cur->var_index());
        for (const Term& c : cur->children())
            stack.push_back(&c);
    }
    return vs;
}

std::uint32_t max_variable(const Term& t) {
    auto vs = variables_of(t);
    return vs.empty() ? 0 : *vs.rbegin();
}

std::vector<Position> positions(const Term& t) {
    std::vector<Position> out;
    Position cur;
    positions_rec(t, cur, out);
    return out;
}

} // namespace termalg
