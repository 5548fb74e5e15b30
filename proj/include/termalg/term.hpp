#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "termalg/errors.hpp"

namespace termalg {

/// A formal variable x_i, i >= 1.
struct Variable {
    std::uint32_t index;

    explicit Variable(std::uint32_t i);
    auto operator<=>(const Variable&) const = default;
};

enum class NodeKind { constant, variable, unary, binary, nary };

/// Immutable term tree. Copies share structure; all operations that "modify"
/// a term build a new spine and reuse untouched subtrees.
///
/// The word form of a term (the fully parenthesized string over variables,
/// symbols, `(`, `)` and `,`) is produced by `serialize` and read back by
/// `parse`; the tree and the word are in bijection.
class Term {
public:
    static Term constant(std::string symbol);
    static Term variable(Variable v);
    static Term variable(std::uint32_t index) { return variable(Variable(index)); }
    static Term unary(std::string symbol, Term child);
    static Term binary(std::string symbol, Term left, Term right);
    static Term nary(std::string symbol, std::vector<Term> children);

    NodeKind kind() const noexcept { return node_->kind; }
    bool is_atomic() const noexcept { return node_->kind == NodeKind::constant || node_->kind == NodeKind::variable; }
    bool is_variable() const noexcept { return node_->kind == NodeKind::variable; }
    bool is_constant(std::string_view symbol) const noexcept {
        return node_->kind == NodeKind::constant && node_->symbol == symbol;
    }
    bool is_binary(std::string_view symbol) const noexcept {
        return node_->kind == NodeKind::binary && node_->symbol == symbol;
    }
    bool is_unary(std::string_view symbol) const noexcept {
        return node_->kind == NodeKind::unary && node_->symbol == symbol;
    }

    /// Functional symbol; empty for variables.
    const std::string& symbol() const noexcept { return node_->symbol; }
    /// Index of a variable node; 0 for everything else.
    std::uint32_t var_index() const noexcept { return node_->var; }

    std::span<const Term> children() const noexcept { return node_->children; }
    std::size_t arity() const noexcept { return node_->children.size(); }
    /// 1-based child access, matching Position paths.
    const Term& child(std::size_t i) const { return node_->children.at(i - 1); }
    const Term& left() const { return child(1); }
    const Term& right() const { return child(2); }

    /// Number of nodes.
    std::size_t size() const noexcept { return node_->size; }

    bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    struct Node {
        NodeKind kind;
        std::string symbol;
        std::uint32_t var = 0;
        std::vector<Term> children;
        std::size_t size = 1;
        std::size_t hash = 0;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Term make(NodeKind kind, std::string symbol, std::uint32_t var, std::vector<Term> children);

    std::shared_ptr<const Node> node_;

    friend struct std::hash<Term>;
};

/// Path of 1-based child indices from the root. The empty path is the root.
struct Position {
    std::vector<std::size_t> path;

    Position() = default;
    Position(std::initializer_list<std::size_t> p) : path(p) {}
    explicit Position(std::vector<std::size_t> p) : path(std::move(p)) {}

    Position child(std::size_t i) const;
    Position parent() const;
    bool is_root() const noexcept { return path.empty(); }
    std::size_t depth() const noexcept { return path.size(); }
    /// True when `this` is a (non-strict) prefix of `other`.
    bool is_prefix_of(const Position& other) const noexcept;
    std::string to_string() const;

    auto operator<=>(const Position&) const = default;
};

/// Symbols with their arities, plus lexical aliases.
///
/// Ring literal mode additionally admits nullary symbols spelled `c{<int>}` or
/// `c{<int>/<int>}`; the ring module gives them meaning.
class AritySignature {
public:
    void add(std::string symbol, unsigned arity);
    void add_alias(std::string alias, std::string symbol);
    void set_ring_literals(bool enabled) { ring_literals_ = enabled; }
    bool ring_literals() const noexcept { return ring_literals_; }

    std::optional<unsigned> arity(std::string_view symbol) const;
    const std::map<std::string, unsigned, std::less<>>& symbols() const noexcept { return arity_; }
    const std::map<std::string, std::string, std::less<>>& aliases() const noexcept { return aliases_; }

private:
    std::map<std::string, unsigned, std::less<>> arity_;
    std::map<std::string, std::string, std::less<>> aliases_;
    bool ring_literals_ = false;
};

/// True for spellings `c{...}` of a ring constant literal.
bool is_ring_literal(std::string_view symbol) noexcept;

/// Reads a word; throws ParseError (not_a_term / unknown_symbol).
Term parse(std::string_view word, const AritySignature& sig);
/// Fully parenthesized word form; k-ary arguments are separated by commas.
std::string serialize(const Term& t);
/// The word as a sequence of alphabet letters (each variable and each symbol is one letter).
std::vector<std::string> to_letters(const Term& t);

Term subterm_at(const Term& t, const Position& p);
bool is_valid_position(const Term& t, const Position& p) noexcept;
Term replace_at(const Term& t, const Position& p, const Term& u);
Term substitute_var(const Term& t, Variable x, const Term& u);
std::size_t depth(const Term& t);
std::set<std::uint32_t> variables_of(const Term& t);
/// Largest variable index in t, 0 when t is a constant term.
std::uint32_t max_variable(const Term& t);
/// All positions in preorder (lexicographic order of paths).
std::vector<Position> positions(const Term& t);

/// Structural evaluation in an algebra whose operations are looked up by symbol.
template <class T>
struct Interpretation {
    std::function<T(const std::string& symbol)> constant;
    std::function<T(const std::string& symbol, std::span<const T> args)> operation;
};

/// Evaluation map: variables x_i take args[i-1]. Throws MissingArgument when a
/// variable index exceeds args.size().
template <class T>
T evaluate(const Term& t, const Interpretation<T>& alg, std::span<const T> args) {
    switch (t.kind()) {
    case NodeKind::constant:
        return alg.constant(t.symbol());
    case NodeKind::variable:
        if (t.var_index() > args.size())
            throw MissingArgument("no argument for x" + std::to_string(t.var_index()));
        return args[t.var_index() - 1];
    default:
        if constexpr (std::is_same_v<T, bool>) {
            // vector<bool> is packed, a span cannot view it
            std::unique_ptr<bool[]> values(new bool[t.arity()]);
            for (std::size_t i = 0; i < t.arity(); ++i)
                values[i] = evaluate(t.child(i + 1), alg, args);
            return alg.operation(t.symbol(), std::span<const bool>(values.get(), t.arity()));
        } else {
            std::vector<T> values;
            values.reserve(t.arity());
            for (const Term& c : t.children())
                values.push_back(evaluate(c, alg, args));
            return alg.operation(t.symbol(), std::span<const T>(values));
        }
    }
}

} // namespace termalg

template <>
struct std::hash<termalg::Term> {
    std::size_t operator()(const termalg::Term& t) const noexcept { return t.node_->hash; }
};
