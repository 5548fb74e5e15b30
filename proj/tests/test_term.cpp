#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generic_terms.hpp"
#include "support/oracles.hpp"
#include "termalg/boolean.hpp"
#include "termalg/ring_terms.hpp"

using namespace termalg;

namespace {
const AritySignature& G() { return oracle::generic_signature(); }
}

TEST_CASE("atomic, unary, binary and k-ary words") {
    Term t = parse("f(x1,h(a),(x2gb))", G());
    CHECK(t.symbol() == "f");
    CHECK(t.arity() == 3);
    CHECK(t.child(1) == Term::variable(1));
    CHECK(t.child(2) == Term::unary("h", Term::constant("a")));
    CHECK(t.child(3) == Term::binary("g", Term::variable(2), Term::constant("b")));
    CHECK(serialize(t) == "f(x1,h(a),(x2gb))");
    CHECK(t.size() == 7);
}

TEST_CASE("last comma of a k-ary argument list may be left out") {
    Term with = parse("f(x1,x2,x3)", G());
    Term without = parse("f(x1,x2x3)", G());
    CHECK(with == without);
    CHECK(serialize(without) == "f(x1,x2,x3)");
}

TEST_CASE("whitespace between tokens is ignored") {
    CHECK(parse(" ( x1 g\tx2 ) ", G()) == parse("(x1gx2)", G()));
}

TEST_CASE("parse errors carry kind and offset") {
    try {
        parse("(x1gx2", G());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::not_a_term);
        CHECK(e.offset() == 6);
    }
    try {
        parse("(x1zx2)", G());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::unknown_symbol);
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse("", G()), ParseError);
    CHECK_THROWS_AS(parse("x0", G()), ParseError);
    CHECK_THROWS_AS(parse("h(a)b", G()), ParseError);
    CHECK_THROWS_AS(parse("g(a,b)", G()), ParseError);  // binary symbols are infix
}

TEST_CASE("aliases lex to their symbols") {
    CHECK(serialize(parse_ring_term("(x1*x2)", Ring::integers())) == "(x1·x2)");
    CHECK(serialize(parse_bool_term("!((x1&x2))")) == "¬((x1∧x2))");
    CHECK(serialize(parse_bool_term("(x1|0)")) == "(x1∨0)");
}

TEST_CASE("positions address subterms") {
    Term t = parse("((x1gx2)g h(x3))", G());
    CHECK(subterm_at(t, {}) == t);
    CHECK(subterm_at(t, {1, 2}) == Term::variable(2));
    CHECK(subterm_at(t, {2, 1}) == Term::variable(3));
    CHECK_THROWS_AS(subterm_at(t, {3}), InvalidPosition);
    CHECK_THROWS_AS(subterm_at(t, {2, 2}), InvalidPosition);
    CHECK_FALSE(is_valid_position(t, {0}));
    CHECK(positions(t).size() == t.size());
    CHECK(serialize(replace_at(t, {1, 1}, Term::constant("a"))) == "((agx2)gh(x3))");
    CHECK(Position{1, 2}.parent() == Position{1});
    CHECK(Position{1}.is_prefix_of(Position{1, 2}));
    CHECK_FALSE(Position{2}.is_prefix_of(Position{1, 2}));
    CHECK(Position{1, 2}.to_string() == "[1,2]");
}

TEST_CASE("variables, depth, substitution") {
    Term t = parse("f(x3,h(x1),(x3gx7))", G());
    CHECK(variables_of(t) == std::set<std::uint32_t>{1, 3, 7});
    CHECK(max_variable(t) == 7);
    CHECK(depth(t) == 2);
    Term s = substitute_var(t, Variable(3), Term::constant("b"));
    CHECK(serialize(s) == "f(b,h(x1),(bgx7))");
}

TEST_CASE("evaluation needs every variable") {
    Interpretation<int> sum{
        .constant = [](const std::string&) { return 1; },
        .operation = [](const std::string&, std::span<const int> xs) {
            int s = 0;
            for (int x : xs) s += x;
            return s;
        },
    };
    std::vector<int> args{10, 20};
    CHECK(evaluate(parse("f(x1,x2,a)", G()), sum, std::span<const int>(args)) == 31);
    CHECK_THROWS_AS(evaluate(parse("(x1gx3)", G()), sum, std::span<const int>(args)), MissingArgument);
}

TEST_CASE("random terms: round trip, unique reading, length law, replacement") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        Term t = oracle::random_generic_term(rng, 4);
        const std::string w = serialize(t);
        Term back = parse(w, G());
        REQUIRE(back == t);
        CHECK(serialize(back) == w);
        // unique reading: the decomposition found by the parser is the one built
        CHECK(back.kind() == t.kind());
        CHECK(back.arity() == t.arity());
        CHECK(to_letters(t).size() == oracle::formula_length(t));
        std::string joined;
        for (const auto& l : to_letters(t)) joined += l;
        CHECK(joined == w);
        for (const Position& p : positions(t))
            CHECK(replace_at(t, p, subterm_at(t, p)) == t);
        CHECK(substitute_var(t, Variable(1), Term::variable(1)) == t);
    }
}

TEST_CASE("ordering and hashing agree with equality") {
    Term a = parse("(x1gx2)", G()), b = parse("(x1gx2)", G()), c = parse("(x2gx1)", G());
    CHECK(a == b);
    CHECK_FALSE(a.same_node(b));
    CHECK(std::hash<Term>{}(a) == std::hash<Term>{}(b));
    CHECK((a <=> c) != std::strong_ordering::equal);
}
