#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "termalg/random_terms.hpp"
#include "termalg/ring_terms.hpp"

using namespace termalg;

namespace {

Term R(const std::string& w, const Ring& ring = Ring::integers()) { return parse_ring_term(w, ring); }

oracle::Dense expand(const Term& t, const Ring& ring) { return oracle::expand(t, ring, 8); }
oracle::Dense dense(const StandardPolynomial& p) { return oracle::dense_of(p, 8); }

// All ring terms with at most `size` nodes over the given leaves.
std::vector<Term> all_terms(std::size_t size, const std::vector<Term>& leaves) {
    std::vector<std::vector<Term>> by(size + 1);
    by[1] = leaves;
    for (std::size_t s = 3; s <= size; s += 2)
        for (std::size_t l = 1; l + 2 <= s; l += 2)
            for (const Term& a : by[l])
                for (const Term& b : by[s - 1 - l]) {
                    by[s].push_back(plus(a, b));
                    by[s].push_back(times(a, b));
                }
    std::vector<Term> out;
    for (auto& v : by) out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace

TEST_CASE("worked psi values") {
    Ring Z = Ring::integers();
    CHECK(psi(R("(x1+x2)"), Z) == make_poly(Z, {{{1}, Scalar(1)}, {{0, 1}, Scalar(1)}}));
    CHECK(psi(R("(x2·(x1+x5))"), Z) == make_poly(Z, {{{0, 1, 0, 0, 1}, Scalar(1)}, {{1, 1}, Scalar(1)}}));
    CHECK(psi(R("((1+c{1})·c{1})"), Z) == constant_poly(Z, Scalar(2)));
    Ring Z2 = Ring::modular(2);
    CHECK(psi(R("((1+c{1})·c{1})", Z2), Z2).is_zero());
}

TEST_CASE("psi agrees with dense expansion") {
    for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::modular(6), Ring::rationals()}) {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 400; ++i) {
            Term t = random_ring_term(ring, rng);
            CHECK(dense(psi(t, ring)) == expand(t, ring));
        }
    }
}

TEST_CASE("evaluation maps can agree on non-equivalent terms") {
    Ring Z2 = Ring::modular(2);
    Term t = R("((x1·x1)+x1)", Z2), u = R("0", Z2);
    CHECK_FALSE(s_equivalent(t, u, Z2));
    auto alg = scalar_algebra(Z2);
    for (int y = 0; y < 2; ++y) {
        std::vector<Scalar> args{Scalar(y)};
        CHECK(phi_eval<Scalar>(t, alg, args) == phi_eval<Scalar>(u, alg, args));
    }
}

TEST_CASE("s-equivalent terms have equal evaluation maps into the polynomial ring") {
    std::mt19937_64 rng(37);
    Ring Z = Ring::integers();
    auto alg = polynomial_algebra(Z);
    for (int i = 0; i < 150; ++i) {
        auto [t, u] = random_equivalent_ring_pair(Z, rng, 6, TermShape{4, 3, 8});
        REQUIRE(s_equivalent(t, u, Z));
        std::vector<StandardPolynomial> b;
        for (int k = 0; k < 3; ++k) b.push_back(random_poly(Z, rng));
        CHECK(phi_eval<StandardPolynomial>(t, alg, b) == phi_eval<StandardPolynomial>(u, alg, b));
    }
}

TEST_CASE("literals are canonicalized on parse") {
    Ring Z6 = Ring::modular(6);
    CHECK(serialize(R("(c{7}+c{-1})", Z6)) == "(c{1}+c{5})");
    CHECK(serialize(R("c{6/4}", Ring::rationals())) == "c{3/2}");
    CHECK_THROWS_AS(R("c{1/2}", Z6), RingMismatch);
    CHECK_THROWS_AS(check_ring_term(Term::constant("c{7}"), Z6), PreconditionViolated);
}

TEST_CASE("worked five-step chain replays") {
    Ring Z = Ring::integers();
    RingCertificate c{Z, R("((x7+c{1})·x3)"), R("((x3·x7)+x3)"),
                      {
                          {EtRule::et6, {}, Direction::forward, {}, {}, {}},
                          {EtRule::et9, {}, Direction::forward, {}, {}, {}},
                          {EtRule::et6, {2}, Direction::forward, {}, {}, {}},
                          {EtRule::et0, {2, 1}, Direction::reverse, {}, {}, {}},
                          {EtRule::et4, {2}, Direction::forward, {}, {}, {}},
                      }};
    CHECK(verify_certificate(c).ok);
    CHECK(verify_certificate(reversed(c)).ok);
    c.steps[2].pos = Position{1};
    auto r = verify_certificate(c);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 3u);
}

TEST_CASE("single rules") {
    Ring Z = Ring::integers();
    auto step = [&](const std::string& w, EtRule rule, Direction d = Direction::forward) {
        return serialize(apply_et(R(w), EtStep{rule, {}, d, {}, {}, {}}, Z));
    };
    CHECK(step("0", EtRule::etm1) == "c{0}");
    CHECK(step("c{1}", EtRule::et0, Direction::reverse) == "1");
    CHECK(step("(c{2}+c{3})", EtRule::et1) == "c{5}");
    CHECK(step("(c{2}·c{3})", EtRule::et2) == "c{6}");
    CHECK(step("(0+x1)", EtRule::et3) == "x1");
    CHECK(step("x1", EtRule::et4, Direction::reverse) == "(1·x1)");
    CHECK(step("(x1+x2)", EtRule::et5) == "(x2+x1)");
    CHECK(step("(x1·(x2·x3))", EtRule::et8) == "((x1·x2)·x3)");
    CHECK(step("((x1+x2)+x3)", EtRule::et7, Direction::reverse) == "(x1+(x2+x3))");
    CHECK(step("(x1·(x2+x3))", EtRule::et9) == "((x1·x2)+(x1·x3))");
    CHECK(step("((x1·x2)+(x1·x3))", EtRule::et9, Direction::reverse) == "(x1·(x2+x3))");
    CHECK(step("(0·(x1+x2))", EtRule::et10) == "0");

    CHECK_THROWS_AS(step("(x1+x2)", EtRule::et6), RedexMismatch);
    CHECK_THROWS_AS(step("((x1·x2)+(x2·x3))", EtRule::et9, Direction::reverse), RedexMismatch);
    // erasing rules need their bindings backwards
    CHECK_THROWS_AS(step("c{5}", EtRule::et1, Direction::reverse), RedexMismatch);
    CHECK_THROWS_AS(step("0", EtRule::et10, Direction::reverse), RedexMismatch);
    EtStep rec;
    apply_et(R("(c{2}+c{3})"), EtStep{EtRule::et1, {}, Direction::forward, {}, {}, {}}, Z, &rec);
    CHECK(rec.r == Scalar(2));
    CHECK(rec.s == Scalar(3));
    EtStep back{EtRule::et1, {}, Direction::reverse, Scalar(2), Scalar(3), {}};
    CHECK(serialize(apply_et(R("c{5}"), back, Z)) == "(c{2}+c{3})");
    back.s = Scalar(4);
    CHECK_THROWS_AS(apply_et(R("c{5}"), back, Z), RedexMismatch);
    CHECK_THROWS_AS(apply_et(R("x1"), EtStep{EtRule::et5, {1}, Direction::forward, {}, {}, {}}, Z), InvalidPosition);
}

TEST_CASE("every rule preserves psi at every redex of small terms") {
    for (const Ring& ring : {Ring::integers(), Ring::modular(6)}) {
        std::vector<Term> leaves{ring_zero(), ring_one(), Term::variable(1), Term::variable(2),
                                 ring_literal(ring, Scalar(2)), ring_literal(ring, Scalar(3))};
        auto terms = all_terms(5, leaves);
        std::size_t applied = 0;
        for (const Term& t : terms) {
            const auto before = expand(t, ring);
            for (const Position& p : positions(t))
                for (int r = 0; r < 12; ++r)
                    for (Direction d : {Direction::forward, Direction::reverse}) {
                        EtStep s{static_cast<EtRule>(r), p, d, {}, {}, {}};
                        const Term v = subterm_at(t, p);
                        if (d == Direction::reverse) {
                            s.u = Term::variable(2);
                            if (is_literal(v)) {
                                const Scalar c = Ring::literal_value(v.symbol());
                                s.r = ring.one();
                                s.s = s.rule == EtRule::et1 ? ring.canonical(ring.add(c, ring.neg(ring.one()))) : c;
                            }
                        }
                        try {
                            Term after = apply_et(t, s, ring);
                            ++applied;
                            CHECK(expand(after, ring) == before);
                        } catch (const RedexMismatch&) {
                        }
                    }
        }
        CHECK(applied > 10000);
    }
}

TEST_CASE("normalization: carrier law, canonical shape, replay, idempotence") {
    for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::modular(6), Ring::rationals()}) {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 250; ++i) {
            Term t = random_ring_term(ring, rng);
            auto n = normalize_to_standard(t, ring);
            CHECK(dense(n.standard.carrier) == expand(t, ring));
            CHECK(n.standard.term == standard_term_of(n.standard.carrier));
            CHECK(carrier_of(n.standard.term, ring) == n.standard.carrier);
            CHECK(n.certificate.source == t);
            CHECK(n.certificate.target == n.standard.term);
            CHECK(verify_certificate(n.certificate).ok);
            auto again = normalize_to_standard(n.standard.term, ring);
            CHECK(again.standard.term == n.standard.term);
        }
    }
}

TEST_CASE("standard terms and monomials") {
    Ring Z = Ring::integers();
    CHECK(serialize(standard_monomial(ExponentVector::infinite({2, 0, 1}))) == "(x1·(x1·x3))");
    CHECK(serialize(standard_monomial(ExponentVector::infinite({}))) == "1");
    CHECK(monomial_type(R("((x3·x1)·x1)")) == ExponentVector::infinite({2, 0, 1}));
    CHECK_FALSE(monomial_type(R("(x1+x2)")).has_value());
    // equal types give equal standard forms whatever the bracketing
    CHECK(normalize_to_standard(R("((x3·x1)·x1)"), Z).standard.term ==
          normalize_to_standard(R("(x1·(x3·x1))"), Z).standard.term);
    CHECK(serialize(standard_term_of(psi(R("((x7+c{1})·x3)"), Z))) == "((c{1}·x3)+(c{1}·(x3·x7)))");
    CHECK(serialize(standard_term_of(StandardPolynomial(Z))) == "0");
    CHECK_FALSE(carrier_of(R("((c{1}·x1)+(c{2}·x1))"), Z).has_value());
    CHECK_FALSE(carrier_of(R("(c{0}·x1)"), Z).has_value());
}

TEST_CASE("f-equivalence matches s-equivalence") {
    for (const Ring& ring : {Ring::integers(), Ring::modular(2), Ring::modular(6)}) {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 200; ++i) {
            auto [t, u] = random_equivalent_ring_pair(ring, rng, 6);
            if (i % 3 == 0) u = random_ring_term(ring, rng);
            auto c = f_equivalence_certificate(t, u, ring);
            CHECK(c.has_value() == (expand(t, ring) == expand(u, ring)));
            if (c) {
                CHECK(c->source == t);
                CHECK(c->target == u);
                CHECK(verify_certificate(*c).ok);
            }
        }
    }
    Ring Z2 = Ring::modular(2);
    CHECK_FALSE(f_equivalence_certificate(R("((x1·x1)+x1)", Z2), R("0", Z2), Z2).has_value());
    CHECK(f_equivalence_certificate(R("((x7+c{1})·x3)"), R("((x3·x7)+x3)"), Ring::integers()).has_value());
}

TEST_CASE("reaching 0 from a non-constant term uses ET10") {
    Ring Z6 = Ring::modular(6);
    for (const char* w : {"(c{0}·x1)", "((c{2}·x1)·(c{3}·x2))", "(x1+(c{5}·x1))"}) {
        auto c = f_equivalence_certificate(R(w, Z6), ring_zero(), Z6);
        REQUIRE(c.has_value());
        CHECK(std::any_of(c->steps.begin(), c->steps.end(), [](const EtStep& s) { return s.rule == EtRule::et10; }));
    }
}

TEST_CASE("substitution keeps equivalence") {
    Ring Z = Ring::integers();
    std::mt19937_64 rng(47);
    for (int i = 0; i < 150; ++i) {
        auto [t, t2] = random_equivalent_ring_pair(Z, rng, 5, TermShape{4, 3, 8});
        auto [u, u2] = random_equivalent_ring_pair(Z, rng, 5, TermShape{3, 3, 5});
        CHECK(s_equivalent(substitute_var(t, Variable(1), u), substitute_var(t2, Variable(1), u2), Z));
    }
    // certificate composition on a small case
    auto a = f_equivalence_certificate(R("(x1+x2)"), R("(x2+x1)"), Z);
    auto b = f_equivalence_certificate(R("(x2+x1)"), R("((0+x2)+x1)"), Z);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(verify_certificate(compose(*a, *b)).ok);
    CHECK_THROWS_AS(compose(*b, *b), PreconditionViolated);
}

TEST_CASE("additive monomial count") {
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(mpz_class(std::to_string(count_additive_monomials(n))) == oracle::additive_monomial_formula(n));
    CHECK(count_additive_monomials(5) == 1680);
}
