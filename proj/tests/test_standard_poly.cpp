#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "termalg/standard_poly.hpp"

using namespace termalg;

namespace {

// Convolution straight from the definition: for every key m of the result
// range, sum p(k)·q(l) over all k + l = m.
oracle::Dense naive_mul(const Ring& R, const StandardPolynomial& p, const StandardPolynomial& q, unsigned nvars,
                        unsigned maxexp) {
    auto dp = oracle::dense_of(p, nvars), dq = oracle::dense_of(q, nvars);
    oracle::Dense out;
    std::vector<unsigned> m(nvars, 0);
    while (true) {
        mpq_class s = 0;
        for (const auto& [k, c] : dp) {
            std::vector<unsigned> l(nvars);
            bool ok = true;
            for (unsigned i = 0; i < nvars && ok; ++i) {
                if (k[i] > m[i]) ok = false;
                else l[i] = m[i] - k[i];
            }
            if (!ok) continue;
            auto it = dq.find(l);
            if (it != dq.end()) s += c * it->second;
        }
        s = oracle::reduce(R, s);
        if (s != 0) out[m] = s;
        unsigned i = 0;
        while (i < nvars && ++m[i] > 2 * maxexp) m[i++] = 0;
        if (i == nvars) break;
    }
    return out;
}

} // namespace

TEST_CASE("exponent vectors") {
    auto e = ExponentVector::infinite({1, 0, 2, 0, 0});
    CHECK(e.size() == 3);
    CHECK(e[1] == 0);
    CHECK(e[7] == 0);
    CHECK(e.total_degree() == 3);
    CHECK(ExponentVector::infinite({0, 0}).is_zero());
    auto f = ExponentVector::fixed({1, 0, 0});
    CHECK(f.size() == 3);
    CHECK_THROWS_AS(exp_add(e, f), FlavorMismatch);
    CHECK(exp_add(e, ExponentVector::infinite({0, 1})) == ExponentVector::infinite({1, 1, 2}));
}

TEST_CASE("graded order puts lower degree first and x1 before x2") {
    GradedOrder lt;
    CHECK(lt(ExponentVector::infinite({}), ExponentVector::infinite({0, 1})));
    CHECK(lt(ExponentVector::infinite({1}), ExponentVector::infinite({0, 1})));
    CHECK(lt(ExponentVector::infinite({0, 1}), ExponentVector::infinite({2})));
    CHECK(lt(ExponentVector::infinite({2}), ExponentVector::infinite({1, 1})));
}

TEST_CASE("rendering") {
    Ring Z = Ring::integers();
    auto p = make_poly(Z, {{{}, Scalar(3)}, {{0, 2}, Scalar(-1)}, {{1, 0, 3}, Scalar(1)}});
    CHECK(render(p) == "3 − x₂² + x₁x₃³");
    CHECK(render(StandardPolynomial(Z)) == "0");
}

TEST_CASE("no zero coefficient is ever stored") {
    Ring Z6 = Ring::modular(6);
    auto two = constant_poly(Z6, Scalar(2)), three = constant_poly(Z6, Scalar(3));
    CHECK(poly_mul(two, three).is_zero());
    auto x = variable_poly(Z6, 1);
    CHECK(poly_add(x, poly_neg(x)).is_zero());
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        auto p = random_poly(Z6, rng), q = random_poly(Z6, rng);
        for (const auto& r : {poly_add(p, q), poly_mul(p, q), poly_neg(p)})
            for (const auto& [k, c] : r.terms()) CHECK(c != 0);
    }
}

TEST_CASE("multiplication agrees with the convolution formula") {
    PolySampler shape{3, 3, 5};
    for (const Ring& R : {Ring::integers(), Ring::modular(6), Ring::rationals()}) {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 100; ++i) {
            auto p = random_poly(R, rng, shape), q = random_poly(R, rng, shape);
            auto prod = poly_mul(p, q);
            CHECK(oracle::dense_of(prod, 3) == naive_mul(R, p, q, 3, 3));
            CHECK(prod.support_size() <= p.support_size() * q.support_size());
        }
    }
}

TEST_CASE("flavor bridge commutes with the operations") {
    Ring Z = Ring::integers();
    std::mt19937_64 rng(23);
    auto fixed_random = [&] {
        std::vector<std::pair<std::vector<std::uint32_t>, Scalar>> ts;
        for (int k = 0; k < 4; ++k)
            ts.push_back({{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3), 0},
                          Scalar(static_cast<long>(rng() % 7) - 3)});
        return make_poly(Z, ts, Flavor::fixed, 3);
    };
    for (int i = 0; i < 200; ++i) {
        auto p = fixed_random(), q = fixed_random();
        CHECK(to_infinite(poly_add(p, q)) == poly_add(to_infinite(p), to_infinite(q)));
        CHECK(to_infinite(poly_mul(p, q)) == poly_mul(to_infinite(p), to_infinite(q)));
    }
    CHECK_THROWS_AS(poly_add(fixed_random(), variable_poly(Z, 1)), FlavorMismatch);
}

TEST_CASE("polynomial ring axioms with distributivity at triple weight") {
    for (const Ring& R : {Ring::integers(), Ring::modular(2), Ring::rationals()}) {
        auto spec = polynomial_ring_spec(R);
        CHECK(ring_axiom_suite(spec, 150, 9, 3).ok());
    }
}
