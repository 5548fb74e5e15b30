#include "termalg/selftest.hpp"

#include <functional>

#include "termalg/lll.hpp"
#include "termalg/random_terms.hpp"

namespace termalg {

namespace {

SelftestLine run(const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string fail = body();
        return {name, fail.empty(), fail};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::string ring_axioms(std::uint64_t seed) {
    for (const Ring& R : {Ring::integers(), Ring::modular(6), Ring::rationals()}) {
        auto a = ring_axiom_suite(R.spec(), 200, seed);
        if (!a.ok()) return R.name() + ": " + a.failures.front().axiom;
        auto p = ring_axiom_suite(polynomial_ring_spec(R), 60, seed);
        if (!p.ok()) return R.name() + "[x]: " + p.failures.front().axiom;
    }
    return {};
}

std::string round_trip(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Ring Z = Ring::integers();
    for (int i = 0; i < 300; ++i) {
        Term t = random_ring_term(Z, rng);
        if (parse_ring_term(serialize(t), Z) != t) return "ring term " + serialize(t);
        Term b = random_bool_term(rng);
        if (parse_bool_term(serialize(b)) != b) return "bool term " + serialize(b);
    }
    return {};
}

std::string ring_equivalence(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (const Ring& R : {Ring::integers(), Ring::modular(2), Ring::modular(6)}) {
        for (int i = 0; i < 100; ++i) {
            auto [t, u] = random_equivalent_ring_pair(R, rng);
            if (i % 2) u = random_ring_term(R, rng);
            auto cert = f_equivalence_certificate(t, u, R);
            if (cert.has_value() != s_equivalent(t, u, R))
                return "verdicts disagree on " + serialize(t) + " / " + serialize(u);
            if (cert && !verify_certificate(*cert).ok)
                return "certificate does not replay for " + serialize(t);
            auto n = normalize_to_standard(t, R);
            if (!(n.standard.carrier == psi(t, R))) return "carrier differs for " + serialize(t);
        }
    }
    return {};
}

std::string dnf(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
        Term t = random_bool_term(rng, TermShape{5, 4, 10});
        auto r = to_dnf(t, 4);
        if (truth_table(r.dnf.to_term(), 4) != truth_table(t, 4)) return "truth table differs for " + serialize(t);
        if (!verify_certificate(r.certificate).ok) return "certificate does not replay for " + serialize(t);
    }
    return {};
}

std::string bit(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto random_space = [&](std::size_t n) {
        std::vector<Rational> w;
        Rational total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w.emplace_back(1 + static_cast<long>(rng() % 5));
            total += w.back();
        }
        for (auto& x : w) x /= total;
        return Fps({}, w);
    };
    auto random_event = [&](const Fps& s) {
        Event e(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (rng() & 1) e.insert(i);
        return e;
    };
    for (int i = 0; i < 40; ++i) {
        Fps l = random_space(4), r = random_space(4);
        Fps m = product_space(l, r);
        std::vector<Event> as, bs;
        for (int k = 0; k < 2; ++k) {
            as.push_back(lift_left(random_event(l), r));
            bs.push_back(lift_right(random_event(r), l));
        }
        Term t = random_bool_term(rng, TermShape{3, 2, 5});
        Term u = random_bool_term(rng, TermShape{3, 2, 5});
        auto rep = bit_check(m, t, u, as, bs);
        if (!rep.all_passed()) return "failed on " + serialize(t) + " / " + serialize(u);
    }
    return {};
}

std::string lll() {
    Hypergraph h(6, {{0, 1, 2}, {3, 4, 5}});
    auto s = ColoringSpace::of(h);
    Event a = event_monochromatic(s, h, 0), b = event_monochromatic(s, h, 1);
    if (pr(s.fps(), a) != Rational(1, 4)) return "Pr(A_f) is not 1/4";
    if (pr(s.fps(), a & b) != Rational(1, 16)) return "Pr(A_f ∧ A_g) is not 1/16";
    auto rep = verify_lll_hypothesis(h);
    if (!rep.hypothesis_holds) return "hypothesis check failed";
    if (!verify_block_independence(s, {0, 1}, {3, 4}).independent) return "block independence failed";
    return {};
}

} // namespace

std::vector<SelftestLine> run_selftest(std::uint64_t seed) {
    return {
        run("ring axioms", [&] { return ring_axioms(seed); }),
        run("parse round trip", [&] { return round_trip(seed); }),
        run("ring equivalence", [&] { return ring_equivalence(seed); }),
        run("dnf", [&] { return dnf(seed); }),
        run("independence theorem", [&] { return bit(seed); }),
        run("coloring space", [] { return lll(); }),
    };
}

} // namespace termalg
