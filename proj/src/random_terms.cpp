#include "termalg/random_terms.hpp"

namespace termalg {

std::vector<Scalar> constant_pool(const Ring& ring) {
    std::vector<Scalar> out;
    switch (ring.kind()) {
    case Ring::Kind::integers:
        for (int v = -3; v <= 4; ++v) out.emplace_back(v);
        break;
    case Ring::Kind::modular:
        for (std::uint64_t v = 0; v < std::min<std::uint64_t>(ring.modulus(), 8); ++v)
            out.emplace_back(mpz_class(std::to_string(v)));
        break;
    case Ring::Kind::rationals:
        for (const char* s : {"0", "1", "-1", "2", "-2", "1/2", "-1/3", "3/4"})
            out.push_back(scalar_from_string(s));
        break;
    }
    return out;
}

namespace {

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
    return v[rng() % v.size()];
}

Term ring_leaf(const Ring& ring, const std::vector<Scalar>& pool, std::mt19937_64& rng, unsigned vars) {
    unsigned r = rng() % 20;
    if (r < 11) return Term::variable(1 + static_cast<std::uint32_t>(rng() % vars));
    if (r < 13) return ring_zero();
    if (r < 15) return ring_one();
    return ring_literal(ring, pick(pool, rng));
}

Term ring_gen(const Ring& ring, const std::vector<Scalar>& pool, std::mt19937_64& rng, unsigned depth,
              unsigned leaves, unsigned vars) {
    if (depth == 0 || leaves <= 1 || rng() % 4 == 0)
        return ring_leaf(ring, pool, rng, vars);
    unsigned k = 1 + static_cast<unsigned>(rng() % (leaves - 1));
    Term a = ring_gen(ring, pool, rng, depth - 1, k, vars);
    Term b = ring_gen(ring, pool, rng, depth - 1, leaves - k, vars);
    return rng() & 1 ? plus(std::move(a), std::move(b)) : times(std::move(a), std::move(b));
}

Term bool_leaf(std::mt19937_64& rng, unsigned vars) {
    unsigned r = rng() % 10;
    if (r < 8) return Term::variable(1 + static_cast<std::uint32_t>(rng() % vars));
    return r == 8 ? bool_zero() : bool_one();
}

Term bool_gen(std::mt19937_64& rng, unsigned depth, unsigned leaves, unsigned vars) {
    if (depth == 0 || rng() % 5 == 0)
        return bool_leaf(rng, vars);
    if (leaves <= 1 || rng() % 4 == 0)
        return lnot(bool_gen(rng, depth - 1, leaves, vars));
    unsigned k = 1 + static_cast<unsigned>(rng() % (leaves - 1));
    Term a = bool_gen(rng, depth - 1, k, vars);
    Term b = bool_gen(rng, depth - 1, leaves - k, vars);
    return rng() & 1 ? lor(std::move(a), std::move(b)) : land(std::move(a), std::move(b));
}

} // namespace

Term random_ring_term(const Ring& ring, std::mt19937_64& rng, const TermShape& shape) {
    return ring_gen(ring, constant_pool(ring), rng, shape.max_depth, shape.leaf_budget, std::max(1u, shape.max_vars));
}

Term random_bool_term(std::mt19937_64& rng, const TermShape& shape) {
    return bool_gen(rng, shape.max_depth, shape.leaf_budget, std::max(1u, shape.max_vars));
}

std::optional<EtStep> random_et_step(const Term& t, const Ring& ring, std::mt19937_64& rng, unsigned tries) {
    const auto ps = positions(t);
    const auto pool = constant_pool(ring);
    for (unsigned i = 0; i < tries; ++i) {
        EtStep step{static_cast<EtRule>(rng() % 12), pick(ps, rng), rng() & 1 ? Direction::forward : Direction::reverse,
                    {}, {}, {}};
        const Term v = subterm_at(t, step.pos);
        if (step.dir == Direction::reverse) {
            if ((step.rule == EtRule::et1 || step.rule == EtRule::et2) && is_literal(v) &&
                ring.is_canonical_literal(v.symbol())) {
                const Scalar c = Ring::literal_value(v.symbol());
                if (step.rule == EtRule::et1) {
                    step.r = pick(pool, rng);
                    step.s = ring.canonical(ring.add(c, ring.neg(*step.r)));
                } else if (ring.kind() == Ring::Kind::rationals && c != 0 && rng() & 1) {
                    Scalar r = pick(pool, rng);
                    if (r == 0) r = 1;
                    step.r = r;
                    step.s = Scalar(c / r);
                } else if (rng() & 1) {
                    step.r = ring.one();
                    step.s = c;
                } else {
                    step.r = c;
                    step.s = ring.one();
                }
            } else if (step.rule == EtRule::et10) {
                step.u = random_ring_term(ring, rng, TermShape{2, 3, 3});
            }
        }
        try {
            EtStep rec;
            apply_et(t, step, ring, &rec);
            return rec;
        } catch (const RedexMismatch&) {
        }
    }
    return std::nullopt;
}

std::optional<BtStep> random_bt_step(const Term& t, std::mt19937_64& rng, const TermShape& shape, unsigned tries) {
    const auto ps = positions(t);
    for (unsigned i = 0; i < tries; ++i) {
        BtStep step{static_cast<BtRule>(1 + rng() % 19), pick(ps, rng),
                    rng() & 1 ? Direction::forward : Direction::reverse, {}};
        const auto r = step.rule;
        const bool erasing = r == BtRule::bt1 || r == BtRule::bt4 || r == BtRule::bt5 || r == BtRule::bt6 ||
                             r == BtRule::bt15 || r == BtRule::bt16;
        if (step.dir == Direction::reverse && erasing)
            step.u = random_bool_term(rng, TermShape{2, shape.max_vars, 3});
        try {
            BtStep rec;
            apply_bt(t, step, &rec);
            return rec;
        } catch (const RedexMismatch&) {
        }
    }
    return std::nullopt;
}

std::pair<Term, Term> random_equivalent_ring_pair(const Ring& ring, std::mt19937_64& rng, unsigned max_steps,
                                                  const TermShape& shape) {
    Term t = random_ring_term(ring, rng, shape);
    Term u = t;
    const unsigned steps = 1 + static_cast<unsigned>(rng() % std::max(1u, max_steps));
    for (unsigned i = 0; i < steps; ++i)
        if (auto s = random_et_step(u, ring, rng))
            u = apply_et(u, *s, ring);
    return {t, u};
}

} // namespace termalg
