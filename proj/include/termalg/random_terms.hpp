#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "termalg/boolean.hpp"
#include "termalg/ring_terms.hpp"

namespace termalg {

struct TermShape {
    unsigned max_depth = 6;
    unsigned max_vars = 6;
    // leaves per term, at most
    unsigned leaf_budget = 16;
};

// Up to 8 distinct canonical elements of the ring.
std::vector<Scalar> constant_pool(const Ring& ring);

Term random_ring_term(const Ring& ring, std::mt19937_64& rng, const TermShape& shape = {});
Term random_bool_term(std::mt19937_64& rng, const TermShape& shape = {});

// A random step that applies to t, with its bindings filled in. nullopt when
// no redex turned up within `tries` draws.
std::optional<EtStep> random_et_step(const Term& t, const Ring& ring, std::mt19937_64& rng, unsigned tries = 64);
std::optional<BtStep> random_bt_step(const Term& t, std::mt19937_64& rng, const TermShape& shape = {},
                                     unsigned tries = 64);

// t and the end of a random walk of up to `max_steps` ET steps from t.
std::pair<Term, Term> random_equivalent_ring_pair(const Ring& ring, std::mt19937_64& rng, unsigned max_steps = 6,
                                                  const TermShape& shape = {});

} // namespace termalg
