#pragma once

#include <random>

#include "termalg/term.hpp"

namespace oracle {

// a/0, b/0, h/1, g/2, f/3, q/4
inline const termalg::AritySignature& generic_signature() {
    static const termalg::AritySignature sig = [] {
        termalg::AritySignature s;
        s.add("a", 0);
        s.add("b", 0);
        s.add("h", 1);
        s.add("g", 2);
        s.add("f", 3);
        s.add("q", 4);
        return s;
    }();
    return sig;
}

inline termalg::Term random_generic_term(std::mt19937_64& rng, unsigned depth) {
    using termalg::Term;
    unsigned pick = depth == 0 ? rng() % 3 : rng() % 7;
    switch (pick) {
    case 0: return Term::constant("a");
    case 1: return Term::constant("b");
    case 2: return Term::variable(1 + static_cast<std::uint32_t>(rng() % 12));
    case 3: return Term::unary("h", random_generic_term(rng, depth - 1));
    case 4: return Term::binary("g", random_generic_term(rng, depth - 1), random_generic_term(rng, depth - 1));
    default: {
        const unsigned k = pick == 5 ? 3 : 4;
        std::vector<Term> cs;
        for (unsigned i = 0; i < k; ++i) cs.push_back(random_generic_term(rng, depth - 1));
        return Term::nary(k == 3 ? "f" : "q", std::move(cs));
    }
    }
}

} // namespace oracle
