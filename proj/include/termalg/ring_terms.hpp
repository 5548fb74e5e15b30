#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termalg/rewrite.hpp"
#include "termalg/ring.hpp"
#include "termalg/standard_poly.hpp"
#include "termalg/term.hpp"

namespace termalg {

inline constexpr std::string_view kPlus = "+";
inline constexpr std::string_view kTimes = "·";

// `+`, `·` (alias `*`), `0`, `1` and the literals c{...}.
const AritySignature& ring_signature();

// Parses a ring term and rewrites every literal to its canonical spelling in
// `ring` (c{7} becomes c{1} in Z6). Non-integer literals outside Q raise
// RingMismatch.
Term parse_ring_term(std::string_view word, const Ring& ring);
// Throws PreconditionViolated unless t is a ring term whose literals are all
// canonical in `ring`.
void check_ring_term(const Term& t, const Ring& ring);

Term ring_zero();
Term ring_one();
Term ring_literal(const Ring& ring, const Scalar& r);
Term plus(Term a, Term b);
Term times(Term a, Term b);
bool is_literal(const Term& t) noexcept;

// An R-algebra: a ring plus the image of R in it.
template <class T>
struct RAlgebra {
    RingSpec<T> ring;
    std::function<T(const Scalar&)> embed;
};

RAlgebra<Scalar> scalar_algebra(const Ring& ring);
RAlgebra<StandardPolynomial> polynomial_algebra(const Ring& ring);

template <class T>
T phi_eval(const Term& t, const RAlgebra<T>& alg, std::span<const T> args) {
    Interpretation<T> in{
        .constant =
            [&](const std::string& s) -> T {
                if (s == "0") return alg.ring.zero;
                if (s == "1") return alg.ring.one;
                return alg.embed(Ring::literal_value(s));
            },
        .operation =
            [&](const std::string& s, std::span<const T> xs) -> T {
                if (s == kPlus) return alg.ring.add(xs[0], xs[1]);
                if (s == kTimes) return alg.ring.mul(xs[0], xs[1]);
                throw PreconditionViolated("'" + s + "' is not a ring operation");
            },
    };
    return evaluate(t, in, args);
}

StandardPolynomial psi(const Term& t, const Ring& ring);
bool s_equivalent(const Term& t, const Term& u, const Ring& ring);

// ---- elementary transformations ----

enum class EtRule { etm1, et0, et1, et2, et3, et4, et5, et6, et7, et8, et9, et10 };

std::string_view to_string(EtRule r) noexcept;
EtRule et_rule_from_string(std::string_view s);

// One link of a certificate. Forward rewrites the left side of the rule into
// the right side. The bindings make erasing rules replayable backwards: ET1 and
// ET2 carry r and s, ET10 carries u.
struct EtStep {
    EtRule rule;
    Position pos;
    Direction dir = Direction::forward;
    std::optional<Scalar> r;
    std::optional<Scalar> s;
    std::optional<Term> u;
};

struct RingCertificate {
    Ring ring;
    Term source;
    Term target;
    std::vector<EtStep> steps;
};

// Applies one step; throws RedexMismatch or InvalidPosition. When `record` is
// given it receives the step with its bindings filled in.
Term apply_et(const Term& t, const EtStep& step, const Ring& ring, EtStep* record = nullptr);
ReplayResult verify_certificate(const RingCertificate& c);
RingCertificate reversed(const RingCertificate& c);
RingCertificate compose(const RingCertificate& a, const RingCertificate& b);

// ---- monomials and standard terms ----

// Right-nested product (x_i1·(x_i2·(…))) with non-decreasing indices; 1 for ∅.
Term standard_monomial(const ExponentVector& type);
// Type of a product of variables (or of 1); nullopt for anything else.
std::optional<ExponentVector> monomial_type(const Term& mu);

struct StandardTerm {
    Term term;
    StandardPolynomial carrier;
};

// Canonical standard term: right-nested sum of (c_r·μ) in graded order.
Term standard_term_of(const StandardPolynomial& p);
// Carrier of any standard term (any arrangement); nullopt if t is not standard.
std::optional<StandardPolynomial> carrier_of(const Term& t, const Ring& ring);

// Polynomial interpretation that strictly decreases on every distribution step:
// atoms weigh 2, [a+b] = [a]+[b]+1, [a·b] = [a]·[b].
mpz_class distribution_weight(const Term& t);

struct NormalizeOptions {
    bool check_descent = true;
};

struct Normalized {
    StandardTerm standard;
    RingCertificate certificate;
};

Normalized normalize_to_standard(const Term& t, const Ring& ring, NormalizeOptions opt = {});

// Certificate t -> u when the terms are s-equivalent, nullopt otherwise.
std::optional<RingCertificate> f_equivalence_certificate(const Term& t, const Term& u, const Ring& ring);

// Number of additive n-monomials, found by enumerating them.
std::uint64_t count_additive_monomials(unsigned n);

} // namespace termalg
