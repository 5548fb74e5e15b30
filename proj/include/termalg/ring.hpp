#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "termalg/errors.hpp"

namespace termalg {

// Every concrete ring in the library stores its elements as exact rationals;
// Z and Z_m only ever hold integers.
using Scalar = mpq_class;

// A commutative ring with identity as a bundle of operations.
template <class T>
struct RingSpec {
    std::string name;
    std::function<T(const T&, const T&)> add;
    std::function<T(const T&, const T&)> mul;
    std::function<T(const T&)> neg;
    T zero;
    T one;
    std::function<bool(const T&, const T&)> eq;
    std::function<T(std::mt19937_64&)> sample;
    std::function<std::string(const T&)> show;
};

struct AxiomFailure {
    std::string axiom;
    std::string witness;
};

struct AxiomReport {
    std::size_t samples = 0;
    std::vector<AxiomFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

namespace detail {
template <class T>
std::string show_all(const RingSpec<T>& r, std::initializer_list<const T*> xs) {
    std::string s = "(";
    bool first = true;
    for (const T* x : xs) {
        if (!first) s += ", ";
        first = false;
        s += r.show ? r.show(*x) : "?";
    }
    return s + ")";
}
} // namespace detail

// Checks the eight axiom families (two associativities, two commutativities,
// both neutral elements, additive inverses, distributivity) on random triples.
// Only the first counterexample per family is recorded. Distributivity is
// checked on `distributive_weight` triples per sample.
template <class T>
AxiomReport ring_axiom_suite(const RingSpec<T>& r, std::size_t samples, std::uint64_t seed,
                             std::size_t distributive_weight = 1) {
    AxiomReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    std::vector<std::string> seen;
    auto fail = [&](const char* axiom, std::string witness) {
        for (const auto& s : seen)
            if (s == axiom) return;
        seen.emplace_back(axiom);
        rep.failures.push_back({axiom, std::move(witness)});
    };
    if (r.eq(r.zero, r.one))
        fail("zero != one", "");
    for (std::size_t i = 0; i < samples; ++i) {
        T a = r.sample(rng), b = r.sample(rng), c = r.sample(rng);
        auto w = [&] { return detail::show_all(r, {&a, &b, &c}); };
        if (!r.eq(r.add(a, r.add(b, c)), r.add(r.add(a, b), c))) fail("add associative", w());
        if (!r.eq(r.mul(a, r.mul(b, c)), r.mul(r.mul(a, b), c))) fail("mul associative", w());
        if (!r.eq(r.add(a, b), r.add(b, a))) fail("add commutative", w());
        if (!r.eq(r.mul(a, b), r.mul(b, a))) fail("mul commutative", w());
        if (!r.eq(r.add(a, r.zero), a)) fail("additive neutral", w());
        if (!r.eq(r.mul(a, r.one), a)) fail("multiplicative neutral", w());
        if (!r.eq(r.add(a, r.neg(a)), r.zero)) fail("additive inverse", w());
        if (!r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)))) fail("distributive", w());
        for (std::size_t k = 1; k < distributive_weight; ++k) {
            a = r.sample(rng), b = r.sample(rng), c = r.sample(rng);
            if (!r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)))) fail("distributive", w());
        }
    }
    return rep;
}

template <class T>
AxiomReport mul_by_zero_law(const RingSpec<T>& r, std::size_t samples, std::uint64_t seed) {
    AxiomReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        T a = r.sample(rng);
        if (!r.eq(r.mul(a, r.zero), r.zero)) {
            rep.failures.push_back({"x*0 = 0", detail::show_all(r, {&a})});
            break;
        }
    }
    return rep;
}

// The coefficient rings the tools work over: Z, Z_m (m >= 2) and Q.
class Ring {
public:
    enum class Kind { integers, modular, rationals };

    static Ring integers();
    static Ring modular(std::uint64_t m);
    static Ring rationals();
    // "Z", "Zm:<m>" (also "Z<m>") or "Q".
    static Ring from_name(std::string_view name);

    Kind kind() const noexcept { return impl_->kind; }
    std::uint64_t modulus() const noexcept { return impl_->modulus; }
    const std::string& name() const noexcept { return impl_->spec.name; }
    const RingSpec<Scalar>& spec() const noexcept { return impl_->spec; }

    Scalar add(const Scalar& a, const Scalar& b) const { return impl_->spec.add(a, b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return impl_->spec.mul(a, b); }
    Scalar neg(const Scalar& a) const { return impl_->spec.neg(a); }
    const Scalar& zero() const noexcept { return impl_->spec.zero; }
    const Scalar& one() const noexcept { return impl_->spec.one; }
    bool is_zero(const Scalar& a) const { return a == 0; }

    // Maps a value into its canonical representative; throws RingMismatch for
    // non-integers in Z or Z_m.
    Scalar canonical(const Scalar& v) const;
    bool contains(const Scalar& v) const;

    // Literal spelling c{...} of a canonical element.
    std::string literal(const Scalar& v) const;
    // Value of a literal's spelling, not yet reduced.
    static Scalar literal_value(std::string_view symbol);
    // Whether the spelling is exactly the canonical literal of its value.
    bool is_canonical_literal(std::string_view symbol) const;
    std::string show(const Scalar& v) const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept {
        return a.kind() == b.kind() && a.modulus() == b.modulus();
    }

private:
    struct Impl {
        Kind kind;
        std::uint64_t modulus = 0;
        RingSpec<Scalar> spec;
    };
    explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

std::string scalar_to_string(const Scalar& v);
// Decimal "a" or "a/b"; throws PreconditionViolated on malformed input.
Scalar scalar_from_string(std::string_view s);

} // namespace termalg
