#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "termalg/ring.hpp"

namespace termalg {

enum class Flavor { fixed, infinite };

// Exponent vector. In the infinite flavor the last entry is never zero (the
// constructor strips trailing zeros); in the fixed flavor the length is the
// number of variables n.
class ExponentVector {
public:
    ExponentVector() = default;
    ExponentVector(std::vector<std::uint32_t> entries, Flavor flavor);
    static ExponentVector infinite(std::vector<std::uint32_t> entries) {
        return ExponentVector(std::move(entries), Flavor::infinite);
    }
    static ExponentVector fixed(std::vector<std::uint32_t> entries) {
        return ExponentVector(std::move(entries), Flavor::fixed);
    }

    Flavor flavor() const noexcept { return flavor_; }
    const std::vector<std::uint32_t>& entries() const noexcept { return e_; }
    std::size_t size() const noexcept { return e_.size(); }
    // Zero beyond the stored entries.
    std::uint32_t operator[](std::size_t i) const noexcept { return i < e_.size() ? e_[i] : 0; }
    std::uint64_t total_degree() const noexcept;
    bool is_zero() const noexcept;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::uint32_t> e_;
    Flavor flavor_ = Flavor::infinite;
};

// Graded order: lower total degree first, then the zero-extended vectors in
// descending lexicographic order (so x1 precedes x2).
struct GradedOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const noexcept;
};

ExponentVector exp_add(const ExponentVector& k, const ExponentVector& l);

class StandardPolynomial {
public:
    using Map = std::map<ExponentVector, Scalar, GradedOrder>;

    // Zero polynomial of the given flavor. For the fixed flavor `width` is n.
    explicit StandardPolynomial(Ring ring, Flavor flavor = Flavor::infinite, std::size_t width = 0);

    const Ring& ring() const noexcept { return ring_; }
    Flavor flavor() const noexcept { return flavor_; }
    std::size_t width() const noexcept { return width_; }
    const Map& terms() const noexcept { return coeffs_; }
    std::size_t support_size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Coefficient at k, zero when k is not in the support.
    Scalar coefficient(const ExponentVector& k) const;
    // Adds c into the coefficient at k; drops the key if the result is zero.
    void accumulate(const ExponentVector& k, const Scalar& c);

    friend bool operator==(const StandardPolynomial& a, const StandardPolynomial& b);

private:
    void check_key(const ExponentVector& k) const;

    Ring ring_;
    Flavor flavor_;
    std::size_t width_;
    Map coeffs_;
};

StandardPolynomial poly_add(const StandardPolynomial& p, const StandardPolynomial& q);
StandardPolynomial poly_mul(const StandardPolynomial& p, const StandardPolynomial& q);
StandardPolynomial poly_neg(const StandardPolynomial& p);
StandardPolynomial constant_poly(const Ring& ring, const Scalar& r);
StandardPolynomial one_poly(const Ring& ring);
StandardPolynomial variable_poly(const Ring& ring, std::uint32_t i);
// Builds a polynomial from (exponent, coefficient) pairs, summing duplicates.
StandardPolynomial make_poly(const Ring& ring, const std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>& terms,
                             Flavor flavor = Flavor::infinite, std::size_t width = 0);
// Embeds a fixed-width polynomial into the infinite flavor.
StandardPolynomial to_infinite(const StandardPolynomial& p);

// "3 − x₂² + x₁x₃³"; the zero polynomial renders as "0".
std::string render(const StandardPolynomial& p);

struct PolySampler {
    std::uint32_t max_var = 3;
    std::uint32_t max_exp = 2;
    std::size_t max_terms = 4;
};
StandardPolynomial random_poly(const Ring& ring, std::mt19937_64& rng, const PolySampler& shape = {});

// The polynomial ring over `ring` packaged for the axiom suite.
RingSpec<StandardPolynomial> polynomial_ring_spec(const Ring& ring, PolySampler shape = {});

} // namespace termalg
