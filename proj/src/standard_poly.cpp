#include "termalg/standard_poly.hpp"

#include <algorithm>
#include <numeric>

namespace termalg {

ExponentVector::ExponentVector(std::vector<std::uint32_t> entries, Flavor flavor)
    : e_(std::move(entries)), flavor_(flavor) {
    if (flavor_ == Flavor::infinite)
        while (!e_.empty() && e_.back() == 0)
            e_.pop_back();
}

std::uint64_t ExponentVector::total_degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

bool GradedOrder::operator()(const ExponentVector& a, const ExponentVector& b) const noexcept {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i])
            return a[i] > b[i];
    return false;
}

ExponentVector exp_add(const ExponentVector& k, const ExponentVector& l) {
    if (k.flavor() != l.flavor())
        throw FlavorMismatch("exponent vectors of different flavors");
    if (k.flavor() == Flavor::fixed && k.size() != l.size())
        throw FlavorMismatch("fixed-width exponent vectors of different widths");
    std::vector<std::uint32_t> out(std::max(k.size(), l.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k[i] + l[i];
    return ExponentVector(std::move(out), k.flavor());
}

StandardPolynomial::StandardPolynomial(Ring ring, Flavor flavor, std::size_t width)
    : ring_(std::move(ring)), flavor_(flavor), width_(flavor == Flavor::fixed ? width : 0) {}

void StandardPolynomial::check_key(const ExponentVector& k) const {
    if (k.flavor() != flavor_ || (flavor_ == Flavor::fixed && k.size() != width_))
        throw FlavorMismatch("exponent vector does not fit the polynomial");
}

Scalar StandardPolynomial::coefficient(const ExponentVector& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? ring_.zero() : it->second;
}

void StandardPolynomial::accumulate(const ExponentVector& k, const Scalar& c) {
    check_key(k);
    Scalar v = ring_.canonical(c);
    if (ring_.is_zero(v))
        return;
    auto [it, fresh] = coeffs_.try_emplace(k, v);
    if (!fresh) {
        it->second = ring_.add(it->second, v);
        if (ring_.is_zero(it->second))
            coeffs_.erase(it);
    }
}

bool operator==(const StandardPolynomial& a, const StandardPolynomial& b) {
    return a.ring_ == b.ring_ && a.flavor_ == b.flavor_ && a.width_ == b.width_ && a.coeffs_ == b.coeffs_;
}

namespace {

void check_compatible(const StandardPolynomial& p, const StandardPolynomial& q) {
    if (!(p.ring() == q.ring()))
        throw RingMismatch("polynomials over " + p.ring().name() + " and " + q.ring().name());
    if (p.flavor() != q.flavor() || p.width() != q.width())
        throw FlavorMismatch("polynomials of different flavors");
}

const char* const kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* const kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits_with(std::uint64_t v, const char* const* table) {
    std::string s, out;
    s = std::to_string(v);
    for (char c : s)
        out += table[c - '0'];
    return out;
}

} // namespace

StandardPolynomial poly_add(const StandardPolynomial& p, const StandardPolynomial& q) {
    check_compatible(p, q);
    StandardPolynomial r = p;
    for (const auto& [k, c] : q.terms())
        r.accumulate(k, c);
    return r;
}

StandardPolynomial poly_mul(const StandardPolynomial& p, const StandardPolynomial& q) {
    check_compatible(p, q);
    StandardPolynomial r(p.ring(), p.flavor(), p.width());
    const Ring& R = p.ring();
    for (const auto& [k, a] : p.terms())
        for (const auto& [l, b] : q.terms())
            r.accumulate(exp_add(k, l), R.mul(a, b));
    return r;
}

StandardPolynomial poly_neg(const StandardPolynomial& p) {
    StandardPolynomial r(p.ring(), p.flavor(), p.width());
    for (const auto& [k, c] : p.terms())
        r.accumulate(k, p.ring().neg(c));
    return r;
}

StandardPolynomial constant_poly(const Ring& ring, const Scalar& r) {
    StandardPolynomial p(ring);
    p.accumulate(ExponentVector::infinite({}), r);
    return p;
}

StandardPolynomial one_poly(const Ring& ring) { return constant_poly(ring, ring.one()); }

StandardPolynomial variable_poly(const Ring& ring, std::uint32_t i) {
    if (i == 0)
        throw PreconditionViolated("variable index must be >= 1");
    std::vector<std::uint32_t> e(i, 0);
    e.back() = 1;
    StandardPolynomial p(ring);
    p.accumulate(ExponentVector::infinite(std::move(e)), ring.one());
    return p;
}

StandardPolynomial make_poly(const Ring& ring, const std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>& terms,
                             Flavor flavor, std::size_t width) {
    StandardPolynomial p(ring, flavor, width);
    for (const auto& [e, c] : terms)
        p.accumulate(ExponentVector(e, flavor), c);
    return p;
}

StandardPolynomial to_infinite(const StandardPolynomial& p) {
    if (p.flavor() == Flavor::infinite)
        return p;
    StandardPolynomial r(p.ring());
    for (const auto& [k, c] : p.terms())
        r.accumulate(ExponentVector::infinite(k.entries()), c);
    return r;
}

std::string render(const StandardPolynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        Scalar mag = c;
        bool negative = c < 0;
        if (negative) mag = -c;
        if (first)
            out += negative ? "−" : "";
        else
            out += negative ? " − " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            mono += "x" + digits_with(i + 1, kSub);
            if (k[i] > 1) mono += digits_with(k[i], kSup);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else if (mag.get_den() == 1)
            out += mag.get_str() + mono;
        else
            out += "(" + mag.get_str() + ")" + mono;
    }
    return out;
}

StandardPolynomial random_poly(const Ring& ring, std::mt19937_64& rng, const PolySampler& shape) {
    StandardPolynomial p(ring);
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, shape.max_terms)(rng);
    std::uniform_int_distribution<std::uint32_t> ex(0, shape.max_exp);
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<std::uint32_t> e(shape.max_var);
        for (auto& v : e) v = ex(rng);
        Scalar c = ring.spec().sample(rng);
        if (ring.kind() != Ring::Kind::modular) {
            // keep coefficients small so products stay readable in reports
            long v = std::uniform_int_distribution<long>(-5, 5)(rng);
            c = ring.kind() == Ring::Kind::rationals ? Scalar(v, std::uniform_int_distribution<long>(1, 4)(rng)) : Scalar(v);
            c.canonicalize();
            c.canonicalize();
        }
        p.accumulate(ExponentVector::infinite(std::move(e)), c);
    }
    return p;
}

RingSpec<StandardPolynomial> polynomial_ring_spec(const Ring& ring, PolySampler shape) {
    RingSpec<StandardPolynomial> s{
        .name = ring.name() + "[x1,x2,...]",
        .add = [](const StandardPolynomial& a, const StandardPolynomial& b) { return poly_add(a, b); },
        .mul = [](const StandardPolynomial& a, const StandardPolynomial& b) { return poly_mul(a, b); },
        .neg = [](const StandardPolynomial& a) { return poly_neg(a); },
        .zero = StandardPolynomial(ring),
        .one = one_poly(ring),
        .eq = [](const StandardPolynomial& a, const StandardPolynomial& b) { return a == b; },
        .sample = [ring, shape](std::mt19937_64& g) { return random_poly(ring, g, shape); },
        .show = [](const StandardPolynomial& a) { return render(a); },
    };
    return s;
}

} // namespace termalg
