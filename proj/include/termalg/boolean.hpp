#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termalg/rewrite.hpp"
#include "termalg/term.hpp"

namespace termalg {

inline constexpr std::string_view kOr = "∨";
inline constexpr std::string_view kAnd = "∧";
inline constexpr std::string_view kNot = "¬";

// `∨`/`|`, `∧`/`&`, `¬`/`!`, `0`, `1`.
const AritySignature& bool_signature();
Term parse_bool_term(std::string_view word);
// Throws PreconditionViolated unless t is built from the Boolean symbols.
void check_bool_term(const Term& t);

Term bool_zero();
Term bool_one();
Term lor(Term a, Term b);
Term land(Term a, Term b);
Term lnot(Term a);
// x_i or ¬(x_i)
bool is_bool_literal(const Term& t) noexcept;

template <class T>
struct BooleanAlgebraSpec {
    std::string name;
    std::function<T(const T&, const T&)> join;
    std::function<T(const T&, const T&)> meet;
    std::function<T(const T&)> complement;
    T zero;
    T one;
    std::function<T(std::mt19937_64&)> sample;
};

BooleanAlgebraSpec<bool> two_element_algebra();
// Subsets of a k-element set as bit masks, k <= 64.
BooleanAlgebraSpec<std::uint64_t> powerset_algebra(unsigned k);

template <class T>
T bool_eval(const Term& t, const BooleanAlgebraSpec<T>& alg, std::span<const T> args) {
    Interpretation<T> in{
        .constant =
            [&](const std::string& s) -> T {
                if (s == "0") return alg.zero;
                if (s == "1") return alg.one;
                throw PreconditionViolated("'" + s + "' is not a Boolean constant");
            },
        .operation =
            [&](const std::string& s, std::span<const T> xs) -> T {
                if (s == kOr) return alg.join(xs[0], xs[1]);
                if (s == kAnd) return alg.meet(xs[0], xs[1]);
                if (s == kNot) return alg.complement(xs[0]);
                throw PreconditionViolated("'" + s + "' is not a Boolean operation");
            },
    };
    return evaluate(t, in, args);
}

// Checks the defining identities (neutrals, complements, commutativity,
// associativity, idempotence, both distributive laws, absorption) on random
// triples; returns the name of the first violated identity, if any.
template <class T>
std::optional<std::string> boolean_axiom_check(const BooleanAlgebraSpec<T>& a, std::size_t samples,
                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        T x = a.sample(rng), y = a.sample(rng), z = a.sample(rng);
        auto J = a.join;
        auto M = a.meet;
        if (J(x, a.zero) != x || M(x, a.one) != x) return "neutral elements";
        if (J(x, a.complement(x)) != a.one || M(x, a.complement(x)) != a.zero) return "complements";
        if (J(x, y) != J(y, x) || M(x, y) != M(y, x)) return "commutativity";
        if (J(x, J(y, z)) != J(J(x, y), z) || M(x, M(y, z)) != M(M(x, y), z)) return "associativity";
        if (J(x, x) != x || M(x, x) != x) return "idempotence";
        if (M(x, J(y, z)) != J(M(x, y), M(x, z)) || J(x, M(y, z)) != M(J(x, y), J(x, z))) return "distributivity";
        if (J(x, M(x, y)) != x || M(x, J(x, y)) != x) return "absorption";
    }
    return std::nullopt;
}

// Truth table over {0,1}^n, bit a of the result is the value at the
// assignment whose bit i-1 gives x_i. n <= 20.
std::vector<bool> truth_table(const Term& t, unsigned n);

// ---- Boolean transformations ----

enum class BtRule { bt1 = 1, bt2, bt3, bt4, bt5, bt6, bt7, bt8, bt9, bt10,
                    bt11, bt12, bt13, bt14, bt15, bt16, bt17, bt18, bt19 };

std::string_view to_string(BtRule r) noexcept;
BtRule bt_rule_from_string(std::string_view s);

// `u` is the term that an erasing rule drops: BT1, BT4, BT5, BT6 (u) and
// BT15, BT16 (u'). Forward steps record it, reverse steps need it.
struct BtStep {
    BtRule rule;
    Position pos;
    Direction dir = Direction::forward;
    std::optional<Term> u;
};

struct BoolCertificate {
    Term source;
    Term target;
    std::vector<BtStep> steps;
};

Term apply_bt(const Term& t, const BtStep& step, BtStep* record = nullptr);
ReplayResult verify_certificate(const BoolCertificate& c);
BoolCertificate reversed(const BoolCertificate& c);

// ---- monomials and DNF ----

// Conjunction of one literal per variable of `support` (sorted, distinct);
// neg[i] is the type entry of support[i].
struct WedgeMonomial {
    std::vector<std::uint32_t> support;
    std::vector<bool> neg;

    // Right-nested conjunction in increasing variable order; 1 for empty support.
    Term to_term() const;
    friend bool operator==(const WedgeMonomial&, const WedgeMonomial&) = default;
};

// Recognizes any conjunction of literals over distinct variables (any bracketing
// and order); nullopt otherwise.
std::optional<WedgeMonomial> wedge_monomial_of(const Term& t);

// Disjunction of monomials over one common support with pairwise distinct
// types, kept sorted by type (first entry most significant).
class DnfTerm {
public:
    using Type = std::vector<bool>;

    // n-standard: support [n].
    explicit DnfTerm(unsigned n);
    DnfTerm(std::vector<std::uint32_t> support, std::vector<Type> types);

    const std::vector<std::uint32_t>& support() const noexcept { return support_; }
    std::size_t width() const noexcept { return support_.size(); }
    const std::vector<Type>& types() const noexcept { return types_; }
    std::size_t size() const noexcept { return types_.size(); }
    bool is_zero() const noexcept { return types_.empty(); }

    WedgeMonomial monomial(std::size_t i) const;
    // Right-nested disjunction of monomial terms; 0 when empty.
    Term to_term() const;

    friend bool operator==(const DnfTerm&, const DnfTerm&) = default;

private:
    std::vector<std::uint32_t> support_;
    std::vector<Type> types_;
};

// Reads an n-standard DNF term in any arrangement; nullopt if t is not one.
std::optional<DnfTerm> dnf_of_term(const Term& t, unsigned n);

struct DnfResult {
    DnfTerm dnf;
    BoolCertificate certificate;
};

struct DnfOptions {
    bool check_descent = true;
};

// Requires n >= 1 and every variable of t in x1..xn.
DnfResult to_dnf(const Term& t, unsigned n, DnfOptions opt = {});

// DNF of (p ∧ q). Equal supports intersect the type sets; disjoint supports
// give all combined types over the union. Partially overlapping supports raise
// WidthMismatch.
DnfTerm wedge_of_dnfs(const DnfTerm& p, const DnfTerm& q);

Term shift_variables(const Term& t, std::uint32_t offset);

} // namespace termalg
