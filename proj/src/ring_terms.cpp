#include "termalg/ring_terms.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace termalg {

const AritySignature& ring_signature() {
    static const AritySignature sig = [] {
        AritySignature s;
        s.add(std::string(kPlus), 2);
        s.add(std::string(kTimes), 2);
        s.add_alias("*", std::string(kTimes));
        s.add("0", 0);
        s.add("1", 0);
        s.set_ring_literals(true);
        return s;
    }();
    return sig;
}

Term ring_zero() { return Term::constant("0"); }
Term ring_one() { return Term::constant("1"); }
Term ring_literal(const Ring& ring, const Scalar& r) { return Term::constant(ring.literal(ring.canonical(r))); }
Term plus(Term a, Term b) { return Term::binary(std::string(kPlus), std::move(a), std::move(b)); }
Term times(Term a, Term b) { return Term::binary(std::string(kTimes), std::move(a), std::move(b)); }

bool is_literal(const Term& t) noexcept { return t.kind() == NodeKind::constant && is_ring_literal(t.symbol()); }

namespace {

Term canonicalize_literals(const Term& t, const Ring& ring) {
    if (is_literal(t)) {
        Term c = ring_literal(ring, Ring::literal_value(t.symbol()));
        return c == t ? t : c;
    }
    if (t.is_atomic())
        return t;
    return Term::binary(t.symbol(), canonicalize_literals(t.left(), ring), canonicalize_literals(t.right(), ring));
}

} // namespace

Term parse_ring_term(std::string_view word, const Ring& ring) {
    return canonicalize_literals(parse(word, ring_signature()), ring);
}

void check_ring_term(const Term& t, const Ring& ring) {
    switch (t.kind()) {
    case NodeKind::variable:
        return;
    case NodeKind::constant:
        if (t.symbol() == "0" || t.symbol() == "1")
            return;
        if (is_literal(t) && ring.is_canonical_literal(t.symbol()))
            return;
        throw PreconditionViolated("'" + t.symbol() + "' is not a canonical constant of " + ring.name());
    case NodeKind::binary:
        if (t.symbol() != kPlus && t.symbol() != kTimes)
            break;
        check_ring_term(t.left(), ring);
        check_ring_term(t.right(), ring);
        return;
    default:
        break;
    }
    throw PreconditionViolated("not a ring term: " + serialize(t));
}

RAlgebra<Scalar> scalar_algebra(const Ring& ring) {
    return {ring.spec(), [ring](const Scalar& r) { return ring.canonical(r); }};
}

RAlgebra<StandardPolynomial> polynomial_algebra(const Ring& ring) {
    return {polynomial_ring_spec(ring), [ring](const Scalar& r) { return constant_poly(ring, r); }};
}

StandardPolynomial psi(const Term& t, const Ring& ring) {
    // direct recursion; cheaper than going through the generic algebra bundle
    switch (t.kind()) {
    case NodeKind::variable:
        return variable_poly(ring, t.var_index());
    case NodeKind::constant:
        if (t.symbol() == "0") return StandardPolynomial(ring);
        if (t.symbol() == "1") return one_poly(ring);
        if (is_literal(t)) return constant_poly(ring, Ring::literal_value(t.symbol()));
        break;
    case NodeKind::binary:
        if (t.symbol() == kPlus) return poly_add(psi(t.left(), ring), psi(t.right(), ring));
        if (t.symbol() == kTimes) return poly_mul(psi(t.left(), ring), psi(t.right(), ring));
        break;
    default:
        break;
    }
    throw PreconditionViolated("not a ring term: " + serialize(t));
}

bool s_equivalent(const Term& t, const Term& u, const Ring& ring) { return psi(t, ring) == psi(u, ring); }

// ---- rules ----

namespace {

constexpr std::string_view kRuleNames[] = {"ET-1", "ET0", "ET1", "ET2", "ET3", "ET4",
                                           "ET5",  "ET6", "ET7", "ET8", "ET9", "ET10"};

} // namespace

std::string_view to_string(EtRule r) noexcept { return kRuleNames[static_cast<int>(r)]; }

EtRule et_rule_from_string(std::string_view s) {
    for (std::size_t i = 0; i < std::size(kRuleNames); ++i)
        if (kRuleNames[i] == s)
            return static_cast<EtRule>(i);
    throw PreconditionViolated("unknown ring rule '" + std::string(s) + "'");
}

namespace {

struct Matcher {
    const EtStep& step;
    const Ring& ring;

    [[noreturn]] void fail(const std::string& why) const {
        throw RedexMismatch(std::string(to_string(step.rule)) + " " + std::string(to_string(step.dir)) + " at " +
                            step.pos.to_string() + ": " + why);
    }
    const Term& bin(const Term& v, std::string_view op) const {
        if (!v.is_binary(op))
            fail("expected a '" + std::string(op) + "' node, found " + serialize(v));
        return v;
    }
    Scalar lit(const Term& v) const {
        if (!is_literal(v) || !ring.is_canonical_literal(v.symbol()))
            fail("expected a canonical literal, found " + serialize(v));
        return Ring::literal_value(v.symbol());
    }
    void atom(const Term& v, std::string_view sym) const {
        if (!v.is_constant(sym))
            fail("expected " + std::string(sym) + ", found " + serialize(v));
    }
    Scalar binding(const std::optional<Scalar>& b, const char* name) const {
        if (!b)
            fail(std::string("reverse step needs binding ") + name);
        if (!ring.contains(*b))
            fail(std::string("binding ") + name + " is not a canonical element of " + ring.name());
        return *b;
    }
};

Term rewrite(const Term& v, const Matcher& m, EtStep& rec) {
    const Ring& R = m.ring;
    const bool fwd = rec.dir == Direction::forward;
    switch (rec.rule) {
    case EtRule::etm1:
        if (fwd) { m.atom(v, "0"); return ring_literal(R, R.zero()); }
        m.atom(v, R.literal(R.zero()));
        return ring_zero();
    case EtRule::et0:
        if (fwd) { m.atom(v, "1"); return ring_literal(R, R.one()); }
        m.atom(v, R.literal(R.one()));
        return ring_one();
    case EtRule::et1:
    case EtRule::et2: {
        const bool add = rec.rule == EtRule::et1;
        auto op = add ? kPlus : kTimes;
        auto apply = [&](const Scalar& a, const Scalar& b) { return add ? R.add(a, b) : R.mul(a, b); };
        if (fwd) {
            m.bin(v, op);
            Scalar r = m.lit(v.left()), s = m.lit(v.right());
            if ((rec.r && *rec.r != r) || (rec.s && *rec.s != s))
                m.fail("recorded bindings disagree with the redex");
            rec.r = r;
            rec.s = s;
            return ring_literal(R, apply(r, s));
        }
        Scalar t = m.lit(v);
        Scalar r = m.binding(rec.r, "r"), s = m.binding(rec.s, "s");
        if (apply(r, s) != t)
            m.fail("bindings do not combine to " + t.get_str());
        return Term::binary(std::string(op), ring_literal(R, r), ring_literal(R, s));
    }
    case EtRule::et3:
        if (fwd) { m.atom(m.bin(v, kPlus).left(), "0"); return v.right(); }
        return plus(ring_zero(), v);
    case EtRule::et4:
        if (fwd) { m.atom(m.bin(v, kTimes).left(), "1"); return v.right(); }
        return times(ring_one(), v);
    case EtRule::et5:
        m.bin(v, kPlus);
        return plus(v.right(), v.left());
    case EtRule::et6:
        m.bin(v, kTimes);
        return times(v.right(), v.left());
    case EtRule::et7:
    case EtRule::et8: {
        auto op = std::string(rec.rule == EtRule::et7 ? kPlus : kTimes);
        m.bin(v, op);
        if (fwd) {
            const Term& r = m.bin(v.right(), op);
            return Term::binary(op, Term::binary(op, v.left(), r.left()), r.right());
        }
        const Term& l = m.bin(v.left(), op);
        return Term::binary(op, l.left(), Term::binary(op, l.right(), v.right()));
    }
    case EtRule::et9:
        if (fwd) {
            m.bin(v, kTimes);
            const Term& s = m.bin(v.right(), kPlus);
            return plus(times(v.left(), s.left()), times(v.left(), s.right()));
        } else {
            m.bin(v, kPlus);
            const Term& a = m.bin(v.left(), kTimes);
            const Term& b = m.bin(v.right(), kTimes);
            if (a.left() != b.left())
                m.fail("the two products do not share a left factor");
            return times(a.left(), plus(a.right(), b.right()));
        }
    case EtRule::et10:
        if (fwd) {
            m.atom(m.bin(v, kTimes).left(), "0");
            if (rec.u && *rec.u != v.right())
                m.fail("recorded binding disagrees with the redex");
            rec.u = v.right();
            return ring_zero();
        }
        m.atom(v, "0");
        if (!rec.u)
            m.fail("reverse step needs binding u");
        return times(ring_zero(), *rec.u);
    }
    m.fail("unknown rule");
}

} // namespace

Term apply_et(const Term& t, const EtStep& step, const Ring& ring, EtStep* record) {
    Term v = subterm_at(t, step.pos);
    EtStep rec = step;
    Term w = rewrite(v, Matcher{step, ring}, rec);
    if (record)
        *record = std::move(rec);
    return replace_at(t, step.pos, w);
}

ReplayResult verify_certificate(const RingCertificate& c) {
    ReplayResult res;
    Term cur = c.source;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        try {
            cur = apply_et(cur, c.steps[i], c.ring);
        } catch (const Error& e) {
            res.ok = false;
            res.failed_step = i;
            res.message = e.what();
            return res;
        }
    }
    if (cur != c.target) {
        res.ok = false;
        res.failed_step = c.steps.size();
        res.message = "replay ends at " + serialize(cur) + ", not at the target";
    }
    return res;
}

RingCertificate reversed(const RingCertificate& c) {
    RingCertificate r{c.ring, c.target, c.source, {}};
    r.steps.reserve(c.steps.size());
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        EtStep s = *it;
        s.dir = flip(s.dir);
        r.steps.push_back(std::move(s));
    }
    return r;
}

RingCertificate compose(const RingCertificate& a, const RingCertificate& b) {
    if (!(a.ring == b.ring))
        throw RingMismatch("certificates over different rings");
    if (a.target != b.source)
        throw PreconditionViolated("certificates do not chain");
    RingCertificate r{a.ring, a.source, b.target, a.steps};
    r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
    return r;
}

// ---- monomials ----

Term standard_monomial(const ExponentVector& type) {
    std::vector<std::uint32_t> vars;
    for (std::size_t i = 0; i < type.size(); ++i)
        for (std::uint32_t k = 0; k < type[i]; ++k)
            vars.push_back(static_cast<std::uint32_t>(i + 1));
    if (vars.empty())
        return ring_one();
    Term m = Term::variable(vars.back());
    for (auto it = vars.rbegin() + 1; it != vars.rend(); ++it)
        m = times(Term::variable(*it), m);
    return m;
}

std::optional<ExponentVector> monomial_type(const Term& mu) {
    if (mu.is_constant("1"))
        return ExponentVector::infinite({});
    std::vector<std::uint32_t> e;
    std::vector<const Term*> stack{&mu};
    while (!stack.empty()) {
        const Term* t = stack.back();
        stack.pop_back();
        if (t->is_variable()) {
            if (e.size() < t->var_index())
                e.resize(t->var_index());
            ++e[t->var_index() - 1];
        } else if (t->is_binary(kTimes)) {
            stack.push_back(&t->left());
            stack.push_back(&t->right());
        } else {
            return std::nullopt;
        }
    }
    return ExponentVector::infinite(std::move(e));
}

Term standard_term_of(const StandardPolynomial& p) {
    if (p.is_zero())
        return ring_zero();
    const Ring& R = p.ring();
    std::vector<Term> summands;
    for (const auto& [k, c] : p.terms())
        summands.push_back(times(ring_literal(R, c), standard_monomial(ExponentVector::infinite(k.entries()))));
    Term t = summands.back();
    for (auto it = summands.rbegin() + 1; it != summands.rend(); ++it)
        t = plus(*it, t);
    return t;
}

std::optional<StandardPolynomial> carrier_of(const Term& t, const Ring& ring) {
    StandardPolynomial p(ring);
    if (t.is_constant("0"))
        return p;
    std::vector<const Term*> stack{&t};
    std::set<std::vector<std::uint32_t>> types;
    while (!stack.empty()) {
        const Term* s = stack.back();
        stack.pop_back();
        if (s->is_binary(kPlus)) {
            stack.push_back(&s->left());
            stack.push_back(&s->right());
            continue;
        }
        if (!s->is_binary(kTimes) || !is_literal(s->left()) || !ring.is_canonical_literal(s->left().symbol()))
            return std::nullopt;
        Scalar r = Ring::literal_value(s->left().symbol());
        auto type = monomial_type(s->right());
        if (!type || ring.is_zero(r) || !types.insert(type->entries()).second)
            return std::nullopt;
        p.accumulate(*type, r);
    }
    return p;
}

mpz_class distribution_weight(const Term& t) {
    if (t.is_atomic())
        return 2;
    mpz_class a = distribution_weight(t.left()), b = distribution_weight(t.right());
    if (t.symbol() == kPlus)
        return a + b + 1;
    return a * b;
}

// ---- additive monomials ----

namespace {

// All sums over the variables in `mask`, each used once.
const std::vector<std::string>& sums_over(unsigned mask, std::map<unsigned, std::vector<std::string>>& memo) {
    if (auto it = memo.find(mask); it != memo.end())
        return it->second;
    std::vector<std::string> out;
    if (std::has_single_bit(mask)) {
        out.push_back("x" + std::to_string(std::countr_zero(mask) + 1));
    } else {
        for (unsigned left = (mask - 1) & mask; left; left = (left - 1) & mask) {
            const auto& ls = sums_over(left, memo);
            const auto& rs = sums_over(mask & ~left, memo);
            for (const auto& l : ls)
                for (const auto& r : rs)
                    out.push_back("(" + l + "+" + r + ")");
        }
    }
    return memo[mask] = std::move(out);
}

} // namespace

std::uint64_t count_additive_monomials(unsigned n) {
    if (n == 0 || n > 7)
        throw PreconditionViolated("additive monomials are enumerated for 1 <= n <= 7");
    std::map<unsigned, std::vector<std::string>> memo;
    const auto& all = sums_over((1u << n) - 1, memo);
    std::set<std::string> distinct(all.begin(), all.end());
    return distinct.size();
}

} // namespace termalg
