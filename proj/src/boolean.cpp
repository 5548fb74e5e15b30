#include "termalg/boolean.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace termalg {

const AritySignature& bool_signature() {
    static const AritySignature sig = [] {
        AritySignature s;
        s.add(std::string(kOr), 2);
        s.add(std::string(kAnd), 2);
        s.add(std::string(kNot), 1);
        s.add("0", 0);
        s.add("1", 0);
        s.add_alias("|", std::string(kOr));
        s.add_alias("&", std::string(kAnd));
        s.add_alias("!", std::string(kNot));
        return s;
    }();
    return sig;
}

Term parse_bool_term(std::string_view word) { return parse(word, bool_signature()); }

void check_bool_term(const Term& t) {
    switch (t.kind()) {
    case NodeKind::variable:
        return;
    case NodeKind::constant:
        if (t.symbol() == "0" || t.symbol() == "1")
            return;
        break;
    case NodeKind::unary:
        if (t.symbol() == kNot) {
            check_bool_term(t.child(1));
            return;
        }
        break;
    case NodeKind::binary:
        if (t.symbol() == kOr || t.symbol() == kAnd) {
            check_bool_term(t.left());
            check_bool_term(t.right());
            return;
        }
        break;
    default:
        break;
    }
    throw PreconditionViolated("not a Boolean term: " + serialize(t));
}

Term bool_zero() { return Term::constant("0"); }
Term bool_one() { return Term::constant("1"); }
Term lor(Term a, Term b) { return Term::binary(std::string(kOr), std::move(a), std::move(b)); }
Term land(Term a, Term b) { return Term::binary(std::string(kAnd), std::move(a), std::move(b)); }
Term lnot(Term a) { return Term::unary(std::string(kNot), std::move(a)); }

bool is_bool_literal(const Term& t) noexcept {
    return t.is_variable() || (t.is_unary(kNot) && t.child(1).is_variable());
}

BooleanAlgebraSpec<bool> two_element_algebra() {
    return {
        .name = "{0,1}",
        .join = [](bool a, bool b) { return a || b; },
        .meet = [](bool a, bool b) { return a && b; },
        .complement = [](bool a) { return !a; },
        .zero = false,
        .one = true,
        .sample = [](std::mt19937_64& g) { return static_cast<bool>(g() & 1); },
    };
}

BooleanAlgebraSpec<std::uint64_t> powerset_algebra(unsigned k) {
    if (k == 0 || k > 64)
        throw PreconditionViolated("powerset algebra needs 1 <= k <= 64");
    std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    return {
        .name = "P([" + std::to_string(k) + "])",
        .join = [](std::uint64_t a, std::uint64_t b) { return a | b; },
        .meet = [](std::uint64_t a, std::uint64_t b) { return a & b; },
        .complement = [full](std::uint64_t a) { return full & ~a; },
        .zero = 0,
        .one = full,
        .sample = [full](std::mt19937_64& g) { return g() & full; },
    };
}

namespace {

bool eval_bits(const Term& t, std::uint64_t a) {
    switch (t.kind()) {
    case NodeKind::variable: return (a >> (t.var_index() - 1)) & 1;
    case NodeKind::constant: return t.symbol() == "1";
    case NodeKind::unary: return !eval_bits(t.child(1), a);
    default:
        if (t.symbol() == kOr) return eval_bits(t.left(), a) || eval_bits(t.right(), a);
        return eval_bits(t.left(), a) && eval_bits(t.right(), a);
    }
}

} // namespace

std::vector<bool> truth_table(const Term& t, unsigned n) {
    check_bool_term(t);
    if (n > 20)
        throw PreconditionViolated("truth tables are limited to 20 variables");
    if (max_variable(t) > n)
        throw MissingArgument("term uses x" + std::to_string(max_variable(t)) + " beyond width " + std::to_string(n));
    std::vector<bool> out(std::size_t{1} << n);
    for (std::uint64_t a = 0; a < out.size(); ++a)
        out[a] = eval_bits(t, a);
    return out;
}

// ---- rules ----

std::string_view to_string(BtRule r) noexcept {
    static constexpr std::string_view names[] = {"",     "BT1",  "BT2",  "BT3",  "BT4",  "BT5",  "BT6",
                                                 "BT7",  "BT8",  "BT9",  "BT10", "BT11", "BT12", "BT13",
                                                 "BT14", "BT15", "BT16", "BT17", "BT18", "BT19"};
    return names[static_cast<int>(r)];
}

BtRule bt_rule_from_string(std::string_view s) {
    for (int i = 1; i <= 19; ++i)
        if (to_string(static_cast<BtRule>(i)) == s)
            return static_cast<BtRule>(i);
    throw PreconditionViolated("unknown Boolean rule '" + std::string(s) + "'");
}

namespace {

struct BtMatcher {
    const BtStep& step;

    [[noreturn]] void fail(const std::string& why) const {
        throw RedexMismatch(std::string(to_string(step.rule)) + " " + std::string(to_string(step.dir)) + " at " +
                            step.pos.to_string() + ": " + why);
    }
    const Term& bin(const Term& v, std::string_view op) const {
        if (!v.is_binary(op))
            fail("expected a '" + std::string(op) + "' node, found " + serialize(v));
        return v;
    }
    const Term& neg(const Term& v) const {
        if (!v.is_unary(kNot))
            fail("expected a negation, found " + serialize(v));
        return v.child(1);
    }
    void atom(const Term& v, std::string_view s) const {
        if (!v.is_constant(s))
            fail("expected " + std::string(s) + ", found " + serialize(v));
    }
    void same(const Term& a, const Term& b) const {
        if (a != b)
            fail(serialize(a) + " and " + serialize(b) + " differ");
    }
    // forward: remember the erased term; a preset binding must agree
    void record(BtStep& rec, const Term& erased) const {
        if (rec.u && *rec.u != erased)
            fail("recorded binding disagrees with the redex");
        rec.u = erased;
    }
    const Term& need(const BtStep& rec) const {
        if (!rec.u)
            fail("reverse step needs binding u");
        return *rec.u;
    }
};

Term bt_rewrite(const Term& v, const BtMatcher& m, BtStep& rec) {
    const bool fwd = rec.dir == Direction::forward;
    const std::string OR(kOr), AND(kAnd);
    switch (rec.rule) {
    case BtRule::bt1:
    case BtRule::bt4: {
        // (0∧u) -> 0, (1∨u) -> 1
        bool is1 = rec.rule == BtRule::bt1;
        const std::string& op = is1 ? AND : OR;
        const char* c = is1 ? "0" : "1";
        if (fwd) {
            m.atom(m.bin(v, op).left(), c);
            m.record(rec, v.right());
            return Term::constant(c);
        }
        m.atom(v, c);
        return Term::binary(op, Term::constant(c), m.need(rec));
    }
    case BtRule::bt2:
    case BtRule::bt3: {
        // (0∨u) -> u, (1∧u) -> u
        bool is2 = rec.rule == BtRule::bt2;
        const std::string& op = is2 ? OR : AND;
        const char* c = is2 ? "0" : "1";
        if (fwd) {
            m.atom(m.bin(v, op).left(), c);
            return v.right();
        }
        return Term::binary(op, Term::constant(c), v);
    }
    case BtRule::bt5:
    case BtRule::bt6: {
        // (u∧¬(u)) -> 0, (u∨¬(u)) -> 1
        bool is5 = rec.rule == BtRule::bt5;
        const std::string& op = is5 ? AND : OR;
        const char* c = is5 ? "0" : "1";
        if (fwd) {
            m.bin(v, op);
            m.same(v.left(), m.neg(v.right()));
            m.record(rec, v.left());
            return Term::constant(c);
        }
        m.atom(v, c);
        const Term& u = m.need(rec);
        return Term::binary(op, u, lnot(u));
    }
    case BtRule::bt7:
    case BtRule::bt8: {
        const std::string& op = rec.rule == BtRule::bt7 ? OR : AND;
        m.bin(v, op);
        return Term::binary(op, v.right(), v.left());
    }
    case BtRule::bt9:
    case BtRule::bt10: {
        const std::string& op = rec.rule == BtRule::bt9 ? OR : AND;
        m.bin(v, op);
        if (fwd) {
            const Term& r = m.bin(v.right(), op);
            return Term::binary(op, Term::binary(op, v.left(), r.left()), r.right());
        }
        const Term& l = m.bin(v.left(), op);
        return Term::binary(op, l.left(), Term::binary(op, l.right(), v.right()));
    }
    case BtRule::bt11:
    case BtRule::bt12: {
        const std::string& op = rec.rule == BtRule::bt11 ? OR : AND;
        if (fwd) {
            m.bin(v, op);
            m.same(v.left(), v.right());
            return v.left();
        }
        return Term::binary(op, v, v);
    }
    case BtRule::bt13:
    case BtRule::bt14: {
        // (u∘(u'•u'')) -> ((u∘u')•(u∘u''))
        const std::string& outer = rec.rule == BtRule::bt13 ? OR : AND;
        const std::string& inner = rec.rule == BtRule::bt13 ? AND : OR;
        if (fwd) {
            m.bin(v, outer);
            const Term& s = m.bin(v.right(), inner);
            return Term::binary(inner, Term::binary(outer, v.left(), s.left()),
                                Term::binary(outer, v.left(), s.right()));
        }
        m.bin(v, inner);
        const Term& a = m.bin(v.left(), outer);
        const Term& b = m.bin(v.right(), outer);
        m.same(a.left(), b.left());
        return Term::binary(outer, a.left(), Term::binary(inner, a.right(), b.right()));
    }
    case BtRule::bt15:
    case BtRule::bt16: {
        // (u∘(u•u')) -> u
        const std::string& outer = rec.rule == BtRule::bt15 ? OR : AND;
        const std::string& inner = rec.rule == BtRule::bt15 ? AND : OR;
        if (fwd) {
            m.bin(v, outer);
            const Term& s = m.bin(v.right(), inner);
            m.same(v.left(), s.left());
            m.record(rec, s.right());
            return v.left();
        }
        return Term::binary(outer, v, Term::binary(inner, v, m.need(rec)));
    }
    case BtRule::bt17:
        if (fwd)
            return m.neg(m.neg(v));
        return lnot(lnot(v));
    case BtRule::bt18:
    case BtRule::bt19: {
        // ¬((u∘u')) -> (¬(u)•¬(u'))
        const std::string& in = rec.rule == BtRule::bt18 ? OR : AND;
        const std::string& out = rec.rule == BtRule::bt18 ? AND : OR;
        if (fwd) {
            const Term& s = m.bin(m.neg(v), in);
            return Term::binary(out, lnot(s.left()), lnot(s.right()));
        }
        m.bin(v, out);
        return lnot(Term::binary(in, m.neg(v.left()), m.neg(v.right())));
    }
    }
    m.fail("unknown rule");
}

} // namespace

Term apply_bt(const Term& t, const BtStep& step, BtStep* record) {
    Term v = subterm_at(t, step.pos);
    BtStep rec = step;
    Term w = bt_rewrite(v, BtMatcher{step}, rec);
    if (record)
        *record = std::move(rec);
    return replace_at(t, step.pos, w);
}

ReplayResult verify_certificate(const BoolCertificate& c) {
    ReplayResult res;
    Term cur = c.source;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        try {
            cur = apply_bt(cur, c.steps[i]);
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

BoolCertificate reversed(const BoolCertificate& c) {
    BoolCertificate r{c.target, c.source, {}};
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
        BtStep s = *it;
        s.dir = flip(s.dir);
        r.steps.push_back(std::move(s));
    }
    return r;
}

// ---- monomials ----

Term WedgeMonomial::to_term() const {
    if (support.empty())
        return bool_one();
    auto lit = [&](std::size_t i) {
        Term x = Term::variable(support[i]);
        return neg[i] ? lnot(x) : x;
    };
    Term t = lit(support.size() - 1);
    for (std::size_t i = support.size() - 1; i-- > 0;)
        t = land(lit(i), t);
    return t;
}

std::optional<WedgeMonomial> wedge_monomial_of(const Term& t) {
    if (t.is_constant("1"))
        return WedgeMonomial{};
    std::map<std::uint32_t, bool> lits;
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
        const Term* s = stack.back();
        stack.pop_back();
        if (s->is_binary(kAnd)) {
            stack.push_back(&s->left());
            stack.push_back(&s->right());
        } else if (is_bool_literal(*s)) {
            bool n = !s->is_variable();
            std::uint32_t v = n ? s->child(1).var_index() : s->var_index();
            if (!lits.emplace(v, n).second)
                return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    WedgeMonomial m;
    for (const auto& [v, n] : lits) {
        m.support.push_back(v);
        m.neg.push_back(n);
    }
    return m;
}

DnfTerm::DnfTerm(unsigned n) {
    for (std::uint32_t i = 1; i <= n; ++i)
        support_.push_back(i);
}

DnfTerm::DnfTerm(std::vector<std::uint32_t> support, std::vector<Type> types)
    : support_(std::move(support)), types_(std::move(types)) {
    if (!std::is_sorted(support_.begin(), support_.end()) ||
        std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw PreconditionViolated("DNF support must be strictly increasing");
    for (const auto& t : types_)
        if (t.size() != support_.size())
            throw WidthMismatch("type vector length differs from the support size");
    std::sort(types_.begin(), types_.end());
    if (std::adjacent_find(types_.begin(), types_.end()) != types_.end())
        throw PreconditionViolated("DNF monomials must have distinct types");
}

WedgeMonomial DnfTerm::monomial(std::size_t i) const { return {support_, types_.at(i)}; }

Term DnfTerm::to_term() const {
    if (types_.empty())
        return bool_zero();
    Term t = monomial(types_.size() - 1).to_term();
    for (std::size_t i = types_.size() - 1; i-- > 0;)
        t = lor(monomial(i).to_term(), t);
    return t;
}

std::optional<DnfTerm> dnf_of_term(const Term& t, unsigned n) {
    std::vector<std::uint32_t> support;
    for (std::uint32_t i = 1; i <= n; ++i)
        support.push_back(i);
    if (t.is_constant("0"))
        return DnfTerm(support, {});
    std::vector<DnfTerm::Type> types;
    std::vector<const Term*> stack{&t};
    while (!stack.empty()) {
        const Term* s = stack.back();
        stack.pop_back();
        if (s->is_binary(kOr)) {
            stack.push_back(&s->right());
            stack.push_back(&s->left());
            continue;
        }
        auto m = wedge_monomial_of(*s);
        if (!m || m->support != support)
            return std::nullopt;
        types.push_back(m->neg);
    }
    auto sorted = types;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    return DnfTerm(support, std::move(types));
}

DnfTerm wedge_of_dnfs(const DnfTerm& p, const DnfTerm& q) {
    if (p.support() == q.support()) {
        std::vector<DnfTerm::Type> out;
        std::set_intersection(p.types().begin(), p.types().end(), q.types().begin(), q.types().end(),
                              std::back_inserter(out));
        return DnfTerm(p.support(), std::move(out));
    }
    std::vector<std::uint32_t> joint;
    std::set_union(p.support().begin(), p.support().end(), q.support().begin(), q.support().end(),
                   std::back_inserter(joint));
    if (joint.size() != p.width() + q.width())
        throw WidthMismatch("DNF supports overlap without being equal");
    std::vector<DnfTerm::Type> out;
    for (const auto& a : p.types())
        for (const auto& b : q.types()) {
            DnfTerm::Type t(joint.size());
            std::size_t i = 0, j = 0;
            for (std::size_t k = 0; k < joint.size(); ++k) {
                if (i < p.width() && p.support()[i] == joint[k])
                    t[k] = a[i++];
                else
                    t[k] = b[j++];
            }
            out.push_back(std::move(t));
        }
    return DnfTerm(std::move(joint), std::move(out));
}

Term shift_variables(const Term& t, std::uint32_t offset) {
    if (offset == 0 || t.is_constant("0") || t.is_constant("1"))
        return t;
    switch (t.kind()) {
    case NodeKind::variable:
        return Term::variable(t.var_index() + offset);
    case NodeKind::constant:
        return t;
    case NodeKind::unary:
        return Term::unary(t.symbol(), shift_variables(t.child(1), offset));
    case NodeKind::binary:
        return Term::binary(t.symbol(), shift_variables(t.left(), offset), shift_variables(t.right(), offset));
    case NodeKind::nary: {
        std::vector<Term> kids;
        for (const Term& c : t.children())
            kids.push_back(shift_variables(c, offset));
        return Term::nary(t.symbol(), std::move(kids));
    }
    }
    return t;
}

} // namespace termalg
