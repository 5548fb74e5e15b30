#include <gmpxx.h>

#include <stdexcept>

#include "comb_sort.hpp"
#include "termalg/boolean.hpp"

namespace termalg {

namespace {

class BoolRewriter {
public:
    explicit BoolRewriter(const Term& t) : cur_(t) {}

    const Term& term() const { return cur_; }
    Term at(const Position& p) const { return subterm_at(cur_, p); }

    void apply(BtRule rule, const Position& p, Direction dir = Direction::forward,
               std::optional<Term> u = std::nullopt) {
        BtStep rec;
        cur_ = apply_bt(cur_, BtStep{rule, p, dir, std::move(u)}, &rec);
        steps_.push_back(std::move(rec));
    }

    std::vector<BtStep> take_steps() { return std::move(steps_); }

private:
    Term cur_;
    std::vector<BtStep> steps_;
};

bool is_or(const Term& t) { return t.is_binary(kOr); }
bool is_and(const Term& t) { return t.is_binary(kAnd); }

// Deepest subterm satisfying `pred` by height, leftmost on ties, plus the
// number of such subterms at that height.
struct Deepest {
    std::size_t height = 0;
    std::size_t count = 0;
    std::optional<Position> pos;
};

template <class Pred>
std::size_t scan(const Term& t, Position& cur, Deepest& best, const Pred& pred) {
    std::size_t h = 0;
    for (std::size_t i = 1; i <= t.arity(); ++i) {
        cur.path.push_back(i);
        h = std::max(h, scan(t.child(i), cur, best, pred) + 1);
        cur.path.pop_back();
    }
    if (pred(t)) {
        if (!best.pos || h > best.height) {
            best = {h, 1, cur};
        } else if (h == best.height) {
            ++best.count;
            if (cur < *best.pos)
                best.pos = cur;
        }
    }
    return h;
}

template <class Pred>
Deepest deepest(const Term& t, const Pred& pred) {
    Deepest d;
    Position root;
    scan(t, root, d, pred);
    return d;
}

// ---- phase 1: negations onto variables ----

void push_negations(BoolRewriter& rw, bool check) {
    auto nsub = [](const Term& t) { return t.is_unary(kNot) && !t.child(1).is_variable(); };
    Deepest d = deepest(rw.term(), nsub);
    while (d.pos) {
        const Position p = *d.pos;
        const Term inner = rw.at(p).child(1);
        if (inner.is_unary(kNot)) {
            rw.apply(BtRule::bt17, p);
        } else if (is_or(inner)) {
            rw.apply(BtRule::bt18, p);
        } else if (is_and(inner)) {
            rw.apply(BtRule::bt19, p);
        } else if (inner.is_constant("0")) {
            // ¬(0) -> (0∨¬(0)) -> 1
            rw.apply(BtRule::bt2, p, Direction::reverse);
            rw.apply(BtRule::bt6, p);
        } else {
            // ¬(1) -> (1∧¬(1)) -> 0
            rw.apply(BtRule::bt3, p, Direction::reverse);
            rw.apply(BtRule::bt5, p);
        }
        Deepest next = deepest(rw.term(), nsub);
        if (check && next.pos &&
            !(next.height < d.height || (next.height == d.height && next.count < d.count)))
            throw std::logic_error("negation step did not decrease the reduction pair");
        d = next;
    }
}

// ---- phase 2: constants ----

void drop_constants(BoolRewriter& rw, const Position& p) {
    Term t = rw.at(p);
    if (!is_or(t) && !is_and(t))
        return;
    drop_constants(rw, p.child(1));
    drop_constants(rw, p.child(2));
    t = rw.at(p);
    auto is_const = [](const Term& x) { return x.is_constant("0") || x.is_constant("1"); };
    if (!is_const(t.left()) && !is_const(t.right()))
        return;
    const bool conj = is_and(t);
    if (!is_const(t.left())) {
        rw.apply(conj ? BtRule::bt8 : BtRule::bt7, p);
        t = rw.at(p);
    }
    const bool zero = t.left().is_constant("0");
    if (conj)
        rw.apply(zero ? BtRule::bt1 : BtRule::bt3, p);
    else
        rw.apply(zero ? BtRule::bt2 : BtRule::bt4, p);
}

// ---- phase 3: distribute ∧ over ∨ ----

mpz_class weight(const Term& t) {
    if (is_or(t)) return weight(t.left()) + weight(t.right()) + 1;
    if (is_and(t)) return weight(t.left()) * weight(t.right());
    return 2;
}

void distribute(BoolRewriter& rw, bool check) {
    auto dsub = [](const Term& t) { return is_and(t) && (is_or(t.left()) || is_or(t.right())); };
    mpz_class w = check ? weight(rw.term()) : mpz_class(0);
    while (true) {
        Deepest d = deepest(rw.term(), dsub);
        if (!d.pos)
            return;
        if (!is_or(rw.at(*d.pos).right()))
            rw.apply(BtRule::bt8, *d.pos);
        rw.apply(BtRule::bt14, *d.pos);
        if (check) {
            mpz_class nw = weight(rw.term());
            if (nw >= w)
                throw std::logic_error("distribution step did not decrease the term weight");
            w = nw;
        }
    }
}

// ---- phase 4: conjunctions ----

std::uint32_t lit_var(const Term& t) { return t.is_variable() ? t.var_index() : t.child(1).var_index(); }

struct ConjCtx {
    BoolRewriter& rw;

    Term at(const Position& p) const { return rw.at(p); }
    bool is_op(const Term& t) const { return is_and(t); }
    static std::pair<std::uint32_t, bool> key(const Term& t) { return {lit_var(t), !t.is_variable()}; }
    int cmp(const Term& a, const Term& b) const {
        auto x = key(a), y = key(b);
        return x < y ? -1 : y < x ? 1 : 0;
    }
    bool can_combine(const Term&, const Term&) const { return true; }
    void comm(const Position& p) { rw.apply(BtRule::bt8, p); }
    void assoc_right(const Position& p) { rw.apply(BtRule::bt10, p, Direction::reverse); }
    void assoc_left(const Position& p) { rw.apply(BtRule::bt10, p); }
    void combine(const Position& p) { rw.apply(BtRule::bt12, p); }
};

void sort_conjunction(BoolRewriter& rw, const Position& p) {
    ConjCtx ctx{rw};
    detail::CombSorter<ConjCtx>(ctx).sort(p);
}

// Sorted chain at p; collapses it to 0 when it holds x and ¬(x).
void kill_contradiction(BoolRewriter& rw, const Position& p) {
    Position q = p;
    while (true) {
        Term node = rw.at(q);
        if (!is_and(node))
            return;
        const Term& a = node.left();
        const Term& rest = node.right();
        const Term& b = is_and(rest) ? rest.left() : rest;
        if (a.is_variable() && b.is_unary(kNot) && b.child(1) == a)
            break;
        q = q.child(2);
    }
    if (is_and(rw.at(q).right())) {
        rw.apply(BtRule::bt10, q);
        rw.apply(BtRule::bt5, q.child(1));
        rw.apply(BtRule::bt1, q);
    } else {
        rw.apply(BtRule::bt5, q);
    }
    while (q != p) {
        q = q.parent();
        rw.apply(BtRule::bt8, q);
        rw.apply(BtRule::bt1, q);
    }
}

void disjunct_positions(const Term& t, Position& cur, std::vector<Position>& out) {
    if (!is_or(t)) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 1; i <= 2; ++i) {
        cur.path.push_back(i);
        disjunct_positions(t.child(i), cur, out);
        cur.path.pop_back();
    }
}

std::vector<Position> disjuncts(const Term& t) {
    std::vector<Position> out;
    Position root;
    disjunct_positions(t, root, out);
    return out;
}

void drop_zero_disjuncts(BoolRewriter& rw) {
    while (is_or(rw.term())) {
        std::optional<Position> z;
        for (const Position& e : disjuncts(rw.term()))
            if (rw.at(e).is_constant("0")) {
                z = e;
                break;
            }
        if (!z)
            return;
        Position q = z->parent();
        if (z->path.back() == 2)
            rw.apply(BtRule::bt7, q);
        rw.apply(BtRule::bt2, q);
    }
}

// ---- phase 5: full support ----

void extend(BoolRewriter& rw, const Position& e, unsigned n) {
    Term mu = rw.at(e);
    std::vector<bool> has(n + 1, false);
    if (!mu.is_constant("1")) {
        auto m = wedge_monomial_of(mu);
        for (auto v : m->support)
            has[v] = true;
    }
    std::uint32_t j = 1;
    while (j <= n && has[j])
        ++j;
    if (j > n)
        return;
    Term xj = Term::variable(j);
    if (mu.is_constant("1")) {
        rw.apply(BtRule::bt6, e, Direction::reverse, xj);
    } else {
        rw.apply(BtRule::bt3, e, Direction::reverse);
        rw.apply(BtRule::bt6, e.child(1), Direction::reverse, xj);
        rw.apply(BtRule::bt8, e);
        rw.apply(BtRule::bt14, e);
        sort_conjunction(rw, e.child(1));
        sort_conjunction(rw, e.child(2));
    }
    extend(rw, e.child(1), n);
    extend(rw, e.child(2), n);
}

// ---- phase 6: order disjuncts, merge equal types ----

struct DisjCtx {
    BoolRewriter& rw;

    Term at(const Position& p) const { return rw.at(p); }
    bool is_op(const Term& t) const { return is_or(t); }
    static std::vector<bool> type(const Term& t) { return wedge_monomial_of(t)->neg; }
    int cmp(const Term& a, const Term& b) const {
        auto x = type(a), y = type(b);
        return x < y ? -1 : y < x ? 1 : 0;
    }
    bool can_combine(const Term&, const Term&) const { return true; }
    void comm(const Position& p) { rw.apply(BtRule::bt7, p); }
    void assoc_right(const Position& p) { rw.apply(BtRule::bt9, p, Direction::reverse); }
    void assoc_left(const Position& p) { rw.apply(BtRule::bt9, p); }
    void combine(const Position& p) { rw.apply(BtRule::bt11, p); }
};

} // namespace

DnfResult to_dnf(const Term& t, unsigned n, DnfOptions opt) {
    check_bool_term(t);
    if (n == 0)
        throw PreconditionViolated("DNF width must be at least 1");
    if (max_variable(t) > n)
        throw PreconditionViolated("term uses x" + std::to_string(max_variable(t)) + " beyond width " +
                                   std::to_string(n));
    BoolRewriter rw(t);

    push_negations(rw, opt.check_descent);
    drop_constants(rw, Position{});

    if (!rw.term().is_constant("0")) {
        if (!rw.term().is_constant("1")) {
            distribute(rw, opt.check_descent);
            for (const Position& e : disjuncts(rw.term())) {
                sort_conjunction(rw, e);
                kill_contradiction(rw, e);
            }
            drop_zero_disjuncts(rw);
        }
        if (!rw.term().is_constant("0")) {
            for (const Position& e : disjuncts(rw.term()))
                extend(rw, e, n);
            DisjCtx ctx{rw};
            detail::CombSorter<DisjCtx>(ctx).sort(Position{});
        }
    }

    auto dnf = dnf_of_term(rw.term(), n);
    if (!dnf || dnf->to_term() != rw.term())
        throw std::logic_error("DNF reduction ended in a non-canonical term: " + serialize(rw.term()));
    Term result = rw.term();
    return DnfResult{std::move(*dnf), BoolCertificate{t, result, rw.take_steps()}};
}

} // namespace termalg
