#include <stdexcept>

#include "comb_sort.hpp"
#include "termalg/ring_terms.hpp"

namespace termalg {

namespace {

class Rewriter {
public:
    Rewriter(const Term& t, const Ring& ring) : ring_(ring), cur_(t) {}

    const Term& term() const { return cur_; }
    Term at(const Position& p) const { return subterm_at(cur_, p); }
    const Ring& ring() const { return ring_; }

    void apply(EtRule rule, const Position& p, Direction dir = Direction::forward) {
        EtStep rec;
        cur_ = apply_et(cur_, EtStep{rule, p, dir, {}, {}, {}}, ring_, &rec);
        steps_.push_back(std::move(rec));
    }

    std::vector<EtStep> take_steps() { return std::move(steps_); }

private:
    Ring ring_;
    Term cur_;
    std::vector<EtStep> steps_;
};

bool is_sum(const Term& t) { return t.is_binary(kPlus); }
bool is_product(const Term& t) { return t.is_binary(kTimes); }

// ---- phase 1: distribute ----

struct Deepest {
    std::size_t height = 0;
    std::optional<Position> pos;
};

std::size_t find_deepest(const Term& t, Position& cur, Deepest& best) {
    std::size_t h = 0;
    for (std::size_t i = 1; i <= t.arity(); ++i) {
        cur.path.push_back(i);
        h = std::max(h, find_deepest(t.child(i), cur, best) + 1);
        cur.path.pop_back();
    }
    if (is_product(t) && (is_sum(t.left()) || is_sum(t.right()))) {
        // ties go to the lexicographically smallest position
        if (!best.pos || h > best.height || (h == best.height && cur < *best.pos)) {
            best.height = h;
            best.pos = cur;
        }
    }
    return h;
}

void distribute(Rewriter& rw, bool check) {
    mpz_class weight = check ? distribution_weight(rw.term()) : mpz_class(0);
    while (true) {
        Deepest best;
        Position root;
        find_deepest(rw.term(), root, best);
        if (!best.pos)
            return;
        const Position& p = *best.pos;
        if (!is_sum(rw.at(p).right()))
            rw.apply(EtRule::et6, p);
        rw.apply(EtRule::et9, p);
        if (check) {
            mpz_class w = distribution_weight(rw.term());
            if (w >= weight)
                throw std::logic_error("distribution step did not decrease the term weight");
            weight = w;
        }
    }
}

// ---- phase 2: products into (c_r·μ) ----

struct ProductCtx {
    Rewriter& rw;

    Term at(const Position& p) const { return rw.at(p); }
    bool is_op(const Term& t) const { return is_product(t); }
    static int rank(const Term& t) { return is_literal(t) ? 0 : static_cast<int>(t.var_index()); }
    int cmp(const Term& a, const Term& b) const {
        int x = rank(a), y = rank(b);
        return x < y ? -1 : x > y ? 1 : 0;
    }
    bool can_combine(const Term& a, const Term& b) const { return is_literal(a) && is_literal(b); }
    void comm(const Position& p) { rw.apply(EtRule::et6, p); }
    void assoc_right(const Position& p) { rw.apply(EtRule::et8, p, Direction::reverse); }
    void assoc_left(const Position& p) { rw.apply(EtRule::et8, p); }
    void combine(const Position& p) { rw.apply(EtRule::et2, p); }
};

void literalize_atoms(Rewriter& rw, const Position& p) {
    Term t = rw.at(p);
    if (t.is_constant("0")) {
        rw.apply(EtRule::etm1, p);
    } else if (t.is_constant("1")) {
        rw.apply(EtRule::et0, p);
    } else if (is_product(t)) {
        literalize_atoms(rw, p.child(1));
        literalize_atoms(rw, p.child(2));
    }
}

void standardize_summand(Rewriter& rw, const Position& p) {
    if (rw.at(p).is_constant("0"))
        return;
    literalize_atoms(rw, p);
    ProductCtx ctx{rw};
    detail::CombSorter<ProductCtx>(ctx).sort(p);
    Term t = rw.at(p);
    if (is_literal(t)) {
        rw.apply(EtRule::et4, p, Direction::reverse);
        rw.apply(EtRule::et6, p);
    } else if (!(is_product(t) && is_literal(t.left()))) {
        rw.apply(EtRule::et4, p, Direction::reverse);
        rw.apply(EtRule::et0, p.child(1));
    }
}

void summand_positions(const Term& t, Position& cur, std::vector<Position>& out) {
    if (!is_sum(t)) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 1; i <= 2; ++i) {
        cur.path.push_back(i);
        summand_positions(t.child(i), cur, out);
        cur.path.pop_back();
    }
}

// ---- phase 3: sort and merge equal types ----

struct SumCtx {
    Rewriter& rw;

    Term at(const Position& p) const { return rw.at(p); }
    bool is_op(const Term& t) const { return is_sum(t); }
    static std::optional<ExponentVector> type(const Term& t) {
        if (t.is_constant("0"))
            return std::nullopt;
        return monomial_type(t.right());
    }
    int cmp(const Term& a, const Term& b) const {
        auto x = type(a), y = type(b);
        if (!x || !y)
            return x ? 1 : y ? -1 : 0;
        GradedOrder less;
        return less(*x, *y) ? -1 : less(*y, *x) ? 1 : 0;
    }
    bool can_combine(const Term& a, const Term&) const { return !a.is_constant("0"); }
    void comm(const Position& p) { rw.apply(EtRule::et5, p); }
    void assoc_right(const Position& p) { rw.apply(EtRule::et7, p, Direction::reverse); }
    void assoc_left(const Position& p) { rw.apply(EtRule::et7, p); }
    void combine(const Position& p) {
        // ((c_r·μ)+(c_s·μ)) -> (c_{r+s}·μ)
        rw.apply(EtRule::et6, p.child(1));
        rw.apply(EtRule::et6, p.child(2));
        rw.apply(EtRule::et9, p, Direction::reverse);
        rw.apply(EtRule::et1, p.child(2));
        rw.apply(EtRule::et6, p);
    }
};

// ---- phase 4: drop zero coefficients and zero summands ----

std::vector<Position> chain_elements(const Term& t) {
    std::vector<Position> out;
    Position p;
    const Term* cur = &t;
    while (is_sum(*cur)) {
        out.push_back(p.child(1));
        p = p.child(2);
        cur = &cur->right();
    }
    out.push_back(p);
    return out;
}

void drop_zeros(Rewriter& rw) {
    for (const Position& e : chain_elements(rw.term())) {
        Term s = rw.at(e);
        if (is_product(s) && is_literal(s.left()) && rw.ring().is_zero(Ring::literal_value(s.left().symbol()))) {
            rw.apply(EtRule::etm1, e.child(1), Direction::reverse);
            rw.apply(EtRule::et10, e);
        }
    }
    while (is_sum(rw.term())) {
        auto elems = chain_elements(rw.term());
        std::optional<std::size_t> zero;
        for (std::size_t i = 0; i < elems.size() && !zero; ++i)
            if (rw.at(elems[i]).is_constant("0"))
                zero = i;
        if (!zero)
            return;
        if (*zero + 1 < elems.size()) {
            rw.apply(EtRule::et3, elems[*zero].parent());
        } else {
            Position q = elems[*zero].parent();
            rw.apply(EtRule::et5, q);
            rw.apply(EtRule::et3, q);
        }
    }
}

} // namespace

Normalized normalize_to_standard(const Term& t, const Ring& ring, NormalizeOptions opt) {
    check_ring_term(t, ring);
    Rewriter rw(t, ring);

    distribute(rw, opt.check_descent);

    std::vector<Position> summands;
    Position root;
    summand_positions(rw.term(), root, summands);
    for (const Position& p : summands)
        standardize_summand(rw, p);

    SumCtx ctx{rw};
    detail::CombSorter<SumCtx>(ctx).sort(Position{});

    drop_zeros(rw);

    auto carrier = carrier_of(rw.term(), ring);
    if (!carrier)
        throw std::logic_error("normalization ended in a non-standard term: " + serialize(rw.term()));
    Term result = rw.term();
    return Normalized{StandardTerm{result, std::move(*carrier)}, RingCertificate{ring, t, result, rw.take_steps()}};
}

std::optional<RingCertificate> f_equivalence_certificate(const Term& t, const Term& u, const Ring& ring) {
    Normalized a = normalize_to_standard(t, ring);
    Normalized b = normalize_to_standard(u, ring);
    if (a.standard.term != b.standard.term)
        return std::nullopt;
    return compose(a.certificate, reversed(b.certificate));
}

} // namespace termalg
