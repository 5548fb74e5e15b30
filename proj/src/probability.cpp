#include "termalg/probability.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace termalg {

Event::Event(std::size_t outcomes, const std::vector<std::size_t>& members) : bits_(outcomes) {
    for (std::size_t x : members) {
        if (x >= outcomes)
            throw PreconditionViolated("outcome " + std::to_string(x) + " is outside the space");
        bits_.set(x);
    }
}

Event Event::full(std::size_t outcomes) {
    Event e(outcomes);
    e.bits_.set();
    return e;
}

std::vector<std::size_t> Event::members() const {
    std::vector<std::size_t> out;
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(i);
    return out;
}

void Event::same_space(const Event& o) const {
    if (bits_.size() != o.bits_.size())
        throw PreconditionViolated("events from different spaces");
}

Event Event::operator|(const Event& o) const {
    same_space(o);
    Event r = *this;
    r.bits_ |= o.bits_;
    return r;
}

Event Event::operator&(const Event& o) const {
    Event r = *this;
    return r &= o;
}

Event& Event::operator&=(const Event& o) {
    same_space(o);
    bits_ &= o.bits_;
    return *this;
}

Event Event::operator~() const {
    Event r = *this;
    r.bits_.flip();
    return r;
}

Fps::Fps(std::vector<std::string> outcomes, std::vector<Rational> weights)
    : outcomes_(std::move(outcomes)), weights_(std::move(weights)) {
    if (weights_.empty())
        throw PreconditionViolated("a space needs at least one outcome");
    size_ = weights_.size();
    if (!outcomes_.empty() && outcomes_.size() != weights_.size())
        throw PreconditionViolated("outcome and weight lists differ in length");
    Rational total = 0;
    for (auto& w : weights_) {
        w.canonicalize();
        if (w < 0 || w > 1)
            throw PreconditionViolated("weight " + w.get_str() + " is outside [0,1]");
        total += w;
    }
    if (total != 1)
        throw PreconditionViolated("weights sum to " + total.get_str() + ", not 1");
    uniform_ = std::all_of(weights_.begin(), weights_.end(), [&](const Rational& w) { return w == weights_[0]; });
    uniform_weight_ = weights_[0];
}

Fps Fps::uniform(std::size_t n) {
    if (n == 0)
        throw PreconditionViolated("a space needs at least one outcome");
    Fps f;
    f.size_ = n;
    f.uniform_ = true;
    f.uniform_weight_ = Rational(1, n);
    f.uniform_weight_.canonicalize();
    return f;
}

std::string Fps::outcome_name(std::size_t i) const {
    if (i >= size_)
        throw PreconditionViolated("outcome " + std::to_string(i) + " is outside the space");
    return outcomes_.empty() ? "o" + std::to_string(i) : outcomes_[i];
}

Rational Fps::weight(std::size_t i) const {
    if (i >= size_)
        throw PreconditionViolated("outcome " + std::to_string(i) + " is outside the space");
    return uniform_ ? uniform_weight_ : weights_[i];
}

Event Fps::event(const std::vector<std::size_t>& members) const { return Event(size(), members); }

Rational pr(const Fps& space, const Event& a) {
    if (a.outcomes() != space.size())
        throw PreconditionViolated("event does not belong to the space");
    if (space.is_uniform())
        return Rational(a.count()) * space.weight(0);
    Rational s = 0;
    const auto& b = a.bits();
    for (auto i = b.find_first(); i != boost::dynamic_bitset<>::npos; i = b.find_next(i))
        s += space.weight(i);
    return s;
}

BooleanAlgebraSpec<Event> event_algebra(const Fps& space) {
    std::size_t n = space.size();
    return {
        .name = "P(M)",
        .join = [](const Event& a, const Event& b) { return a | b; },
        .meet = [](const Event& a, const Event& b) { return a & b; },
        .complement = [](const Event& a) { return ~a; },
        .zero = Event(n),
        .one = Event::full(n),
        .sample =
            [n](std::mt19937_64& g) {
                Event e(n);
                for (std::size_t i = 0; i < n; ++i)
                    if (g() & 1) e.insert(i);
                return e;
            },
    };
}

Fps product_space(const Fps& left, const Fps& right) {
    std::vector<std::string> names;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            names.push_back(left.outcome_name(i) + "," + right.outcome_name(j));
            w.push_back(left.weight(i) * right.weight(j));
        }
    return Fps(std::move(names), std::move(w));
}

Event lift_left(const Event& a, const Fps& right) {
    Event e(a.outcomes() * right.size());
    for (std::size_t i : a.members())
        for (std::size_t j = 0; j < right.size(); ++j)
            e.insert(i * right.size() + j);
    return e;
}

Event lift_right(const Event& b, const Fps& left) {
    Event e(left.size() * b.outcomes());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j : b.members())
            e.insert(i * b.outcomes() + j);
    return e;
}

DisjointSumReport disjoint_sum_check(const Fps& space, const std::vector<Event>& events) {
    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
            if (!(events[i] & events[j]).empty())
                throw NotDisjoint(i, j);
    DisjointSumReport r;
    Event u = space.empty_event();
    r.sum = 0;
    for (const Event& e : events) {
        u = u | e;
        r.sum += pr(space, e);
    }
    r.pr_union = pr(space, u);
    r.holds = r.pr_union == r.sum;
    return r;
}

namespace {

// meets[mask] = meet of the events selected by mask; meets[0] is the full event
std::vector<Event> all_meets(const Fps& space, const std::vector<Event>& es) {
    if (es.size() > 20)
        throw PreconditionViolated("independence checks take at most 20 events per tuple");
    std::vector<Event> meets(std::size_t{1} << es.size());
    meets[0] = space.full_event();
    for (std::size_t m = 1; m < meets.size(); ++m) {
        unsigned low = std::countr_zero(m);
        meets[m] = meets[m & (m - 1)] & es[low];
    }
    return meets;
}

std::vector<std::size_t> indices_of(std::size_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

} // namespace

IndependenceReport tuples_independent(const Fps& space, const std::vector<Event>& as, const std::vector<Event>& bs) {
    auto ma = all_meets(space, as);
    auto mb = all_meets(space, bs);
    std::vector<Rational> pa, pb;
    for (const auto& e : ma) pa.push_back(pr(space, e));
    for (const auto& e : mb) pb.push_back(pr(space, e));
    IndependenceReport r;
    for (std::size_t x = 0; x < ma.size(); ++x)
        for (std::size_t y = 0; y < mb.size(); ++y) {
            ++r.pairs_checked;
            if (x == 0 || y == 0)
                continue;  // Pr(M ∧ b) = Pr(b) holds by construction
            if (pr(space, ma[x] & mb[y]) != pa[x] * pb[y]) {
                r.independent = false;
                r.witness = {indices_of(x), indices_of(y)};
                return r;
            }
        }
    return r;
}

ComplementReport complement_closure_check(const Fps& space, const std::vector<Event>& as,
                                          const std::vector<Event>& bs, std::size_t samples, std::uint64_t seed) {
    if (!tuples_independent(space, as, bs).independent)
        throw PreconditionViolated("the tuples are not independent");
    const std::size_t total = as.size() + bs.size();
    ComplementReport r;
    r.exhaustive = total <= 10;
    auto check = [&](std::uint64_t pattern) {
        std::vector<Event> a2 = as, b2 = bs;
        for (std::size_t i = 0; i < total; ++i)
            if ((pattern >> i) & 1) {
                Event& e = i < as.size() ? a2[i] : b2[i - as.size()];
                e = ~e;
            }
        ++r.patterns_checked;
        if (!tuples_independent(space, a2, b2).independent) {
            r.holds = false;
            r.witness = pattern;
        }
    };
    if (r.exhaustive) {
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << total) && r.holds; ++p)
            check(p);
    } else {
        std::mt19937_64 rng(seed);
        std::uint64_t mask = total >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
        for (std::size_t s = 0; s < samples && r.holds; ++s)
            check(rng() & mask);
    }
    return r;
}

BitReport bit_check(const Fps& space, const Term& t, const Term& u, const std::vector<Event>& left,
                    const std::vector<Event>& right) {
    if (!tuples_independent(space, left, right).independent)
        throw PreconditionViolated("the generator tuples are not independent");
    auto alg = event_algebra(space);
    Event a = bool_eval<Event>(t, alg, left);
    Event b = bool_eval<Event>(u, alg, right);
    BitReport r;
    r.pr_a = pr(space, a);
    r.pr_b = pr(space, b);
    r.pr_ab = pr(space, a & b);
    r.independent = r.pr_ab == r.pr_a * r.pr_b;

    const std::size_t n = left.size(), m = right.size();
    if (n == 0 || m == 0 || n > 10 || m > 10)
        return r;
    r.pipeline_run = true;

    DnfTerm v = to_dnf(t, static_cast<unsigned>(n)).dnf;
    DnfTerm w = to_dnf(u, static_cast<unsigned>(m)).dnf;
    r.left_monomials = v.size();
    r.right_monomials = w.size();
    r.dnf_values_match = bool_eval<Event>(v.to_term(), alg, left) == a && bool_eval<Event>(w.to_term(), alg, right) == b;

    std::vector<std::uint32_t> shifted;
    for (std::uint32_t i = 1; i <= m; ++i)
        shifted.push_back(static_cast<std::uint32_t>(n) + i);
    DnfTerm w2(shifted, w.types());
    DnfTerm x = wedge_of_dnfs(v, w2);

    std::vector<Event> all = left;
    all.insert(all.end(), right.begin(), right.end());
    r.wedge_value_matches = bool_eval<Event>(x.to_term(), alg, all) == (a & b);

    std::vector<Event> cells;
    for (std::size_t i = 0; i < x.size(); ++i)
        cells.push_back(bool_eval<Event>(x.monomial(i).to_term(), alg, all));
    try {
        auto ds = disjoint_sum_check(space, cells);
        r.disjoint_sum_holds = ds.holds && ds.pr_union == r.pr_ab;
    } catch (const NotDisjoint&) {
        r.disjoint_sum_holds = false;
    }

    std::vector<Rational> pv, pw;
    for (std::size_t i = 0; i < v.size(); ++i)
        pv.push_back(pr(space, bool_eval<Event>(v.monomial(i).to_term(), alg, left)));
    for (std::size_t j = 0; j < w.size(); ++j)
        pw.push_back(pr(space, bool_eval<Event>(w.monomial(j).to_term(), alg, right)));
    r.monomials_factor = true;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            Event cell = bool_eval<Event>(land(v.monomial(i).to_term(), shift_variables(w.monomial(j).to_term(),
                                                                                        static_cast<std::uint32_t>(n))),
                                          alg, all);
            if (pr(space, cell) != pv[i] * pw[j])
                r.monomials_factor = false;
        }
    Rational sv = 0, sw = 0;
    for (const auto& p : pv) sv += p;
    for (const auto& p : pw) sw += p;
    r.sums_factor = sv == r.pr_a && sw == r.pr_b && sv * sw == r.pr_ab;
    return r;
}

std::vector<Event> generated_subalgebra(const Fps& space, const std::vector<Event>& gens) {
    // atoms: outcomes grouped by their membership pattern across the generators
    std::map<std::vector<bool>, Event> atoms;
    for (std::size_t x = 0; x < space.size(); ++x) {
        std::vector<bool> sig;
        for (const Event& g : gens)
            sig.push_back(g.contains(x));
        auto [it, fresh] = atoms.try_emplace(sig, space.size());
        it->second.insert(x);
    }
    if (atoms.size() > 20)
        throw PreconditionViolated("generated subalgebra has more than 2^20 events");
    std::vector<Event> atom_list;
    for (auto& [_, e] : atoms)
        atom_list.push_back(e);
    std::vector<Event> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << atom_list.size()); ++mask) {
        Event e = space.empty_event();
        for (std::size_t i = 0; i < atom_list.size(); ++i)
            if ((mask >> i) & 1)
                e = e | atom_list[i];
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace termalg
