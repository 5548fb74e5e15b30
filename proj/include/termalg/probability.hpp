#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <vector>

#include "termalg/boolean.hpp"
#include "termalg/ring.hpp"

namespace termalg {

using Rational = mpq_class;

// A subset of the outcomes of a finite space.
class Event {
public:
    Event() = default;
    explicit Event(std::size_t outcomes) : bits_(outcomes) {}
    Event(std::size_t outcomes, const std::vector<std::size_t>& members);
    static Event full(std::size_t outcomes);

    std::size_t outcomes() const noexcept { return bits_.size(); }
    bool contains(std::size_t x) const { return bits_.test(x); }
    void insert(std::size_t x) { bits_.set(x); }
    std::size_t count() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    std::vector<std::size_t> members() const;

    Event operator|(const Event& o) const;
    Event operator&(const Event& o) const;
    Event operator~() const;
    Event& operator&=(const Event& o);

    friend bool operator==(const Event& a, const Event& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const Event& a, const Event& b) { return a.bits_ < b.bits_; }
    const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

private:
    void same_space(const Event& o) const;
    boost::dynamic_bitset<> bits_;
};

// Finite weighted powerset space with exact weights summing to 1.
class Fps {
public:
    // Empty `outcomes` gets the names o0, o1, ...
    Fps(std::vector<std::string> outcomes, std::vector<Rational> weights);
    // Stores no per-outcome data.
    static Fps uniform(std::size_t n);

    std::size_t size() const noexcept { return size_; }
    std::string outcome_name(std::size_t i) const;
    Rational weight(std::size_t i) const;
    bool is_uniform() const noexcept { return uniform_; }

    Event empty_event() const { return Event(size()); }
    Event full_event() const { return Event::full(size()); }
    Event event(const std::vector<std::size_t>& members) const;

private:
    Fps() = default;
    std::size_t size_ = 0;
    std::vector<std::string> outcomes_;
    std::vector<Rational> weights_;  // empty for uniform()
    Rational uniform_weight_;
    bool uniform_ = false;
};

Rational pr(const Fps& space, const Event& a);

// The powerset algebra of the space, for evaluating Boolean terms on events.
BooleanAlgebraSpec<Event> event_algebra(const Fps& space);

// Outcomes (i, j) numbered i*|right| + j, weights multiplied.
Fps product_space(const Fps& left, const Fps& right);
Event lift_left(const Event& a, const Fps& right);
Event lift_right(const Event& b, const Fps& left);

struct DisjointSumReport {
    Rational pr_union;
    Rational sum;
    bool holds = false;
};
// Throws NotDisjoint for the first overlapping pair.
DisjointSumReport disjoint_sum_check(const Fps& space, const std::vector<Event>& events);

struct IndependenceReport {
    bool independent = true;
    std::size_t pairs_checked = 0;
    // index subsets of the first failing pair
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> witness;
};

// Every meet over a subset of `as` against every meet over a subset of `bs`.
// Each tuple may hold at most 20 events.
IndependenceReport tuples_independent(const Fps& space, const std::vector<Event>& as, const std::vector<Event>& bs);

struct ComplementReport {
    bool holds = true;
    bool exhaustive = false;
    std::size_t patterns_checked = 0;
    // bit i set: the i-th event (left then right) was complemented
    std::optional<std::uint64_t> witness;
};
// Precondition: as independent of bs (PreconditionViolated otherwise).
ComplementReport complement_closure_check(const Fps& space, const std::vector<Event>& as,
                                          const std::vector<Event>& bs, std::size_t samples, std::uint64_t seed);

struct BitReport {
    Rational pr_a;
    Rational pr_b;
    Rational pr_ab;
    bool independent = false;
    // proof replay; unset when skipped for size
    bool pipeline_run = false;
    bool dnf_values_match = false;
    bool wedge_value_matches = false;
    bool disjoint_sum_holds = false;
    bool monomials_factor = false;
    bool sums_factor = false;
    std::size_t left_monomials = 0;
    std::size_t right_monomials = 0;

    bool all_passed() const noexcept {
        return independent && (!pipeline_run || (dnf_values_match && wedge_value_matches && disjoint_sum_holds &&
                                                  monomials_factor && sums_factor));
    }
};

// a = t(left events), b = u(right events). The tuples may differ in length;
// t must only use x1..x|left| and u only x1..x|right|. Throws
// PreconditionViolated when the tuples are not independent.
BitReport bit_check(const Fps& space, const Term& t, const Term& u, const std::vector<Event>& left,
                    const std::vector<Event>& right);

// All events of the Boolean subalgebra generated by `gens`, sorted. At most
// 20 atoms.
std::vector<Event> generated_subalgebra(const Fps& space, const std::vector<Event>& gens);

} // namespace termalg
