#pragma once

// Merge sort of a chain built from one associative, commutative binary
// operator, carried out purely by rewrite steps. Both children of a node are
// sorted into right-nested chains, then merged.
//
// Ctx supplies:
//   Term at(const Position&)
//   bool is_op(const Term&)                       node of the operator?
//   int  cmp(const Term&, const Term&)            order on chain elements
//   bool can_combine(const Term&, const Term&)    merge two equal elements?
//   void comm(const Position&)                    (a∘b) -> (b∘a)
//   void assoc_right(const Position&)             ((a∘b)∘c) -> (a∘(b∘c))
//   void assoc_left(const Position&)              (a∘(b∘c)) -> ((a∘b)∘c)
//   void combine(const Position&)                 (a∘b) -> single element

#include "termalg/term.hpp"

namespace termalg::detail {

template <class Ctx>
class CombSorter {
public:
    explicit CombSorter(Ctx& ctx) : ctx_(ctx) {}

    void sort(const Position& p) {
        if (!ctx_.is_op(ctx_.at(p)))
            return;
        sort(p.child(1));
        sort(p.child(2));
        merge(p);
    }

private:
    Term head(const Term& t) { return ctx_.is_op(t) ? t.left() : t; }

    // node at p is (a∘C) with C a sorted chain; fold a into head(C) while they combine
    void absorb(const Position& p) {
        while (true) {
            Term node = ctx_.at(p);
            if (!ctx_.is_op(node))
                return;
            Term a = node.left(), c = node.right();
            Term b = head(c);
            if (ctx_.cmp(a, b) != 0 || !ctx_.can_combine(a, b))
                return;
            if (ctx_.is_op(c)) {
                ctx_.assoc_left(p);
                ctx_.combine(p.child(1));
            } else {
                ctx_.combine(p);
                return;
            }
        }
    }

    void merge(const Position& p) {
        Term node = ctx_.at(p);
        if (!ctx_.is_op(node))
            return;
        if (ctx_.cmp(head(node.right()), head(node.left())) < 0) {
            ctx_.comm(p);
            node = ctx_.at(p);
        }
        if (ctx_.is_op(node.left())) {
            ctx_.assoc_right(p);
            merge(p.child(2));
        }
        absorb(p);
    }

    Ctx& ctx_;
};

} // namespace termalg::detail
