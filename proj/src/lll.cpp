#include "termalg/lll.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace termalg {

Hypergraph::Hypergraph(std::uint32_t n, std::vector<std::vector<std::uint32_t>> es) : vertices(n), edges(std::move(es)) {
    if (vertices == 0)
        throw PreconditionViolated("a hypergraph needs at least one vertex");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto& e = edges[i];
        if (e.empty())
            throw PreconditionViolated("edge " + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.back() >= vertices)
            throw UnknownVertex("edge " + std::to_string(i) + " uses vertex " + std::to_string(e.back()));
    }
}

unsigned Hypergraph::k() const {
    if (edges.empty())
        return 0;
    std::size_t m = edges[0].size();
    for (const auto& e : edges)
        m = std::min(m, e.size());
    return static_cast<unsigned>(m);
}

bool Hypergraph::edges_meet(std::size_t f, std::size_t g) const {
    const auto& a = edges.at(f);
    const auto& b = edges.at(g);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        a[i] < b[j] ? ++i : ++j;
    }
    return false;
}

unsigned Hypergraph::d() const {
    unsigned best = 0;
    for (std::size_t f = 0; f < edges.size(); ++f) {
        unsigned c = 0;
        for (std::size_t g = 0; g < edges.size(); ++g)
            if (g != f && edges_meet(f, g)) ++c;
        best = std::max(best, c);
    }
    return best;
}

namespace {

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Fps coloring_fps(std::size_t n) {
    if (n > 20)
        throw PreconditionViolated("coloring spaces hold at most 20 vertices, got " + std::to_string(n));
    return Fps::uniform(std::size_t{1} << n);
}

} // namespace

ColoringSpace::ColoringSpace(std::vector<std::uint32_t> vertices)
    : vertices_(sorted_unique(std::move(vertices))), fps_(coloring_fps(vertices_.size())) {}

ColoringSpace ColoringSpace::of(const Hypergraph& h) {
    std::vector<std::uint32_t> vs(h.vertices);
    for (std::uint32_t i = 0; i < h.vertices; ++i) vs[i] = i;
    return ColoringSpace(std::move(vs));
}

std::size_t ColoringSpace::local_index(std::uint32_t v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw UnknownVertex("vertex " + std::to_string(v) + " is not in the space");
    return static_cast<std::size_t>(it - vertices_.begin());
}

Event event_vertex_color(const ColoringSpace& s, std::uint32_t v, Color c) {
    const std::size_t i = s.local_index(v);
    const std::size_t n = s.fps().size();
    Event e(n);
    const bool want = c == Color::blue;
    for (std::size_t chi = 0; chi < n; ++chi)
        if (((chi >> i) & 1) == want) e.insert(chi);
    return e;
}

Event event_monochromatic(const ColoringSpace& s, const std::vector<std::uint32_t>& f) {
    if (f.empty())
        throw PreconditionViolated("an edge must be nonempty");
    Event red = s.fps().full_event(), blue = s.fps().full_event();
    for (auto v : f) {
        red &= event_vertex_color(s, v, Color::red);
        blue &= event_vertex_color(s, v, Color::blue);
    }
    return red | blue;
}

Event event_monochromatic(const ColoringSpace& s, const Hypergraph& h, std::size_t edge) {
    if (edge >= h.edges.size())
        throw UnknownEdge("edge " + std::to_string(edge) + " does not exist");
    return event_monochromatic(s, h.edges[edge]);
}

std::vector<Event> block_events(const ColoringSpace& s, const std::vector<std::uint32_t>& X) {
    std::vector<Event> out;
    for (auto v : X) {
        out.push_back(event_vertex_color(s, v, Color::red));
        out.push_back(event_vertex_color(s, v, Color::blue));
    }
    return out;
}

Term monochromatic_term(std::size_t edge_size) {
    if (edge_size == 0)
        throw PreconditionViolated("an edge must be nonempty");
    auto chain = [&](std::uint32_t first) {
        Term t = Term::variable(first + 2 * static_cast<std::uint32_t>(edge_size - 1));
        for (std::size_t i = edge_size - 1; i-- > 0;)
            t = land(Term::variable(first + 2 * static_cast<std::uint32_t>(i)), t);
        return t;
    };
    return lor(chain(1), chain(2));
}

namespace {

// Maps from the first `width` vertices to {r,b} consistent with U; bit 2i of
// U pins vertex i to red, bit 2i+1 to blue.
std::uint64_t count_maps(std::size_t width, std::uint64_t U) {
    std::uint64_t c = 0;
    for (std::uint64_t chi = 0; chi < (std::uint64_t{1} << width); ++chi) {
        bool ok = true;
        for (std::size_t i = 0; i < width && ok; ++i) {
            const bool blue = (chi >> i) & 1;
            if (((U >> (2 * i)) & 1) && blue) ok = false;
            if (((U >> (2 * i + 1)) & 1) && !blue) ok = false;
        }
        c += ok;
    }
    return c;
}

Event meet_of(const Fps& fps, const std::vector<Event>& es, std::uint64_t mask) {
    Event m = fps.full_event();
    for (std::size_t i = 0; i < es.size(); ++i)
        if ((mask >> i) & 1) m &= es[i];
    return m;
}

} // namespace

BlockReport verify_block_independence(const ColoringSpace& s, const std::vector<std::uint32_t>& X,
                                      const std::vector<std::uint32_t>& Y) {
    if (sorted_unique(X).size() != X.size() || sorted_unique(Y).size() != Y.size())
        throw PreconditionViolated("vertex lists must not repeat a vertex");
    for (auto v : X)
        if (std::find(Y.begin(), Y.end(), v) != Y.end())
            throw VerticesOverlap("vertex " + std::to_string(v) + " is in both blocks");
    auto bx = block_events(s, X);
    auto by = block_events(s, Y);
    BlockReport r;
    auto ind = tuples_independent(s.fps(), bx, by);
    r.independent = ind.independent;
    r.pairs_checked = ind.pairs_checked;

    const std::size_t w = X.size() + Y.size();
    if (w > 6)
        return r;
    for (std::uint64_t U = 0; U < (std::uint64_t{1} << bx.size()); ++U) {
        const Event mu = meet_of(s.fps(), bx, U);
        const std::uint64_t nu = count_maps(X.size(), U);
        for (std::uint64_t W = 0; W < (std::uint64_t{1} << by.size()); ++W) {
            const std::uint64_t nw = count_maps(Y.size(), W);
            const std::uint64_t nuw = count_maps(w, U | (W << (2 * X.size())));
            const Rational p = pr(s.fps(), mu & meet_of(s.fps(), by, W));
            ++r.identities_checked;
            Rational expect(nuw, std::uint64_t{1} << w);
            expect.canonicalize();
            if (nuw != nu * nw || p != expect)
                r.counting_identity_holds = false;
        }
    }
    return r;
}

bool lll_condition(unsigned k, unsigned d) {
    if (k == 0)
        return false;
    // e lies in [sum_{i<=N} 1/i!, that sum + 1/(N!·N)]
    const Rational rhs = Rational(mpz_class(1) << (k - 1));
    Rational partial = 1, term = 1;
    for (unsigned N = 1;; ++N) {
        term /= N;
        partial += term;
        const Rational lo = partial * (d + 1);
        const Rational hi = (partial + term / N) * (d + 1);
        if (hi <= rhs) return true;
        if (lo > rhs) return false;
    }
}

namespace {

std::vector<std::uint32_t> vertices_of(const Hypergraph& h, std::size_t f, const std::vector<std::size_t>& gs) {
    std::vector<std::uint32_t> vs = h.edges[f];
    for (auto g : gs)
        vs.insert(vs.end(), h.edges[g].begin(), h.edges[g].end());
    return sorted_unique(std::move(vs));
}

// Checks Pr(A_f ∧ meet_Y) = Pr(A_f)·Pr(meet_Y) for every Y ⊆ gs, depth first.
struct TupleDfs {
    const Fps& fps;
    const Event& af;
    Rational pr_f;
    const std::vector<Event>& ag;
    std::size_t checked = 0;
    bool ok = true;

    void run(std::size_t i, const Event& meet) {
        ++checked;
        if (pr(fps, af & meet) != pr_f * pr(fps, meet))
            ok = false;
        for (std::size_t j = i; j < ag.size() && ok; ++j)
            run(j + 1, meet & ag[j]);
    }
};

// sampled sub-tuples live on at most this many vertices
constexpr std::size_t kSampleVertices = 16;

void check_tuple(const Hypergraph& h, EdgeCheck& ec, const LllOptions& opt, std::mt19937_64& rng) {
    const auto& D = ec.disjoint_edges;
    auto all = vertices_of(h, ec.edge, D);
    if (all.size() <= 20 && D.size() <= 16) {
        ColoringSpace s(all);
        Event af = event_monochromatic(s, h.edges[ec.edge]);
        std::vector<Event> ag;
        for (auto g : D)
            ag.push_back(event_monochromatic(s, h.edges[g]));
        TupleDfs dfs{s.fps(), af, pr(s.fps(), af), ag};
        dfs.run(0, s.fps().full_event());
        ec.tuple_independent = dfs.ok;
        ec.subsets_checked = dfs.checked;
        return;
    }
    if (opt.require_exhaustive)
        throw PreconditionViolated("edge " + std::to_string(ec.edge) +
                                   " needs more than 20 vertices or 16 edges for an exhaustive tuple check");
    ec.tuple_sampled = true;
    ec.tuple_independent = true;
    std::vector<std::size_t> order = D;
    for (std::size_t s = 0; s < opt.samples && ec.tuple_independent; ++s) {
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t want = 1 + rng() % order.size();
        std::vector<std::size_t> Y;
        for (auto g : order) {
            if (Y.size() == want) break;
            auto trial = Y;
            trial.push_back(g);
            if (vertices_of(h, ec.edge, trial).size() <= kSampleVertices)
                Y = std::move(trial);
        }
        ColoringSpace sp(vertices_of(h, ec.edge, Y));
        Event af = event_monochromatic(sp, h.edges[ec.edge]);
        Event meet = sp.fps().full_event();
        for (auto g : Y)
            meet &= event_monochromatic(sp, h.edges[g]);
        ++ec.subsets_checked;
        if (pr(sp.fps(), af & meet) != pr(sp.fps(), af) * pr(sp.fps(), meet))
            ec.tuple_independent = false;
    }
}

void check_pairs(const Hypergraph& h, EdgeCheck& ec) {
    const auto& f = h.edges[ec.edge];
    for (auto gi : ec.disjoint_edges) {
        const auto& g = h.edges[gi];
        ColoringSpace s(vertices_of(h, ec.edge, {gi}));
        if (f.size() <= 4 && g.size() <= 4) {
            auto rep = bit_check(s.fps(), monochromatic_term(f.size()), monochromatic_term(g.size()),
                                 block_events(s, f), block_events(s, g));
            ++ec.pairs_bit_checked;
            if (!rep.all_passed()) ec.pairs_bit_ok = false;
        } else {
            Event a = event_monochromatic(s, f), b = event_monochromatic(s, g);
            ++ec.pairs_direct_checked;
            if (pr(s.fps(), a & b) != pr(s.fps(), a) * pr(s.fps(), b)) ec.pairs_bit_ok = false;
        }
    }
}

std::optional<std::vector<Color>> find_proper_coloring(const Hypergraph& h) {
    std::vector<std::uint32_t> masks;
    for (const auto& e : h.edges) {
        std::uint32_t m = 0;
        for (auto v : e) m |= std::uint32_t{1} << v;
        masks.push_back(m);
    }
    for (std::uint32_t chi = 0; chi < (std::uint32_t{1} << h.vertices); ++chi) {
        bool ok = std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) {
            const std::uint32_t b = chi & m;
            return b != 0 && b != m;
        });
        if (ok) {
            std::vector<Color> c(h.vertices);
            for (std::uint32_t v = 0; v < h.vertices; ++v)
                c[v] = (chi >> v) & 1 ? Color::blue : Color::red;
            return c;
        }
    }
    return std::nullopt;
}

} // namespace

LllReport verify_lll_hypothesis(const Hypergraph& h, const LllOptions& opt) {
    LllReport r;
    r.vertices = h.vertices;
    r.edges = h.edges.size();
    r.k = h.k();
    r.d = h.d();
    std::mt19937_64 rng(opt.seed);

    for (std::size_t f = 0; f < h.edges.size(); ++f) {
        EdgeCheck ec;
        ec.edge = f;
        for (std::size_t g = 0; g < h.edges.size(); ++g)
            if (g != f && !h.edges_meet(f, g)) ec.disjoint_edges.push_back(g);
        {
            ColoringSpace s(h.edges[f]);
            ec.pr = pr(s.fps(), event_monochromatic(s, h.edges[f]));
        }
        check_tuple(h, ec, opt, rng);
        check_pairs(h, ec);
        if (ec.tuple_sampled) r.exhaustive = false;
        if (!ec.tuple_independent || !ec.pairs_bit_ok) r.hypothesis_holds = false;
        r.per_edge.push_back(std::move(ec));

        for (std::size_t g = f + 1; g < h.edges.size(); ++g) {
            if (!h.edges_meet(f, g)) continue;
            auto vs = vertices_of(h, f, {g});
            if (vs.size() > 20) continue;
            ColoringSpace s(vs);
            Event a = event_monochromatic(s, h.edges[f]), b = event_monochromatic(s, h.edges[g]);
            DependenceWitness w{f, g, pr(s.fps(), a), pr(s.fps(), b), pr(s.fps(), a & b)};
            if (w.pr_fg != w.pr_f * w.pr_g) r.witnesses.push_back(std::move(w));
        }
    }

    r.condition = lll_condition(r.k, r.d);
    if (r.condition && h.vertices <= 20) {
        r.coloring_search_run = true;
        r.proper_coloring = find_proper_coloring(h);
    }
    return r;
}

} // namespace termalg
