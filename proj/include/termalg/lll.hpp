#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "termalg/probability.hpp"

namespace termalg {

enum class Color { red, blue };

// Vertices are 0..vertices-1. Each edge is stored sorted without repeats.
struct Hypergraph {
    std::uint32_t vertices = 0;
    std::vector<std::vector<std::uint32_t>> edges;

    Hypergraph() = default;
    Hypergraph(std::uint32_t n, std::vector<std::vector<std::uint32_t>> es);

    // minimum edge size (0 without edges)
    unsigned k() const;
    // maximum number of other edges meeting one edge
    unsigned d() const;
    bool edges_meet(std::size_t f, std::size_t g) const;
};

// Uniform space of all colorings of a vertex list. Outcome bit i is set when
// vertices()[i] is blue. At most 20 vertices.
class ColoringSpace {
public:
    explicit ColoringSpace(std::vector<std::uint32_t> vertices);
    static ColoringSpace of(const Hypergraph& h);

    const Fps& fps() const noexcept { return fps_; }
    const std::vector<std::uint32_t>& vertices() const noexcept { return vertices_; }
    std::size_t local_index(std::uint32_t v) const;

private:
    std::vector<std::uint32_t> vertices_;
    Fps fps_;
};

Event event_vertex_color(const ColoringSpace& s, std::uint32_t v, Color c);
Event event_monochromatic(const ColoringSpace& s, const std::vector<std::uint32_t>& f);
Event event_monochromatic(const ColoringSpace& s, const Hypergraph& h, std::size_t edge);

// A_{v,r}, A_{v,b} for each v of X in order.
std::vector<Event> block_events(const ColoringSpace& s, const std::vector<std::uint32_t>& X);
// Term for A_f over block_events(f): all generators x1,x3,.. or all x2,x4,..
Term monochromatic_term(std::size_t edge_size);

struct BlockReport {
    bool independent = false;
    std::size_t pairs_checked = 0;
    // |N_{U∪W}| = |N_U|·|N_W| and Pr(meet) = |N_{U∪W}| / 2^{|X|+|Y|}
    std::size_t identities_checked = 0;
    bool counting_identity_holds = true;
};

// Throws VerticesOverlap when X and Y share a vertex.
BlockReport verify_block_independence(const ColoringSpace& s, const std::vector<std::uint32_t>& X,
                                      const std::vector<std::uint32_t>& Y);

// Lower and upper rational bounds on e; true iff e(d+1) <= 2^(k-1).
bool lll_condition(unsigned k, unsigned d);

struct EdgeCheck {
    std::size_t edge = 0;
    Rational pr;
    std::vector<std::size_t> disjoint_edges;
    // A_f against the tuple of A_g over disjoint g
    bool tuple_independent = false;
    bool tuple_sampled = false;
    std::size_t subsets_checked = 0;
    // bit_check per disjoint g, over the generators of f and g
    bool pairs_bit_ok = true;
    std::size_t pairs_bit_checked = 0;
    std::size_t pairs_direct_checked = 0;
};

struct DependenceWitness {
    std::size_t f = 0;
    std::size_t g = 0;
    Rational pr_f, pr_g, pr_fg;
};

struct LllReport {
    std::uint32_t vertices = 0;
    std::size_t edges = 0;
    unsigned k = 0;
    unsigned d = 0;
    bool exhaustive = true;
    bool hypothesis_holds = true;
    std::vector<EdgeCheck> per_edge;
    std::vector<DependenceWitness> witnesses;
    bool condition = false;
    bool coloring_search_run = false;
    std::optional<std::vector<Color>> proper_coloring;
};

struct LllOptions {
    // fail with PreconditionViolated instead of falling back to sampling
    bool require_exhaustive = false;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

// Every probability is computed on the coloring space of just the vertices
// the events involve; colorings of the other vertices factor out.
LllReport verify_lll_hypothesis(const Hypergraph& h, const LllOptions& opt = {});

} // namespace termalg
