#include "termalg/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace termalg {

namespace {

[[noreturn]] void bad(const std::string& why) { throw PreconditionViolated("bad JSON: " + why); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string text(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string())
        bad(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Json pos_json(const Position& p) {
    Json a = Json::array();
    for (auto i : p.path) a.push_back(i);
    return a;
}

Position pos_from(const Json& j) {
    if (!j.is_array())
        bad("a position must be an array");
    Position p;
    for (const auto& i : j) {
        if (!i.is_number_unsigned() || i.get<std::size_t>() == 0)
            bad("position entries are positive integers");
        p.path.push_back(i.get<std::size_t>());
    }
    return p;
}

Direction dir_from(const std::string& s) {
    if (s == "fwd") return Direction::forward;
    if (s == "rev") return Direction::reverse;
    bad("direction must be \"fwd\" or \"rev\", got \"" + s + "\"");
}

Scalar scalar_from(const Json& j) {
    if (j.is_number_integer()) return Scalar(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) return scalar_from_string(j.get<std::string>());
    bad("a scalar must be a string like \"3/4\" or an integer");
}

} // namespace

Json to_json(const RingCertificate& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json js{{"rule", to_string(s.rule)}, {"pos", pos_json(s.pos)}, {"dir", to_string(s.dir)}};
        if (s.r) js["r"] = scalar_to_string(*s.r);
        if (s.s) js["s"] = scalar_to_string(*s.s);
        if (s.u) js["u"] = serialize(*s.u);
        steps.push_back(std::move(js));
    }
    return {{"kind", "ring"},
            {"ring", c.ring.name()},
            {"source", serialize(c.source)},
            {"target", serialize(c.target)},
            {"steps", std::move(steps)}};
}

RingCertificate ring_certificate_from_json(const Json& j) {
    if (j.contains("kind") && text(j, "kind") != "ring")
        bad("expected a ring certificate");
    Ring ring = j.contains("ring") ? Ring::from_name(text(j, "ring")) : Ring::integers();
    RingCertificate c{ring, parse_ring_term(text(j, "source"), ring), parse_ring_term(text(j, "target"), ring), {}};
    const Json& steps = field(j, "steps");
    if (!steps.is_array())
        bad("'steps' must be an array");
    for (const auto& js : steps) {
        EtStep s{et_rule_from_string(text(js, "rule")), pos_from(field(js, "pos")), dir_from(text(js, "dir")),
                 {}, {}, {}};
        if (js.contains("r")) s.r = scalar_from(js.at("r"));
        if (js.contains("s")) s.s = scalar_from(js.at("s"));
        if (js.contains("u")) s.u = parse_ring_term(text(js, "u"), ring);
        c.steps.push_back(std::move(s));
    }
    return c;
}

Json to_json(const BoolCertificate& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json js{{"rule", to_string(s.rule)}, {"pos", pos_json(s.pos)}, {"dir", to_string(s.dir)}};
        if (s.u) js["u"] = serialize(*s.u);
        steps.push_back(std::move(js));
    }
    return {{"kind", "bool"},
            {"source", serialize(c.source)},
            {"target", serialize(c.target)},
            {"steps", std::move(steps)}};
}

BoolCertificate bool_certificate_from_json(const Json& j) {
    if (j.contains("kind") && text(j, "kind") != "bool")
        bad("expected a bool certificate");
    BoolCertificate c{parse_bool_term(text(j, "source")), parse_bool_term(text(j, "target")), {}};
    const Json& steps = field(j, "steps");
    if (!steps.is_array())
        bad("'steps' must be an array");
    for (const auto& js : steps) {
        BtStep s{bt_rule_from_string(text(js, "rule")), pos_from(field(js, "pos")), dir_from(text(js, "dir")), {}};
        if (js.contains("u")) s.u = parse_bool_term(text(js, "u"));
        c.steps.push_back(std::move(s));
    }
    return c;
}

Json to_json(const StandardPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({{"exp", k.entries()}, {"coef", scalar_to_string(c)}});
    Json j{{"ring", p.ring().name()}, {"flavor", p.flavor() == Flavor::infinite ? "inf" : "fixed"},
           {"terms", std::move(terms)}};
    if (p.flavor() == Flavor::fixed) j["width"] = p.width();
    return j;
}

StandardPolynomial polynomial_from_json(const Json& j) {
    // ring defaults to Z, fixed width to the longest exponent list
    Ring ring = j.contains("ring") ? Ring::from_name(text(j, "ring")) : Ring::integers();
    const std::string fl = text(j, "flavor");
    if (fl != "inf" && fl != "fixed")
        bad("flavor must be \"inf\" or \"fixed\"");
    const Flavor flavor = fl == "inf" ? Flavor::infinite : Flavor::fixed;
    std::size_t width = 0;
    if (flavor == Flavor::fixed && j.contains("width"))
        width = field(j, "width").get<std::size_t>();
    else if (flavor == Flavor::fixed)
        for (const auto& t : field(j, "terms"))
            width = std::max(width, field(t, "exp").size());
    StandardPolynomial p(ring, flavor, width);
    for (const auto& t : field(j, "terms")) {
        auto e = field(t, "exp").get<std::vector<std::uint32_t>>();
        p.accumulate(ExponentVector(std::move(e), flavor), ring.canonical(scalar_from(field(t, "coef"))));
    }
    return p;
}

SpaceFile space_from_json(const Json& j) {
    const Json& w = field(j, "weights");
    if (!w.is_array())
        bad("'weights' must be an array");
    std::vector<Rational> weights;
    for (const auto& x : w) weights.push_back(scalar_from(x));
    std::vector<std::string> names;
    if (j.contains("outcomes"))
        names = j.at("outcomes").get<std::vector<std::string>>();
    SpaceFile f{Fps(std::move(names), std::move(weights)), {}};
    if (j.contains("events")) {
        const Json& ev = j.at("events");
        if (!ev.is_object())
            bad("'events' must be an object");
        for (const auto& [name, members] : ev.items())
            f.events.emplace(name, f.space.event(members.get<std::vector<std::size_t>>()));
    }
    return f;
}

Json to_json(const SpaceFile& s) {
    Json names = Json::array(), weights = Json::array(), events = Json::object();
    for (std::size_t i = 0; i < s.space.size(); ++i) {
        names.push_back(s.space.outcome_name(i));
        weights.push_back(scalar_to_string(s.space.weight(i)));
    }
    for (const auto& [name, e] : s.events) events[name] = e.members();
    return {{"outcomes", std::move(names)}, {"weights", std::move(weights)}, {"events", std::move(events)}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    const Json& v = field(j, "vertices");
    if (!v.is_number_unsigned())
        bad("'vertices' must be a positive integer");
    return Hypergraph(v.get<std::uint32_t>(), field(j, "edges").get<std::vector<std::vector<std::uint32_t>>>());
}

Json to_json(const Hypergraph& h) { return {{"vertices", h.vertices}, {"edges", h.edges}}; }

Json to_json(const LllReport& r) {
    Json edges = Json::array();
    for (const auto& e : r.per_edge)
        edges.push_back({{"edge", e.edge},
                         {"pr", scalar_to_string(e.pr)},
                         {"disjoint_edges", e.disjoint_edges},
                         {"tuple_independent", e.tuple_independent},
                         {"tuple_mode", e.tuple_sampled ? "sampled, not exhaustive" : "exhaustive"},
                         {"subsets_checked", e.subsets_checked},
                         {"pairs_ok", e.pairs_bit_ok},
                         {"pairs_bit_checked", e.pairs_bit_checked},
                         {"pairs_direct_checked", e.pairs_direct_checked}});
    Json wit = Json::array();
    for (const auto& w : r.witnesses)
        wit.push_back({{"f", w.f},
                       {"g", w.g},
                       {"pr_f", scalar_to_string(w.pr_f)},
                       {"pr_g", scalar_to_string(w.pr_g)},
                       {"pr_fg", scalar_to_string(w.pr_fg)}});
    Json j{{"vertices", r.vertices},
           {"edges", r.edges},
           {"k", r.k},
           {"d", r.d},
           {"mode", r.exhaustive ? "exhaustive" : "sampled, not exhaustive"},
           {"hypothesis_holds", r.hypothesis_holds},
           {"per_edge", std::move(edges)},
           {"dependent_pairs", std::move(wit)},
           {"condition", r.condition},
           {"coloring_search_run", r.coloring_search_run}};
    if (r.proper_coloring) {
        std::string s;
        for (Color c : *r.proper_coloring) s += c == Color::red ? 'r' : 'b';
        j["proper_coloring"] = s;
    } else {
        j["proper_coloring"] = nullptr;
    }
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw PreconditionViolated("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

} // namespace termalg
