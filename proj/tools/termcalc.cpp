#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "termalg/json_io.hpp"
#include "termalg/lll.hpp"
#include "termalg/selftest.hpp"

using namespace termalg;

namespace {

// exit codes
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct Options {
    std::string ring = "Z";
    bool json = false;
    std::string certificate;
    std::uint64_t seed = 1;
    unsigned width = 0;
    std::string assign;
    std::string space;
    std::string left;
    std::string right;
    std::string hypergraph;
    bool exhaustive = false;
    std::string t, u, file;
};

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_certificate(const std::string& where, const Json& j) {
    if (where == "-") {
        emit_json(j);
        return;
    }
    std::ofstream out(where);
    if (!out)
        throw PreconditionViolated("cannot write " + where);
    out << j.dump(2) << '\n';
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Event> lookup(const SpaceFile& f, const std::string& names) {
    std::vector<Event> out;
    for (const auto& n : split_names(names)) {
        auto it = f.events.find(n);
        if (it == f.events.end())
            throw PreconditionViolated("space has no event named '" + n + "'");
        out.push_back(it->second);
    }
    return out;
}

std::string subset_string(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + names[idx[i]];
    return s + "}";
}

int ring_psi(const Options& o) {
    Ring R = Ring::from_name(o.ring);
    Term t = parse_ring_term(o.t, R);
    auto p = psi(t, R);
    if (o.json)
        emit_json({{"term", serialize(t)}, {"psi", to_json(p)}, {"rendered", render(p)}});
    else
        std::cout << "Ψ[" << serialize(t) << "] ≐ " << render(p) << "  (over " << R.name() << ")\n";
    return kTrue;
}

int ring_equiv(const Options& o) {
    Ring R = Ring::from_name(o.ring);
    Term t = parse_ring_term(o.t, R), u = parse_ring_term(o.u, R);
    auto cert = f_equivalence_certificate(t, u, R);
    if (cert && !o.certificate.empty())
        write_certificate(o.certificate, to_json(*cert));
    if (o.json) {
        Json j{{"equivalent", cert.has_value()},
               {"psi_left", render(psi(t, R))},
               {"psi_right", render(psi(u, R))},
               {"ring", R.name()}};
        if (cert) j["steps"] = cert->steps.size();
        if (o.certificate != "-") emit_json(j);
    } else if (o.certificate != "-") {
        if (cert)
            std::cout << "equivalent over " << R.name() << " (" << cert->steps.size() << " steps)\n";
        else
            std::cout << "not equivalent over " << R.name() << ": Ψ ≐ " << render(psi(t, R)) << " vs "
                      << render(psi(u, R)) << '\n';
    }
    return cert ? kTrue : kFalse;
}

int ring_normalize(const Options& o) {
    Ring R = Ring::from_name(o.ring);
    Term t = parse_ring_term(o.t, R);
    auto n = normalize_to_standard(t, R);
    if (!o.certificate.empty())
        write_certificate(o.certificate, to_json(n.certificate));
    if (o.certificate == "-")
        return kTrue;
    if (o.json)
        emit_json({{"standard", serialize(n.standard.term)},
                   {"carrier", to_json(n.standard.carrier)},
                   {"steps", n.certificate.steps.size()}});
    else
        std::cout << serialize(n.standard.term) << "\n  ≐ " << render(n.standard.carrier) << "  ("
                  << n.certificate.steps.size() << " steps)\n";
    return kTrue;
}

void report_replay(const ReplayResult& r, bool json, std::size_t steps) {
    if (json) {
        Json j{{"valid", r.ok}, {"steps", steps}};
        if (!r.ok) {
            j["failed_step"] = *r.failed_step;
            j["message"] = r.message;
        }
        emit_json(j);
    } else if (r.ok) {
        std::cout << "valid (" << steps << " steps)\n";
    } else {
        std::cout << "invalid at step " << *r.failed_step << ": " << r.message << '\n';
    }
}

int ring_cert_verify(const Options& o) {
    auto c = ring_certificate_from_json(read_json_file(o.file));
    auto r = verify_certificate(c);
    report_replay(r, o.json, c.steps.size());
    return r.ok ? kTrue : kFalse;
}

int bool_dnf(const Options& o) {
    Term t = parse_bool_term(o.t);
    unsigned n = o.width ? o.width : std::max(1u, max_variable(t));
    auto r = to_dnf(t, n);
    if (!o.certificate.empty())
        write_certificate(o.certificate, to_json(r.certificate));
    if (o.certificate == "-")
        return kTrue;
    if (o.json) {
        Json types = Json::array();
        for (const auto& ty : r.dnf.types()) types.push_back(ty);
        emit_json({{"dnf", serialize(r.dnf.to_term())}, {"width", n}, {"types", types},
                   {"steps", r.certificate.steps.size()}});
    } else {
        std::cout << serialize(r.dnf.to_term()) << "  (" << r.dnf.size() << " monomials, "
                  << r.certificate.steps.size() << " steps)\n";
    }
    return kTrue;
}

int bool_eval_cmd(const Options& o) {
    Term t = parse_bool_term(o.t);
    auto names = split_names(o.assign);
    // std::vector<bool> has no contiguous storage for a span
    std::unique_ptr<bool[]> args(new bool[names.size()]);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] != "0" && names[i] != "1")
            throw PreconditionViolated("--assign takes 0/1 values, got '" + names[i] + "'");
        args[i] = names[i] == "1";
    }
    bool v = bool_eval<bool>(t, two_element_algebra(), std::span<const bool>(args.get(), names.size()));
    if (o.json)
        emit_json({{"term", serialize(t)}, {"value", v}});
    else
        std::cout << (v ? 1 : 0) << '\n';
    return v ? kTrue : kFalse;
}

int bool_cert_verify(const Options& o) {
    auto c = bool_certificate_from_json(read_json_file(o.file));
    auto r = verify_certificate(c);
    report_replay(r, o.json, c.steps.size());
    return r.ok ? kTrue : kFalse;
}

int prob_indep(const Options& o) {
    auto f = space_from_json(read_json_file(o.space));
    auto ln = split_names(o.left), rn = split_names(o.right);
    auto r = tuples_independent(f.space, lookup(f, o.left), lookup(f, o.right));
    if (o.json) {
        Json j{{"independent", r.independent}, {"pairs_checked", r.pairs_checked}};
        if (r.witness)
            j["witness"] = {{"left", subset_string(r.witness->first, ln)},
                            {"right", subset_string(r.witness->second, rn)}};
        emit_json(j);
    } else if (r.independent) {
        std::cout << "independent (" << r.pairs_checked << " subset pairs)\n";
    } else {
        std::cout << "not independent: " << subset_string(r.witness->first, ln) << " vs "
                  << subset_string(r.witness->second, rn) << '\n';
    }
    return r.independent ? kTrue : kFalse;
}

int prob_bit(const Options& o) {
    auto f = space_from_json(read_json_file(o.space));
    Term t = parse_bool_term(o.t), u = parse_bool_term(o.u);
    auto r = bit_check(f.space, t, u, lookup(f, o.left), lookup(f, o.right));
    if (o.json) {
        emit_json({{"pr_a", scalar_to_string(r.pr_a)},
                   {"pr_b", scalar_to_string(r.pr_b)},
                   {"pr_ab", scalar_to_string(r.pr_ab)},
                   {"independent", r.independent},
                   {"pipeline_run", r.pipeline_run},
                   {"dnf_values_match", r.dnf_values_match},
                   {"wedge_value_matches", r.wedge_value_matches},
                   {"disjoint_sum_holds", r.disjoint_sum_holds},
                   {"monomials_factor", r.monomials_factor},
                   {"sums_factor", r.sums_factor},
                   {"all_passed", r.all_passed()}});
    } else {
        std::cout << "Pr(a) = " << r.pr_a << ", Pr(b) = " << r.pr_b << ", Pr(a∧b) = " << r.pr_ab << '\n'
                  << (r.all_passed() ? "independent" : "FAILED") << '\n';
    }
    return r.all_passed() ? kTrue : kFalse;
}

int lll_cmd(const Options& o) {
    Hypergraph h = hypergraph_from_json(read_json_file(o.hypergraph));
    if (o.exhaustive && h.vertices > 20)
        throw PreconditionViolated("--exhaustive needs at most 20 vertices");
    LllOptions opt;
    opt.require_exhaustive = o.exhaustive;
    opt.seed = o.seed;
    auto r = verify_lll_hypothesis(h, opt);
    if (o.json) {
        emit_json(to_json(r));
    } else {
        std::cout << "|V| = " << r.vertices << ", |E| = " << r.edges << ", k = " << r.k << ", d = " << r.d
                  << (r.exhaustive ? "" : "  [sampled, not exhaustive]") << '\n';
        for (const auto& e : r.per_edge)
            std::cout << "  edge " << e.edge << ": Pr = " << e.pr << ", independent of " << e.disjoint_edges.size()
                      << " disjoint edges: " << (e.tuple_independent && e.pairs_bit_ok ? "yes" : "NO") << '\n';
        for (const auto& w : r.witnesses)
            std::cout << "  edges " << w.f << " and " << w.g << " meet and are dependent: " << w.pr_fg
                      << " ≠ " << w.pr_f << "·" << w.pr_g << '\n';
        std::cout << "e(d+1) ≤ 2^(k-1): " << (r.condition ? "true" : "false") << '\n';
        if (r.coloring_search_run) {
            if (r.proper_coloring) {
                std::cout << "proper coloring: ";
                for (Color c : *r.proper_coloring) std::cout << (c == Color::red ? 'r' : 'b');
                std::cout << '\n';
            } else {
                std::cout << "no proper coloring exists\n";
            }
        }
    }
    return r.hypothesis_holds ? kTrue : kFalse;
}

int selftest_cmd(const Options& o) {
    bool ok = true;
    Json lines = Json::array();
    for (const auto& l : run_selftest(o.seed)) {
        ok = ok && l.ok;
        if (o.json)
            lines.push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
        else
            std::cout << (l.ok ? "ok   " : "FAIL ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << '\n';
    }
    if (o.json) emit_json({{"ok", ok}, {"suites", lines}});
    return ok ? kTrue : kFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"termcalc: ring terms, Boolean terms, independence and hypergraph coloring"};
    app.require_subcommand(1);
    Options o;
    int code = kTrue;
    std::function<int()> action;

    app.add_flag("--json", o.json, "structured output");
    app.add_option("--seed", o.seed, "seed for randomized checks");

    auto* ring = app.add_subcommand("ring", "ring terms")->require_subcommand(1);
    auto ring_opt = [&](CLI::App* c) {
        c->add_option("--ring", o.ring, "Z, Zm:<m> or Q")->capture_default_str();
        c->add_flag("--json", o.json, "structured output");
    };
    auto* psi_c = ring->add_subcommand("psi", "evaluate Ψ");
    psi_c->add_option("term", o.t)->required();
    ring_opt(psi_c);
    psi_c->callback([&] { action = [&] { return ring_psi(o); }; });

    auto* eq_c = ring->add_subcommand("equiv", "decide equivalence, optionally emit a certificate");
    eq_c->add_option("t", o.t)->required();
    eq_c->add_option("u", o.u)->required();
    eq_c->add_option("--certificate", o.certificate, "write the certificate here (- for stdout)");
    ring_opt(eq_c);
    eq_c->callback([&] { action = [&] { return ring_equiv(o); }; });

    auto* norm_c = ring->add_subcommand("normalize", "rewrite to the standard term");
    norm_c->add_option("term", o.t)->required();
    norm_c->add_option("--certificate", o.certificate, "write the certificate here (- for stdout)");
    ring_opt(norm_c);
    norm_c->callback([&] { action = [&] { return ring_normalize(o); }; });

    auto* rcv = ring->add_subcommand("cert-verify", "replay a ring certificate");
    rcv->add_option("file", o.file)->required();
    rcv->add_flag("--json", o.json, "structured output");
    rcv->callback([&] { action = [&] { return ring_cert_verify(o); }; });

    auto* boolc = app.add_subcommand("bool", "Boolean terms")->require_subcommand(1);
    auto* dnf_c = boolc->add_subcommand("dnf", "rewrite to the n-standard DNF");
    dnf_c->add_option("term", o.t)->required();
    dnf_c->add_option("--width", o.width, "n (default: largest variable index)");
    dnf_c->add_option("--certificate", o.certificate, "write the certificate here (- for stdout)");
    dnf_c->add_flag("--json", o.json, "structured output");
    dnf_c->callback([&] { action = [&] { return bool_dnf(o); }; });

    auto* ev_c = boolc->add_subcommand("eval", "evaluate in {0,1}");
    ev_c->add_option("term", o.t)->required();
    ev_c->add_option("--assign", o.assign, "values of x1,x2,.. e.g. 1,0,1")->required();
    ev_c->add_flag("--json", o.json, "structured output");
    ev_c->callback([&] { action = [&] { return bool_eval_cmd(o); }; });

    auto* bcv = boolc->add_subcommand("cert-verify", "replay a Boolean certificate");
    bcv->add_option("file", o.file)->required();
    bcv->add_flag("--json", o.json, "structured output");
    bcv->callback([&] { action = [&] { return bool_cert_verify(o); }; });

    auto* prob = app.add_subcommand("prob", "finite probability spaces")->require_subcommand(1);
    auto prob_opt = [&](CLI::App* c) {
        c->add_option("--space", o.space, "space JSON file")->required();
        c->add_option("--left", o.left, "comma separated event names")->required();
        c->add_option("--right", o.right, "comma separated event names")->required();
        c->add_flag("--json", o.json, "structured output");
    };
    auto* ind_c = prob->add_subcommand("indep", "check tuple independence");
    prob_opt(ind_c);
    ind_c->callback([&] { action = [&] { return prob_indep(o); }; });

    auto* bit_c = prob->add_subcommand("bit", "independence of t(left) and u(right)");
    bit_c->add_option("t", o.t)->required();
    bit_c->add_option("u", o.u)->required();
    prob_opt(bit_c);
    bit_c->callback([&] { action = [&] { return prob_bit(o); }; });

    auto* lll_c = app.add_subcommand("lll", "verify the local lemma hypothesis on a hypergraph");
    lll_c->add_option("--hypergraph", o.hypergraph, "hypergraph JSON file")->required();
    lll_c->add_flag("--exhaustive", o.exhaustive, "refuse to fall back to sampling");
    lll_c->add_flag("--json", o.json, "structured output");
    lll_c->add_option("--seed", o.seed, "seed for sampled checks");
    lll_c->callback([&] { action = [&] { return lll_cmd(o); }; });

    auto* st = app.add_subcommand("selftest", "run the bundled invariant suites");
    st->add_flag("--json", o.json, "structured output");
    st->add_option("--seed", o.seed, "seed");
    st->callback([&] { action = [&] { return selftest_cmd(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        code = action();
    } catch (const ParseError& e) {
        std::cerr << "termcalc: parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "termcalc: " << e.what() << '\n';
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "termcalc: bad JSON: " << e.what() << '\n';
        return kInputError;
    }
    return code;
}
