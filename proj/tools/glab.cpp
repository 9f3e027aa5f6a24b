#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "glab/io.hpp"
#include "glab/repro.hpp"

using namespace glab;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int64_t> ints(const std::string& s, char sep = ',') {
    std::vector<int64_t> out;
    for (auto& t : split(s, sep)) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw DomainError("not an integer: " + t);
        }
    }
    return out;
}

Group parse_group(const std::string& s) {
    std::vector<int> mods;
    for (auto x : ints(s)) mods.push_back((int)x);
    return make_group(mods);
}

Elem parse_elem(const Group& g, const std::string& s) {
    auto raw = ints(s);
    require((int)raw.size() == g.rank(), "element '" + s + "' does not match the group");
    return make_elem(g, raw);
}

std::vector<Elem> parse_elems(const Group& g, const std::string& s) {
    std::vector<Elem> out;
    for (auto& t : split(s, ';')) out.push_back(parse_elem(g, t));
    return out;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) std::cout << text;
    else write_text_file(out, text);
}

LGraph any_graph(const json& j) {
    std::string kind = j.value("kind", "graph");
    if (kind == "graph") return graph_from_json(j);
    if (j.contains("graph")) return graph_from_json(j.at("graph"));
    throw DomainError("document has no graph");
}

ClosedCycleChain closed_chain_from_json(const json& j) {
    ClosedCycleChain ch;
    ch.C = cycle_from_json(j.at("C"));
    for (auto& p : j.at("Q")) ch.Q.push_back(path_from_json(p));
    for (auto& p : j.at("Csub")) ch.Csub.push_back(path_from_json(p));
    return ch;
}

json chains_json(const std::vector<ClosedCycleChain>& cs, const LGraph& g) {
    json a = json::array();
    for (auto& c : cs) {
        json j = to_json(c);
        j["increments"] = increments(g, c);
        a.push_back(j);
    }
    return a;
}

json chain_json(const CycleChain& ch, const LGraph& g) {
    json j = to_json(ch);
    j["increments"] = increments(g, ch);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-labelled graph laboratory"};
    app.require_subcommand(1);
    std::function<void()> action;
    auto on = [&](CLI::App* sub, std::function<void()> fn) { sub->callback([&action, fn] { action = fn; }); };

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    std::string out, dot, group_s = "2", g_s = "1", weights_s, purity_s = "series";
    int n = 3, k = -1, m = 4, l = 2, r = 3, s = 3, t = 6, max_tree = 3, shifts = 0, p = 3, a = 1, q = 0;
    uint64_t seed = 0;
    auto common = [&](CLI::App* c) {
        c->add_option("--out", out, "output file (default stdout)");
        c->add_option("--dot", dot, "also write a DOT rendering");
    };
    auto seeded = [&](CLI::App* c) { c->add_option("--seed", seed, "random seed")->required(); };

    auto* gp = gen->add_subcommand("projective", "grid with order-two cross edges");
    gp->add_option("--n", n)->required();
    gp->add_option("--group", group_s);
    gp->add_option("--g", g_s);
    gp->add_option("--k", k);
    common(gp);
    auto write_graph = [&](const LGraph& g, json j) {
        emit(out, dump(j));
        if (!dot.empty()) write_text_file(dot, to_dot(g));
    };
    on(gp, [&] {
        Group grp = parse_group(group_s);
        LGraph g = projective_grid(n, grp, parse_elem(grp, g_s), k < 0 ? n : k);
        write_graph(g, to_json(g));
    });

    auto* gd = gen->add_subcommand("dnl", "Z/m grid with label l on the cross edges");
    gd->add_option("--n", n)->required();
    gd->add_option("--m", m)->required();
    gd->add_option("--l", l)->required();
    common(gd);
    on(gd, [&] {
        LGraph g = dnl_instance(n, m, l);
        write_graph(g, to_json(g));
    });

    auto* gw = gen->add_subcommand("wall", "facially odd elementary wall");
    gw->add_option("--r", r)->required();
    gw->add_option("--s", s)->required();
    gw->add_option("--group", group_s);
    auto* wopt = gw->add_option("--weights", weights_s, "brick weights, row-major, ';'-separated");
    auto* sopt = gw->add_option("--seed", seed, "random nonzero weights");
    wopt->excludes(sopt);
    common(gw);
    on(gw, [&] {
        Group grp = parse_group(group_s);
        if (weights_s.empty() && !*sopt) throw CLI::RequiredError("--weights or --seed");
        Wall w = weights_s.empty() ? facially_odd_wall(r, s, grp, seed)
                                   : facially_odd_wall(r, s, grp, parse_elems(grp, weights_s));
        write_graph(w.host, to_json(w));
    });

    auto* gl = gen->add_subcommand("linkage", "zero wall with an external linkage on its top nails");
    gl->add_option("--r", r)->required();
    gl->add_option("--purity", purity_s)->check(CLI::IsMember({"series", "nested", "crossing"}));
    gl->add_option("--weights", weights_s, "path weights, ';'-separated")->required();
    gl->add_option("--group", group_s);
    gl->add_option("--shifts", shifts, "random shifts applied afterwards (needs --seed)");
    auto* lseed = gl->add_option("--seed", seed);
    common(gl);
    on(gl, [&] {
        Group grp = parse_group(group_s);
        if (shifts > 0 && !*lseed) throw CLI::RequiredError("--seed");
        PairKind kind = purity_s == "series" ? PairKind::series
                        : purity_s == "nested" ? PairKind::nested : PairKind::crossing;
        auto wl = bipartite_wall_with_linkage(r, kind, parse_elems(grp, weights_s), grp, seed, shifts);
        write_graph(wl.wall.host, to_json(wl));
    });

    auto* gm = gen->add_subcommand("model", "gamma-odd K_t-model (verify and retry)");
    gm->add_option("--t", t)->required();
    gm->add_option("--group", group_s);
    gm->add_option("--weights", weights_s, "connecting edge weights in lexicographic pair order");
    gm->add_option("--max-tree", max_tree);
    seeded(gm);
    common(gm);
    on(gm, [&] {
        Group grp = parse_group(group_s);
        std::optional<std::vector<Elem>> ws;
        if (!weights_s.empty()) ws = parse_elems(grp, weights_s);
        KModel mod = odd_model(t, grp, ws, max_tree, seed);
        write_graph(mod.host, to_json(mod));
    });

    auto* gr = gen->add_subcommand("random", "random labelled multigraph");
    gr->add_option("--n", n)->required();
    gr->add_option("--m", m)->required();
    gr->add_option("--group", group_s);
    gr->add_option("--shifts", shifts, "zero labels shifted this many times instead of random labels");
    seeded(gr);
    common(gr);
    on(gr, [&] {
        Group grp = parse_group(group_s);
        LGraph g = random_graph(n, m, grp, seed);
        if (shifts > 0) g = random_bipartite_labelling(g, grp, seed, shifts);
        write_graph(g, to_json(g));
    });

    auto* gc = gen->add_subcommand("ladder", "closed nonzero chain over Z/p^a");
    gc->add_option("--p", p)->required();
    gc->add_option("--a", a)->required();
    gc->add_option("--q", q, "chain length (default p^(2a-1)(p-1))");
    seeded(gc);
    common(gc);
    on(gc, [&] {
        int len = q > 0 ? q : (int)pigeonhole_length(p, a);
        ChainInstance ci = ladder_closed_chain(p, a, len, seed);
        json j{{"kind", "chain_instance"}, {"graph", to_json(ci.g)}, {"chain", to_json(ci.chain)}};
        write_graph(ci.g, j);
    });

    // ---- check ----
    auto* check = app.add_subcommand("check", "certify properties");
    check->require_subcommand(1);
    std::string file;
    auto* cb = check->add_subcommand("bipartite", "gamma-bipartiteness with certificate or witness");
    cb->add_option("file", file)->required();
    common(cb);
    on(cb, [&] {
        LGraph g = any_graph(read_json_file(file));
        auto res = is_gamma_bipartite(g);
        json j{{"bipartite", res.bipartite}};
        if (res.witness) {
            j["witness"] = to_json(*res.witness);
            j["weight"] = weight(g, *res.witness);
        }
        json dos = json::array();
        for (auto& b : res.dossier) {
            json d{{"verts", b.verts}, {"edges", b.edges}};
            if (b.cert) d["certificate"] = to_json(*b.cert);
            dos.push_back(d);
        }
        j["blocks"] = dos;
        std::cout << (res.bipartite ? "true" : "false") << "\n";
        emit(out, dump(j));
        if (!dot.empty()) write_text_file(dot, to_dot(g));
    });

    auto* cw = check->add_subcommand("wall", "wall validity, facial oddness and wall bipartiteness");
    cw->add_option("file", file)->required();
    common(cw);
    on(cw, [&] {
        json doc = read_json_file(file);
        Wall w = wall_from_json(doc);
        auto fr = is_facially_odd(w);
        auto br = is_bipartite_wall(w);
        json zb = json::array();
        for (auto [i, jj] : fr.zero_bricks) zb.push_back(json::array({i, jj}));
        json j{{"valid", true}, {"facially_odd", fr.odd}, {"zero_bricks", zb}, {"bipartite", br.bipartite}};
        if (br.bipartite) j["certificate"] = to_json(br.cert);
        if (br.bad_path) j["bad_path"] = to_json(*br.bad_path);
        if (br.witness) j["witness"] = to_json(*br.witness);
        emit(out, dump(j));
        if (!dot.empty()) write_text_file(dot, to_dot(w.host));
    });

    // ---- decomp ----
    auto* dec = app.add_subcommand("decomp", "3-blocks, bridges and labelled 3-blocks");
    dec->add_option("file", file)->required();
    dec->add_option("--out", out);
    on(dec, [&] {
        LGraph g = any_graph(read_json_file(file));
        json blocks = json::array();
        for (auto& b : three_blocks(g)) {
            json br = json::array();
            for (auto& x : b.bridges)
                br.push_back(json{{"attachments", x.attachments}, {"interior", x.interior}, {"edges", x.edges}});
            auto lb = labelled_three_block(g, b);
            json virt = json::array();
            for (auto& e : lb.virt.edges())
                virt.push_back(json{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"label", e.label},
                                    {"realizer", to_json(lb.realizer.at(e.id))}});
            blocks.push_back(json{{"verts", b.verts}, {"bridges", br}, {"virtual_edges", virt}});
        }
        emit(out, dump(json{{"three_blocks", blocks}}));
    });

    // ---- model ----
    auto* model = app.add_subcommand("model", "K_t-model analysis");
    model->require_subcommand(1);
    int idx = 0, d = 1;
    auto* mc = model->add_subcommand("classify", "gamma-odd / gamma-bipartite / mixed");
    mc->add_option("file", file)->required();
    mc->add_option("--out", out);
    on(mc, [&] {
        KModel mod = model_from_json(read_json_file(file));
        auto cr = classify_model(mod);
        json subs = json::array();
        for (size_t i = 0; i < cr.subsets.size(); i++) {
            json x{{"subset", cr.subsets[i]}, {"nonzero", (bool)cr.nonzero[i]}};
            if (cr.witness[i]) x["witness"] = to_json(*cr.witness[i]);
            subs.push_back(x);
        }
        emit(out, dump(json{{"verdict", to_string(cr.verdict)}, {"subsets", subs}}));
    });
    auto* mcen = model->add_subcommand("central", "d-central and d-branching vertices of tree i");
    mcen->add_option("file", file)->required();
    mcen->add_option("--i", idx, "tree index (0-based)")->required();
    mcen->add_option("--d", d)->required();
    mcen->add_option("--out", out);
    on(mcen, [&] {
        KModel mod = model_from_json(read_json_file(file));
        require(idx >= 0 && idx < mod.t, "tree index out of range");
        std::vector<int> branching;
        for (int v : mod.tree_verts[idx])
            if (is_d_branching(mod, idx, v, d)) branching.push_back(v);
        emit(out, dump(json{{"i", idx}, {"d", d}, {"central", d_central_vertices(mod, idx, d)},
                            {"branching", branching}}));
    });
    auto* mch = model->add_subcommand("chain", "nonzero chain (t = 5l+1) or k closed chains (t = k(5l+1))");
    mch->add_option("file", file)->required();
    mch->add_option("--l", l)->required();
    mch->add_option("--k", k, "closed chains");
    mch->add_option("--out", out);
    on(mch, [&] {
        KModel mod = model_from_json(read_json_file(file));
        if (k < 0) emit(out, dump(chain_json(chain_from_odd_model(mod, l), mod.host)));
        else emit(out, dump(json{{"closed_chains", chains_json(closed_chains_from_model(mod, k, l), mod.host)}}));
    });

    // ---- linkage ----
    auto* link = app.add_subcommand("linkage", "linkages attached to a wall");
    link->require_subcommand(1);
    std::string mode_s = "integral";
    auto* lc = link->add_subcommand("classify", "pair kinds, purity and gamma-oddness");
    lc->add_option("file", file)->required();
    lc->add_option("--out", out);
    on(lc, [&] {
        auto wl = wall_linkage_from_json(read_json_file(file));
        const Linkage& L = wl.linkage;
        json pairs = json::array();
        for (int i = 0; i < L.size(); i++)
            for (int j = i + 1; j < L.size(); j++)
                pairs.push_back(json::array({i, j, to_string(classify_pair(L, i, j))}));
        auto pv = purity(L);
        json j{{"purity", pv.kind}, {"pairs", pairs}};
        if (pv.offending) j["offending"] = json::array({pv.offending->first, pv.offending->second});
        try {
            auto rep = is_gamma_odd_linkage(wl.wall, L);
            j["odd"] = rep.odd;
            j["shifted_weights"] = rep.shifted_weight;
        } catch (const DomainError& e) {
            j["odd_error"] = e.what();
        }
        emit(out, dump(j));
    });
    auto* lp = link->add_subcommand("pure", "pure sub-linkage of size t (needs t^3 paths)");
    lp->add_option("file", file)->required();
    lp->add_option("--t", t)->required();
    lp->add_option("--out", out);
    on(lp, [&] {
        auto wl = wall_linkage_from_json(read_json_file(file));
        Linkage P = extract_pure(wl.linkage, t);
        emit(out, dump(json{{"purity", purity(P).kind}, {"linkage", to_json(P)}}));
    });
    auto* lk = link->add_subcommand("pack", "k nonzero cycles from a pure odd linkage");
    lk->add_option("file", file)->required();
    lk->add_option("--k", k)->required();
    lk->add_option("--mode", mode_s)->check(CLI::IsMember({"integral", "half"}));
    lk->add_option("--out", out);
    on(lk, [&] {
        auto wl = wall_linkage_from_json(read_json_file(file));
        auto cs = packing_from_linkage(wl.wall, wl.linkage, k,
                                       mode_s == "half" ? PackMode::half_integral : PackMode::integral);
        json a = json::array();
        for (auto& c : cs) {
            json x = to_json(c);
            x["weight"] = weight(wl.wall.host, c);
            a.push_back(x);
        }
        emit(out, dump(json{{"mode", mode_s}, {"cycles", a}}));
    });
    auto* lch = link->add_subcommand("chain", "nonzero chain of length l, or k closed chains");
    lch->add_option("file", file)->required();
    lch->add_option("--l", l)->required();
    lch->add_option("--k", k, "closed chains");
    lch->add_option("--out", out);
    on(lch, [&] {
        auto wl = wall_linkage_from_json(read_json_file(file));
        const LGraph& g = wl.wall.host;
        if (k < 0) emit(out, dump(chain_json(chain_from_linkage(wl.wall, wl.linkage, l), g)));
        else emit(out, dump(json{{"closed_chains", chains_json(closed_chains_from_linkage(wl.wall, wl.linkage, k, l), g)}}));
    });

    // ---- chain ----
    auto* chain = app.add_subcommand("chain", "cycle-chains in walls and prime-power rerouting");
    chain->require_subcommand(1);
    auto* cwall = chain->add_subcommand("wall", "chain (or k closed chains) in a facially odd wall");
    cwall->add_option("file", file)->required();
    cwall->add_option("--l", l)->required();
    cwall->add_option("--k", k, "closed chains");
    cwall->add_option("--out", out);
    on(cwall, [&] {
        Wall w = wall_from_json(read_json_file(file));
        if (k < 0) emit(out, dump(chain_json(chain_from_odd_wall(w, l), w.host)));
        else emit(out, dump(json{{"closed_chains", chains_json(closed_chains_from_wall(w, k, l), w.host)}}));
    });
    std::string target_s;
    auto* crr = chain->add_subcommand("reroute", "cycle of a given weight from a closed chain over Z/p^a");
    crr->add_option("file", file)->required();
    crr->add_option("--p", p)->required();
    crr->add_option("--a", a)->required();
    crr->add_option("--target", target_s, "target weights, ';'-separated (default: all)");
    crr->add_option("--out", out);
    on(crr, [&] {
        json doc = read_json_file(file);
        LGraph g = any_graph(doc);
        ClosedCycleChain ch = closed_chain_from_json(doc.at("chain"));
        if (auto why = validate_chain(g, ch)) throw DomainError("invalid chain: " + *why);
        auto sel = pigeonhole_select(g, ch, p, a);
        std::vector<Elem> targets = target_s.empty() ? elements(g.group) : parse_elems(g.group, target_s);
        json cyc = json::array();
        for (auto& tg : targets) {
            Cycle c = reroute_to_weight(g, ch, sel, tg);
            json x = to_json(c);
            x["target"] = tg;
            x["weight"] = weight(g, c);
            cyc.push_back(x);
        }
        emit(out, dump(json{{"I", sel.I}, {"alpha", sel.alpha}, {"cycles", cyc}}));
    });

    // ---- ep ----
    auto* ep = app.add_subcommand("ep", "exact packing / hitting numbers");
    std::string family_s = "nonzero", ep_mode, A_s, input;
    std::vector<std::string> files;
    bool no_repeat = false;
    EPCaps caps;
    auto ep_opts = [&](CLI::App* c) {
        c->add_option("--family", family_s, "nonzero | weight:l | apaths (default nonzero)");
        c->add_option("--mode", ep_mode, "packing | half | hitting | report")
            ->check(CLI::IsMember({"packing", "half", "hitting", "report"}));
        c->add_option("--A", A_s, "comma-separated vertex set for apaths");
        c->add_flag("--no-repeat", no_repeat, "half-integral packings may not repeat a member");
        c->add_option("--max-vertices", caps.max_vertices);
        c->add_option("--max-family", caps.max_family);
        c->add_option("--input", input);
        c->add_option("files", files);
        c->add_option("--out", out);
    };
    ep_opts(ep);
    auto* solve = ep->add_subcommand("solve", "same as ep");
    ep_opts(solve);
    auto ep_run = [&] {
        if (!input.empty()) files.insert(files.begin(), input);
        if (files.empty()) throw CLI::RequiredError("input file");
        if (ep_mode.empty()) throw CLI::RequiredError("--mode");
        auto family = [&](const Group& g) {
            if (family_s == "nonzero") return FamilySpec::nonzero();
            if (family_s == "apaths") {
                std::vector<int> A;
                for (auto x : ints(A_s)) A.push_back((int)x);
                return FamilySpec::apaths(A);
            }
            if (family_s.rfind("weight:", 0) == 0) return FamilySpec::weight(parse_elem(g, family_s.substr(7)));
            throw DomainError("unknown family " + family_s);
        };
        if (ep_mode == "report") {
            std::vector<Instance> ins;
            for (auto& f : files) ins.push_back({std::filesystem::path(f).stem().string(), any_graph(read_json_file(f))});
            emit(out, batch_report(ins, family(ins.front().g.group), true, caps));
            return;
        }
        require(files.size() == 1, "this mode takes one input file");
        LGraph g = any_graph(read_json_file(files[0]));
        FamilySpec f = family(g.group);
        json j{{"family", f.name()}, {"mode", ep_mode}};
        auto members = [](const std::vector<Member>& ms) {
            json a = json::array();
            for (auto& x : ms) a.push_back(to_json(x));
            return a;
        };
        if (ep_mode == "packing") {
            auto r = max_packing(g, f, caps);
            j["nu"] = r.value;
            j["witness"] = members(r.witness);
        } else if (ep_mode == "half") {
            auto r = max_half_integral_packing(g, f, !no_repeat, caps);
            j["nu_half"] = r.value;
            j["repetition"] = !no_repeat;
            j["witness"] = members(r.witness);
        } else {
            auto r = min_hitting_set(g, f, caps);
            j["tau"] = r.value;
            j["hitting_set"] = r.Z;
        }
        emit(out, dump(j));
    };
    ep->callback([&] { action = ep_run; });
    solve->callback([&] { action = ep_run; });

    // ---- repro ----
    auto* repro = app.add_subcommand("repro", "run a reproduction suite and write its bundle");
    std::string suite;
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    repro->add_option("suite", suite)->required()->check(CLI::IsMember(choices));
    repro->add_option("--seed", seed, "suite seed")->default_val(1);
    repro->add_option("--out", out, "bundle file (default stdout)");
    on(repro, [&] {
        std::vector<std::string> todo = suite == "all" ? suite_names() : std::vector<std::string>{suite};
        json bundle = json::array();
        bool ok = true;
        for (auto& name : todo) {
            SuiteResult r = run_suite(name, seed);
            ok = ok && r.pass();
            bundle.push_back(to_json(r));
            std::cerr << name << ": " << std::count_if(r.items.begin(), r.items.end(), [](auto& i) { return i.pass; })
                      << "/" << r.items.size() << (r.pass() ? " PASS" : " FAIL") << "\n";
        }
        emit(out, dump(todo.size() == 1 ? bundle[0] : json{{"kind", "repro_all"}, {"seed", seed}, {"suites", bundle}}));
        if (!ok) throw DomainError("suite failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (action) action();
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
