#include "glab/io.hpp"

#include <fstream>
#include <sstream>

namespace glab {

json to_json(const Elem& e) { return json(e); }

json to_json(const LGraph& g) {
    json j;
    j["kind"] = "graph";
    j["group"] = g.group.mod;
    j["vertices"] = g.vertices();
    json es = json::array();
    for (auto& e : g.edges()) es.push_back(json::array({e.id, e.u, e.v, e.label}));
    j["edges"] = es;
    return j;
}

json to_json(const Path& p) { return json{{"verts", p.verts}, {"edges", p.edges}}; }
json to_json(const Cycle& c) { return json{{"verts", c.verts}, {"edges", c.edges}}; }

json to_json(const Member& m) {
    return json{{"type", m.closed ? "cycle" : "path"}, {"verts", m.verts}, {"edges", m.edges}};
}

json to_json(const ShiftCertificate& c) {
    json a = json::array();
    for (auto& op : c) a.push_back(json::array({op.v, op.g}));
    return a;
}

json to_json(const Wall& w) {
    json j;
    j["kind"] = "wall";
    j["r"] = w.r;
    j["s"] = w.s;
    j["graph"] = to_json(w.host);
    j["branch"] = w.branch;
    json segs = json::array();
    for (auto& p : w.seg) segs.push_back(to_json(p));
    j["seg"] = segs;
    return j;
}

json to_json(const Linkage& L) {
    json ps = json::array();
    for (auto& p : L.paths) ps.push_back(to_json(p));
    return json{{"X", L.X}, {"paths", ps}};
}

json to_json(const KModel& m) {
    json j;
    j["kind"] = "model";
    j["t"] = m.t;
    j["graph"] = to_json(m.host);
    json trees = json::array();
    for (int i = 0; i < m.t; i++) trees.push_back(json{{"verts", m.tree_verts[i]}, {"edges", m.tree_edges[i]}});
    j["trees"] = trees;
    j["conn"] = m.conn;
    return j;
}

namespace {
json paths(const std::vector<Path>& ps) {
    json a = json::array();
    for (auto& p : ps) a.push_back(to_json(p));
    return a;
}
std::vector<Path> paths_from(const json& a) {
    std::vector<Path> out;
    for (auto& p : a) out.push_back(path_from_json(p));
    return out;
}
}  // namespace

json to_json(const CycleChain& ch) {
    return json{{"kind", "chain"}, {"core", to_json(ch.core)}, {"Q", paths(ch.Q)}, {"P", paths(ch.P)}};
}

json to_json(const ClosedCycleChain& ch) {
    return json{{"kind", "closed_chain"}, {"C", to_json(ch.C)}, {"Q", paths(ch.Q)}, {"Csub", paths(ch.Csub)}};
}

json to_json(const WallLinkage& wl) {
    json j = to_json(wl.wall);
    j["kind"] = "wall_linkage";
    j["linkage"] = to_json(wl.linkage);
    return j;
}

Elem elem_from_json(const Group& g, const json& j) {
    std::vector<int64_t> raw;
    if (j.is_number_integer()) raw.push_back(j.get<int64_t>());
    else raw = j.get<std::vector<int64_t>>();
    require((int)raw.size() == g.rank(), "element has the wrong number of components");
    for (size_t i = 0; i < raw.size(); i++)
        require(raw[i] >= 0 && raw[i] < g.mod[i], "element component out of range");
    return make_elem(g, raw);
}

LGraph graph_from_json(const json& j) {
    try {
        LGraph g(make_group(j.at("group").get<std::vector<int>>()));
        for (int v : j.at("vertices").get<std::vector<int>>()) {
            require(!g.has_vertex(v), "duplicate vertex " + std::to_string(v));
            g.add_vertex(v);
        }
        for (auto& e : j.at("edges")) {
            require(e.is_array() && e.size() == 4, "edge entries are [id,u,v,label]");
            int id = e[0].get<int>(), u = e[1].get<int>(), v = e[2].get<int>();
            require(!g.has_edge(id), "duplicate edge id " + std::to_string(id));
            require(g.has_vertex(u) && g.has_vertex(v), "edge endpoint is not a vertex");
            g.add_edge_with_id(id, u, v, elem_from_json(g.group, e[3]));
        }
        return g;
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed graph: ") + ex.what());
    }
}

Path path_from_json(const json& j) {
    return Path{j.at("verts").get<std::vector<int>>(), j.at("edges").get<std::vector<int>>()};
}

Cycle cycle_from_json(const json& j) {
    return Cycle{j.at("verts").get<std::vector<int>>(), j.at("edges").get<std::vector<int>>()};
}

Wall wall_from_json(const json& j) {
    try {
        LGraph host = graph_from_json(j.at("graph"));
        int r = j.at("r").get<int>(), s = j.at("s").get<int>();
        require(r >= 1 && s >= 1, "wall dimensions must be positive");
        Wall w;
        if (j.contains("branch") && j.contains("seg")) {
            w.host = host;
            w.r = r;
            w.s = s;
            w.skel = elementary_skeleton(r, s, host.group);
            w.branch = j["branch"].get<std::vector<int>>();
            w.seg = paths_from(j["seg"]);
            require((int)w.branch.size() == (r + 1) * (2 * s + 2), "branch map has the wrong size");
            require((int)w.seg.size() == w.skel.m(), "segment list has the wrong size");
        } else {
            w = wall_on_host(host, r, s);
        }
        if (auto why = validate_wall(w)) throw DomainError("invalid wall: " + *why);
        return w;
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed wall: ") + ex.what());
    }
}

Linkage linkage_from_json(const json& j) {
    try {
        Linkage L;
        L.X = j.at("X").get<std::vector<int>>();
        L.paths = paths_from(j.at("paths"));
        return L;
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed linkage: ") + ex.what());
    }
}

KModel model_from_json(const json& j) {
    try {
        KModel m;
        m.host = graph_from_json(j.at("graph"));
        m.t = j.at("t").get<int>();
        for (auto& t : j.at("trees")) {
            m.tree_verts.push_back(t.at("verts").get<std::vector<int>>());
            m.tree_edges.push_back(t.at("edges").get<std::vector<int>>());
        }
        m.conn = j.at("conn").get<std::vector<std::vector<int>>>();
        if (auto why = validate_model(m)) throw DomainError("invalid model: " + *why);
        return m;
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed model: ") + ex.what());
    }
}

WallLinkage wall_linkage_from_json(const json& j) {
    WallLinkage wl{wall_from_json(j), {}};
    try {
        wl.linkage = linkage_from_json(j.at("linkage"));
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed linkage: ") + ex.what());
    }
    if (auto why = validate_wall_linkage(wl.wall, wl.linkage)) throw DomainError("invalid linkage: " + *why);
    return wl;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw DomainError(path + ": " + ex.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace glab
