#include "glab/epsolve.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace glab {

std::string FamilySpec::name() const {
    switch (kind) {
        case FamilyKind::nonzero_cycles: return "nonzero";
        case FamilyKind::weight_ell_cycles: {
            std::string s = "weight:";
            for (size_t i = 0; i < ell.size(); i++) s += (i ? ";" : "") + std::to_string(ell[i]);
            return s;
        }
        default: return "apaths";
    }
}

namespace {

bool cycle_matches(const LGraph& g, const FamilySpec& f, const Cycle& c) {
    Elem w = weight(g, c);
    return f.kind == FamilyKind::weight_ell_cycles ? w == f.ell : !is_zero(w);
}

void check_spec(const LGraph& g, const FamilySpec& f) {
    if (f.kind == FamilyKind::weight_ell_cycles) {
        if (!is_valid(g.group, f.ell)) throw DomainError("ell is not an element of the group");
    }
    if (f.kind == FamilyKind::nonzero_A_paths)
        for (int a : f.A)
            if (!g.has_vertex(a)) throw DomainError("A contains a vertex not in the graph");
}

}  // namespace

std::vector<Member> enumerate_family(const LGraph& g, const FamilySpec& f, const EPCaps& caps) {
    check_spec(g, f);
    if (g.n() > caps.max_vertices)
        throw CapExceeded("graph has " + std::to_string(g.n()) + " vertices, cap is " +
                          std::to_string(caps.max_vertices));
    std::vector<Member> out;
    if (f.kind == FamilyKind::nonzero_A_paths) {
        std::set<int> A(f.A.begin(), f.A.end());
        for (auto& p : enumerate_A_paths(g, {A.begin(), A.end()}, true, caps.enum_cap))
            out.push_back({p.verts, p.edges, false});
    } else {
        for (auto& c : enumerate_cycles(g, caps.enum_cap))
            if (cycle_matches(g, f, c)) out.push_back({c.verts, c.edges, true});
    }
    if ((int64_t)out.size() > caps.max_family)
        throw CapExceeded("family has " + std::to_string(out.size()) + " members, cap is " +
                          std::to_string(caps.max_family));
    return out;
}

bool is_member(const LGraph& g, const FamilySpec& f, const Member& m) {
    if (m.closed) {
        if (f.kind == FamilyKind::nonzero_A_paths) return false;
        Cycle c = m.cycle();
        return is_cycle(g, c) && cycle_matches(g, f, c);
    }
    if (f.kind != FamilyKind::nonzero_A_paths) return false;
    Path p = m.path();
    if (!is_path(g, p) || p.trivial()) return false;
    std::set<int> A(f.A.begin(), f.A.end());
    if (!A.count(p.front()) || !A.count(p.back())) return false;
    for (size_t i = 1; i + 1 < p.verts.size(); i++)
        if (A.count(p.verts[i])) return false;
    return !is_zero(weight(g, p));
}

namespace {

using Mask = uint64_t;

struct Family {
    std::vector<Member> members;
    std::vector<Mask> mask;
};

Family masked(const LGraph& g, const FamilySpec& f, const EPCaps& caps) {
    if (g.n() > 29) throw CapExceeded("exact solvers support at most 29 vertices");
    Family F;
    F.members = enumerate_family(g, f, caps);
    for (auto& m : F.members) {
        Mask k = 0;
        for (int v : m.verts) k |= Mask(1) << g.vindex(v);
        F.mask.push_back(k);
    }
    return F;
}

// indices of members whose vertex set is inclusion-minimal, one per distinct set
std::vector<int> minimal_members(const Family& F) {
    std::map<Mask, int> first;
    for (int i = 0; i < (int)F.mask.size(); i++) first.emplace(F.mask[i], i);
    std::vector<std::pair<int, Mask>> by_size;
    for (auto& [m, i] : first) by_size.push_back({__builtin_popcountll(m), m});
    std::sort(by_size.begin(), by_size.end());
    std::vector<Mask> kept;
    std::vector<int> out;
    for (auto& [c, m] : by_size) {
        bool dominated = false;
        for (Mask k : kept)
            if ((k & m) == k) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(m), out.push_back(first[m]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact packing with per-vertex capacity 1 or 2. Vertices are processed in index order;
// at vertex v we decide which members with lowest vertex v to take.
class Packer {
public:
    Packer(int n, int cap, bool repeat, std::vector<Mask> masks)
        : n_(n), cap_(cap), repeat_(repeat), masks_(std::move(masks)), group_(n) {
        for (int i = 0; i < (int)masks_.size(); i++) group_[__builtin_ctzll(masks_[i])].push_back(i);
    }

    int solve(std::vector<int>& chosen) {
        int best = go(0, 0, 0);
        rebuild(0, 0, 0, chosen);
        return best;
    }

private:
    int n_, cap_;
    bool repeat_;
    std::vector<Mask> masks_;
    std::vector<std::vector<int>> group_;
    std::unordered_map<uint64_t, int> memo_;

    bool fits(Mask once, Mask twice, Mask m) const {
        return cap_ == 1 ? (once & m) == 0 : (twice & m) == 0;
    }
    void put(Mask& once, Mask& twice, Mask m) const {
        if (cap_ == 1) {
            once |= m;
        } else {
            twice |= once & m;
            once ^= m;
            once &= ~twice;
        }
    }

    // every option at v as (members, next state)
    template <class F>
    void options(int v, Mask once, Mask twice, F&& fn) const {
        Mask bit = Mask(1) << v;
        auto next = [&](Mask o, Mask t, std::vector<int> pick) {
            fn(std::move(pick), o & ~bit, t & ~bit);
        };
        next(once, twice, {});
        const auto& gr = group_[v];
        for (size_t a = 0; a < gr.size(); a++) {
            Mask ma = masks_[gr[a]];
            if (!fits(once, twice, ma)) continue;
            Mask o1 = once, t1 = twice;
            put(o1, t1, ma);
            next(o1, t1, {gr[a]});
            if (cap_ < 2) continue;
            for (size_t b = repeat_ ? a : a + 1; b < gr.size(); b++) {
                Mask mb = masks_[gr[b]];
                if (!fits(o1, t1, mb)) continue;
                Mask o2 = o1, t2 = t1;
                put(o2, t2, mb);
                next(o2, t2, {gr[a], gr[b]});
            }
        }
    }

    int go(int v, Mask once, Mask twice) {
        if (v == n_) return 0;
        uint64_t key = (uint64_t)v | (once << 5) | (twice << 34);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int best = 0;
        options(v, once, twice, [&](std::vector<int> pick, Mask o, Mask t) {
            best = std::max(best, (int)pick.size() + go(v + 1, o, t));
        });
        memo_[key] = best;
        return best;
    }

    void rebuild(int v, Mask once, Mask twice, std::vector<int>& out) {
        if (v == n_) return;
        int want = go(v, once, twice);
        bool done = false;
        options(v, once, twice, [&](std::vector<int> pick, Mask o, Mask t) {
            if (done || (int)pick.size() + go(v + 1, o, t) != want) return;
            done = true;
            out.insert(out.end(), pick.begin(), pick.end());
            rebuild(v + 1, o, t, out);
        });
    }
};

}  // namespace

PackingResult max_packing(const LGraph& g, const FamilySpec& f, const EPCaps& caps) {
    Family F = masked(g, f, caps);
    auto idx = minimal_members(F);
    std::vector<Mask> ms;
    for (int i : idx) ms.push_back(F.mask[i]);
    std::vector<int> chosen;
    PackingResult res;
    res.value = Packer(g.n(), 1, false, ms).solve(chosen);
    for (int c : chosen) res.witness.push_back(F.members[idx[c]]);
    return res;
}

PackingResult max_half_integral_packing(const LGraph& g, const FamilySpec& f, bool allow_repetition,
                                        const EPCaps& caps) {
    Family F = masked(g, f, caps);
    std::vector<int> idx;
    if (allow_repetition) {
        idx = minimal_members(F);
    } else {
        for (int i = 0; i < (int)F.members.size(); i++) idx.push_back(i);
    }
    std::vector<Mask> ms;
    for (int i : idx) ms.push_back(F.mask[i]);
    std::vector<int> chosen;
    int total = Packer(g.n(), 2, allow_repetition, ms).solve(chosen);
    PackingResult res;
    res.value = total / 2;
    for (int i = 0; i < 2 * res.value; i++) res.witness.push_back(F.members[idx[chosen[i]]]);
    return res;
}

namespace {

bool hit_search(const std::vector<Mask>& ms, Mask Z, int k, Mask& out) {
    int pick = -1, size = 99;
    for (int i = 0; i < (int)ms.size(); i++)
        if (!(ms[i] & Z)) {
            int c = __builtin_popcountll(ms[i]);
            if (c < size) size = c, pick = i;
        }
    if (pick < 0) {
        out = Z;
        return true;
    }
    if (k == 0) return false;
    for (Mask m = ms[pick]; m; m &= m - 1) {
        Mask bit = m & -m;
        if (hit_search(ms, Z | bit, k - 1, out)) return true;
    }
    return false;
}

FamilySpec restrict_spec(const FamilySpec& f, const std::vector<int>& Z) {
    FamilySpec r = f;
    std::set<int> z(Z.begin(), Z.end());
    r.A.clear();
    for (int a : f.A)
        if (!z.count(a)) r.A.push_back(a);
    return r;
}

}  // namespace

HittingResult min_hitting_set(const LGraph& g, const FamilySpec& f, const EPCaps& caps) {
    Family F = masked(g, f, caps);
    auto idx = minimal_members(F);
    std::vector<Mask> ms;
    for (int i : idx) ms.push_back(F.mask[i]);
    HittingResult res;
    for (int k = 0; k <= g.n(); k++) {
        Mask Z = 0;
        if (!hit_search(ms, 0, k, Z)) continue;
        res.value = k;
        for (int i = 0; i < g.n(); i++)
            if (Z >> i & 1) res.Z.push_back(g.vertices()[i]);
        break;
    }
    LGraph rest = delete_vertices(g, res.Z);
    if (!enumerate_family(rest, restrict_spec(f, res.Z), caps).empty())
        throw InternalError("hitting set misses a member");
    return res;
}

EPReport ep_report(const LGraph& g, const FamilySpec& f, bool allow_repetition, const EPCaps& caps) {
    EPReport rep;
    rep.family_size = (int64_t)enumerate_family(g, f, caps).size();
    auto P = max_packing(g, f, caps);
    auto H = max_half_integral_packing(g, f, allow_repetition, caps);
    auto T = min_hitting_set(g, f, caps);
    rep.nu = P.value;
    rep.nu_half = H.value;
    rep.tau = T.value;
    rep.packing = P.witness;
    rep.half_packing = H.witness;
    rep.hitting_set = T.Z;

    std::map<int, int> mult;
    for (auto& m : P.witness) {
        if (!is_member(g, f, m)) throw InternalError("packing witness is not a family member");
        for (int v : m.verts)
            if (++mult[v] > 1) throw InternalError("packing witness is not disjoint");
    }
    if ((int)P.witness.size() != P.value) throw InternalError("packing witness size mismatch");
    mult.clear();
    for (auto& m : H.witness) {
        if (!is_member(g, f, m)) throw InternalError("half-integral witness is not a family member");
        for (int v : m.verts)
            if (++mult[v] > 2) throw InternalError("half-integral witness exceeds multiplicity 2");
    }
    if ((int)H.witness.size() != 2 * H.value) throw InternalError("half-integral witness size mismatch");
    LGraph rest = delete_vertices(g, T.Z);
    if (!enumerate_family(rest, restrict_spec(f, T.Z), caps).empty())
        throw InternalError("hitting set misses a member");
    if (rep.nu > rep.tau) throw InternalError("packing larger than hitting set");
    if (allow_repetition && rep.nu > rep.nu_half) throw InternalError("half-integral value below integral value");
    return rep;
}

std::string batch_report(const std::vector<Instance>& instances, const FamilySpec& f, bool with_runtime,
                         const EPCaps& caps) {
    std::vector<const Instance*> order;
    for (auto& in : instances) order.push_back(&in);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->id < b->id; });
    std::ostringstream os;
    os << "instance,family,nu,nu_half,tau" << (with_runtime ? ",runtime_ms" : "") << "\n";
    for (auto* in : order) {
        auto t0 = std::chrono::steady_clock::now();
        EPReport r = ep_report(in->g, f, true, caps);
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        os << in->id << "," << f.name() << "," << r.nu << "," << r.nu_half << "," << r.tau;
        if (with_runtime) os << "," << (int64_t)ms;
        os << "\n";
    }
    return os.str();
}

}  // namespace glab
