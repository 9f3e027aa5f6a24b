#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "glab/lgraph.hpp"

namespace glab {

enum class FamilyKind { nonzero_cycles, weight_ell_cycles, nonzero_A_paths };

struct FamilySpec {
    FamilyKind kind = FamilyKind::nonzero_cycles;
    Elem ell;            // weight_ell_cycles
    std::vector<int> A;  // nonzero_A_paths
    static FamilySpec nonzero() { return {}; }
    static FamilySpec weight(const Elem& l) { return {FamilyKind::weight_ell_cycles, l, {}}; }
    static FamilySpec apaths(std::vector<int> a) { return {FamilyKind::nonzero_A_paths, {}, std::move(a)}; }
    std::string name() const;  // "nonzero", "weight:2" (components joined by ;), "apaths"
};

// a cycle (closed) or an A-path
struct Member {
    std::vector<int> verts;
    std::vector<int> edges;
    bool closed = true;
    Cycle cycle() const { return {verts, edges}; }
    Path path() const { return {verts, edges}; }
};

struct EPCaps {
    int max_vertices = 24;
    int64_t max_family = 50000;
    int64_t enum_cap = kDefaultCap;  // raw cycle / path enumeration limit
};

std::vector<Member> enumerate_family(const LGraph& g, const FamilySpec& f, const EPCaps& caps = {});
// checks that m is a member of the family in g
bool is_member(const LGraph& g, const FamilySpec& f, const Member& m);

struct PackingResult {
    int value = 0;
    std::vector<Member> witness;
};
PackingResult max_packing(const LGraph& g, const FamilySpec& f, const EPCaps& caps = {});
// value = k, witness has 2k members; repetition allows a member to be listed twice
PackingResult max_half_integral_packing(const LGraph& g, const FamilySpec& f, bool allow_repetition = true,
                                        const EPCaps& caps = {});

struct HittingResult {
    int value = 0;
    std::vector<int> Z;
};
HittingResult min_hitting_set(const LGraph& g, const FamilySpec& f, const EPCaps& caps = {});

struct EPReport {
    int nu = 0, nu_half = 0, tau = 0;
    int64_t family_size = 0;
    std::vector<Member> packing, half_packing;
    std::vector<int> hitting_set;
};
// runs all three solvers and re-checks every witness independently of the solvers
EPReport ep_report(const LGraph& g, const FamilySpec& f, bool allow_repetition = true, const EPCaps& caps = {});

struct Instance {
    std::string id;
    LGraph g;
};
// CSV with header instance,family,nu,nu_half,tau,runtime_ms; rows sorted by instance id
std::string batch_report(const std::vector<Instance>& instances, const FamilySpec& f, bool with_runtime = true,
                         const EPCaps& caps = {});

}  // namespace glab
