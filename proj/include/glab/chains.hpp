#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glab/lgraph.hpp"
#include "glab/walls.hpp"

namespace glab {

// core path P with rerouting paths Q[i]; P[i] is the subpath of the core sharing Q[i]'s endpoints
struct CycleChain {
    Path core;
    std::vector<Path> Q;
    std::vector<Path> P;
    int length() const { return (int)Q.size(); }
};

struct ClosedCycleChain {
    Cycle C;
    std::vector<Path> Q;
    std::vector<Path> Csub;
    int length() const { return (int)Q.size(); }
};

std::optional<std::string> validate_chain(const LGraph& g, const CycleChain& ch);
std::optional<std::string> validate_chain(const LGraph& g, const ClosedCycleChain& ch);

// alpha_i = weight(Q_i) - weight(P_i)
std::vector<Elem> increments(const LGraph& g, const CycleChain& ch);
std::vector<Elem> increments(const LGraph& g, const ClosedCycleChain& ch);
bool is_nonzero(const LGraph& g, const CycleChain& ch);
bool is_nonzero(const LGraph& g, const ClosedCycleChain& ch);

std::vector<int> chain_vertices(const CycleChain& ch);
std::vector<int> chain_vertices(const ClosedCycleChain& ch);
// the cycles P_i + Q_i
std::vector<Cycle> chain_cycles(const CycleChain& ch);

// closes the chain with a path joining the two ends of its core
ClosedCycleChain close_chain(const LGraph& g, const CycleChain& ch, const Path& closing);

// facially odd wall with at least 3l rows and 2 columns of bricks
CycleChain chain_from_odd_wall(const Wall& w, int l);
// facially odd wall with at least 3l rows and 4k-1 columns of bricks
std::vector<ClosedCycleChain> closed_chains_from_wall(const Wall& w, int k, int l);

struct PigeonholeResult {
    std::vector<int> I;  // 0-based link indices
    Elem alpha;
};

// the group must be Z/p^a; needs length >= p^(2a-1)(p-1) and every increment outside <p>
PigeonholeResult pigeonhole_select(const LGraph& g, const ClosedCycleChain& ch, int p, int a);
int64_t pigeonhole_length(int p, int a);

// reroutes the first j links of I, where j * alpha = target - weight(C)
Cycle reroute_to_weight(const LGraph& g, const ClosedCycleChain& ch, const PigeonholeResult& sel,
                        const Elem& target);

}  // namespace glab
