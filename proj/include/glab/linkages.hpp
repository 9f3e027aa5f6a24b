#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glab/chains.hpp"
#include "glab/walls.hpp"

namespace glab {

// disjoint X-paths; X is listed in its linear order
struct Linkage {
    std::vector<int> X;
    std::vector<Path> paths;
    int size() const { return (int)paths.size(); }
};

enum class PairKind { series, nested, crossing };
std::string to_string(PairKind k);

// endpoints given as positions in X, in any order
PairKind classify_pair(std::pair<int, int> p, std::pair<int, int> q);
PairKind classify_pair(const Linkage& L, int a, int b);

struct PurityVerdict {
    std::string kind;  // series | nested | crossing | impure
    std::optional<std::pair<int, int>> offending;  // first pair disagreeing with the first pair's kind
};
PurityVerdict purity(const Linkage& L);

std::optional<std::string> validate_linkage(const LGraph& g, const Linkage& L);
// endpoint positions (left < right) of every path
std::vector<std::pair<int, int>> endpoint_positions(const Linkage& L);
Linkage sublinkage(const Linkage& L, const std::vector<int>& idx);
// paths reordered by left endpoint, each oriented left to right
Linkage sorted_linkage(const Linkage& L);

// pure sub-linkage of size >= t; needs |L| >= t^3
Linkage extract_pure(const Linkage& L, int t);

// checks that L is a linkage of the wall: endpoints are top nails and interiors avoid the wall
std::optional<std::string> validate_wall_linkage(const Wall& w, const Linkage& L);

struct OddLinkageReport {
    std::vector<char> odd;           // per path
    std::vector<Elem> shifted_weight;  // weight of each path once the wall is reduced to zero
    ShiftCertificate cert;
};
OddLinkageReport is_gamma_odd_linkage(const Wall& w, const Linkage& L);

enum class PackMode { integral, half_integral };
std::vector<Cycle> packing_from_linkage(const Wall& w, const Linkage& L, int k, PackMode mode);

CycleChain chain_from_linkage(const Wall& w, const Linkage& L, int l);
std::vector<ClosedCycleChain> closed_chains_from_linkage(const Wall& w, const Linkage& L, int k, int l);

}  // namespace glab
