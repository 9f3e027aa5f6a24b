#pragma once

#include <map>
#include <optional>
#include <vector>

#include "glab/lgraph.hpp"

namespace glab {

struct Bridge {
    std::vector<int> attachments;  // vertices of B
    std::vector<int> interior;     // vertices outside B (empty for a single edge)
    std::vector<int> edges;
};

struct ThreeBlock {
    std::vector<int> verts;
    std::vector<Bridge> bridges;
};

// u,v cannot be separated by deleting at most two other vertices
std::vector<std::vector<char>> inseparable_matrix(const LGraph& g);
std::vector<ThreeBlock> three_blocks(const LGraph& g);

struct LabelledThreeBlock {
    std::vector<int> block;
    LGraph virt;                   // vertices = block, one edge per (pair, achievable weight)
    std::map<int, Path> realizer;  // virtual edge id -> B-path of the host
};

LabelledThreeBlock labelled_three_block(const LGraph& g, const ThreeBlock& b, int64_t cap = kDefaultCap);
Path expand_path(const LabelledThreeBlock& lb, const Path& p);
// expands a virtual cycle; nullopt when the realizing paths overlap
std::optional<Cycle> expand_cycle(const LGraph& g, const LabelledThreeBlock& lb, const Cycle& c);

struct ShiftOp {
    int v;
    Elem g;
    bool operator==(const ShiftOp& o) const { return v == o.v && g == o.g; }
};
using ShiftCertificate = std::vector<ShiftOp>;

LGraph apply_certificate(const LGraph& g, const ShiftCertificate& cert);

struct ShiftResult {
    bool reduced = false;
    ShiftCertificate cert;  // when reduced
    Cycle witness;          // otherwise: a nonzero cycle
};

ShiftResult shift_reduce(const LGraph& g);

struct BlockCertificate {
    std::vector<int> verts;
    std::vector<int> edges;
    std::optional<ShiftCertificate> cert;  // present when all labels there satisfy 2g = 0
};

struct BipartiteResult {
    bool bipartite = false;
    std::optional<Cycle> witness;
    std::vector<BlockCertificate> dossier;
};

BipartiteResult is_gamma_bipartite(const LGraph& g, int64_t cap = kDefaultCap);

// edge sets of the 2-connected blocks (bridges are single-edge blocks); loops excluded
std::vector<std::vector<int>> biconnected_blocks(const LGraph& g);

}  // namespace glab
