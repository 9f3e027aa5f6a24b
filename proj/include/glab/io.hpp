#pragma once
#include <string>

#include "glab/chains.hpp"
#include "glab/decomp.hpp"
#include "glab/epsolve.hpp"
#include "glab/generators.hpp"
#include "glab/linkages.hpp"
#include "glab/models.hpp"
#include "glab/walls.hpp"
#include "json.hpp"

namespace glab {

using json = nlohmann::ordered_json;

json to_json(const Elem& e);
json to_json(const LGraph& g);  // {"kind":"graph","group":[..],"vertices":[..],"edges":[[id,u,v,[..]],..]}
json to_json(const Path& p);
json to_json(const Cycle& c);
json to_json(const Member& m);
json to_json(const ShiftCertificate& c);
json to_json(const Wall& w);
json to_json(const Linkage& L);
json to_json(const KModel& m);
json to_json(const CycleChain& ch);
json to_json(const ClosedCycleChain& ch);
json to_json(const WallLinkage& wl);

Elem elem_from_json(const Group& g, const json& j);
LGraph graph_from_json(const json& j);
Path path_from_json(const json& j);
Cycle cycle_from_json(const json& j);
Wall wall_from_json(const json& j);
Linkage linkage_from_json(const json& j);
KModel model_from_json(const json& j);
WallLinkage wall_linkage_from_json(const json& j);

json read_json_file(const std::string& path);
// pretty-printed with two-space indent and a trailing newline
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const json& j);

}  // namespace glab
