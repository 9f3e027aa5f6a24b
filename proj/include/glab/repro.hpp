#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "glab/io.hpp"

namespace glab {

struct SuiteItem {
    std::string id;
    bool pass = false;
    json data;
};

struct SuiteResult {
    std::string suite;
    uint64_t seed = 0;
    std::vector<SuiteItem> items;  // sorted by id
    bool pass() const;
};

const std::vector<std::string>& suite_names();
// throws DomainError for an unknown suite name
SuiteResult run_suite(const std::string& name, uint64_t seed);
json to_json(const SuiteResult& r);

// vertices of the rows 1 and 3l+1 met by any cycle of the chain (should be empty)
std::vector<int> boundary_hits(const Wall& w, int l, const std::vector<Cycle>& cycles);
std::vector<Cycle> chain_cycles(const ClosedCycleChain& ch);

}  // namespace glab
