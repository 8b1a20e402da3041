#pragma once

#include "tdl/census.hpp"
#include "tdl/containers.hpp"
#include "tdl/extremal.hpp"
#include "tdl/order.hpp"
#include "tdl/switching.hpp"

#include <string>

namespace tdl {

// Result bodies. Deterministic for a fixed (command, seed, budget): counts
// are decimal strings, key order is fixed, no timestamps or timings (those
// live in the run manifest, which is written separately).

std::string census_csv(const CensusRecord& record);
std::string census_json(const CensusRecord& record);

std::string extremal_json(const ExtremalResult& result, bool include_witnesses);

std::string trend_csv(const TrendReport& report);
std::string trend_json(const TrendReport& report);

std::string fas_json(const Digraph& g, const VertexOrdering& ordering);
std::string partition_json(const Digraph& g, const Partition& partition, bool local_opt);

std::string co_degree_json(const CoDegreeProfile& profile, const std::string& pattern,
                           const DeltaBoundReport* bound_report);
std::string delta_bound_json(const DeltaBoundReport& report);

std::string switch_forward_json(const SwitchForwardReport& report);
std::string switch_backward_json(const SwitchBackwardReport& report);
std::string switch_ratio_json(const SwitchRatioReport& report);

std::string sandwich_json(const SandwichReport& report);
std::string css_json(const CssReport& report);

}  // namespace tdl
