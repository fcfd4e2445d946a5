#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace manet {

using NodeId = std::uint32_t;
using Tick = std::int64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Absent marks an ID slot that is not part of the network (not yet arrived or
// dead). Every present node carries one of the other three roles.
enum class Role : std::uint8_t { Absent, Unassigned, Member, ClusterHead };

enum class Algorithm : std::uint8_t { Paiwca, Wca, LowestId, HighestDegree, Mwis };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::Paiwca, Algorithm::Wca,
                                               Algorithm::LowestId, Algorithm::HighestDegree,
                                               Algorithm::Mwis};

std::string_view to_string(Algorithm a);
std::string_view to_string(Role r);

}  // namespace manet
