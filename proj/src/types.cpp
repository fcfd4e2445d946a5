#include "manet/types.hpp"

namespace manet {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Paiwca: return "paiwca";
    case Algorithm::Wca: return "wca";
    case Algorithm::LowestId: return "lowest_id";
    case Algorithm::HighestDegree: return "highest_degree";
    case Algorithm::Mwis: return "mwis";
  }
  return "unknown";
}

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Absent: return "absent";
    case Role::Unassigned: return "unassigned";
    case Role::Member: return "member";
    case Role::ClusterHead: return "cluster_head";
  }
  return "unknown";
}

}  // namespace manet
