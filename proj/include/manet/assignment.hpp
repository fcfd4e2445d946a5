#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "manet/graph.hpp"
#include "manet/types.hpp"

namespace manet {

/// Partition of the present nodes into clusters.
///
/// A cluster head is the head of its own cluster, so head_of(ch) == ch.
/// `epoch` counts the operations that changed the set of cluster heads (the
/// dominant set).
class ClusterAssignment {
 public:
  ClusterAssignment() = default;
  explicit ClusterAssignment(std::size_t capacity)
      : roles_(capacity, Role::Absent), heads_(capacity, kNoNode), gateway_(capacity, 0) {}

  std::size_t capacity() const { return roles_.size(); }

  Role role(NodeId v) const { return roles_[v]; }
  bool is_head(NodeId v) const { return roles_[v] == Role::ClusterHead; }
  bool is_present(NodeId v) const { return v < roles_.size() && roles_[v] != Role::Absent; }
  /// Cluster head of v's cluster, or kNoNode when v is unassigned or absent.
  NodeId head_of(NodeId v) const { return heads_[v]; }
  bool is_gateway(NodeId v) const { return gateway_[v] != 0; }

  void make_head(NodeId v);
  void make_member(NodeId v, NodeId head);
  void make_unassigned(NodeId v);
  void remove(NodeId v);
  void set_gateway(NodeId v, bool flag) { gateway_[v] = flag ? 1 : 0; }

  /// Cluster heads in ascending order.
  std::vector<NodeId> heads() const;
  std::size_t head_count() const;
  /// Members of `head`'s cluster, excluding the head, ascending.
  std::vector<NodeId> members_of(NodeId head) const;

  std::uint64_t epoch() const { return epoch_; }
  void set_epoch(std::uint64_t e) { epoch_ = e; }

  friend bool operator==(const ClusterAssignment&, const ClusterAssignment&) = default;

 private:
  std::vector<Role> roles_;
  std::vector<NodeId> heads_;
  std::vector<std::uint8_t> gateway_;
  std::uint64_t epoch_ = 0;
};

bool same_heads(const ClusterAssignment& a, const ClusterAssignment& b);

/// Carries the epoch of `before` forward into `after`, adding one when the two
/// have different head sets.
void advance_epoch(const ClusterAssignment& before, ClusterAssignment& after);

/// Flags every non-head node that hears two or more cluster heads.
void mark_gateways(ClusterAssignment& a, const NeighborGraph& g);

/// Structural checks that hold after every clustering operation: every present
/// node in `g` has a non-absent role, no absent node in `g` carries one, and
/// every member points at a present cluster head.
/// Returns one message per violation.
std::vector<std::string> check_structure(const ClusterAssignment& a, const NeighborGraph& g);

/// Every node whose affiliation changed between `before` and `after` must be
/// adjacent to its new head in `g` (the graph at affiliation time).
std::vector<std::string> check_affiliations(const ClusterAssignment& before,
                                            const ClusterAssignment& after,
                                            const NeighborGraph& g);

}  // namespace manet
