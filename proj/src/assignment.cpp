#include "manet/assignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace manet {

void ClusterAssignment::make_head(NodeId v) {
  roles_[v] = Role::ClusterHead;
  heads_[v] = v;
}

void ClusterAssignment::make_member(NodeId v, NodeId head) {
  if (v == head) throw std::invalid_argument("make_member: node cannot be its own member");
  roles_[v] = Role::Member;
  heads_[v] = head;
}

void ClusterAssignment::make_unassigned(NodeId v) {
  roles_[v] = Role::Unassigned;
  heads_[v] = kNoNode;
  gateway_[v] = 0;
}

void ClusterAssignment::remove(NodeId v) {
  roles_[v] = Role::Absent;
  heads_[v] = kNoNode;
  gateway_[v] = 0;
}

std::vector<NodeId> ClusterAssignment::heads() const {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < roles_.size(); ++v) {
    if (roles_[v] == Role::ClusterHead) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

std::size_t ClusterAssignment::head_count() const {
  std::size_t n = 0;
  for (Role r : roles_) n += r == Role::ClusterHead ? 1 : 0;
  return n;
}

std::vector<NodeId> ClusterAssignment::members_of(NodeId head) const {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < roles_.size(); ++v) {
    if (roles_[v] == Role::Member && heads_[v] == head) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

bool same_heads(const ClusterAssignment& a, const ClusterAssignment& b) {
  const std::size_t n = std::max(a.capacity(), b.capacity());
  for (std::size_t v = 0; v < n; ++v) {
    const bool ha = v < a.capacity() && a.is_head(static_cast<NodeId>(v));
    const bool hb = v < b.capacity() && b.is_head(static_cast<NodeId>(v));
    if (ha != hb) return false;
  }
  return true;
}

void advance_epoch(const ClusterAssignment& before, ClusterAssignment& after) {
  after.set_epoch(before.epoch() + (same_heads(before, after) ? 0 : 1));
}

void mark_gateways(ClusterAssignment& a, const NeighborGraph& g) {
  for (std::size_t v = 0; v < a.capacity(); ++v) a.set_gateway(static_cast<NodeId>(v), false);
  for (NodeId v : g.node_ids()) {
    if (a.is_head(v) || !a.is_present(v)) continue;
    int heard = 0;
    for (NodeId u : g.neighbors(v)) heard += a.is_head(u) ? 1 : 0;
    a.set_gateway(v, heard >= 2);
  }
}

std::vector<std::string> check_structure(const ClusterAssignment& a, const NeighborGraph& g) {
  std::vector<std::string> errors;
  if (a.capacity() != g.capacity()) {
    errors.push_back("capacity mismatch between assignment and graph");
    return errors;
  }
  for (std::size_t i = 0; i < a.capacity(); ++i) {
    const auto v = static_cast<NodeId>(i);
    const std::string tag = "node " + std::to_string(v) + ": ";
    if (g.contains(v) != a.is_present(v)) {
      errors.push_back(tag + (g.contains(v) ? "present in graph but absent in assignment"
                                            : "absent from graph but holds a role"));
      continue;
    }
    switch (a.role(v)) {
      case Role::ClusterHead:
        if (a.head_of(v) != v) errors.push_back(tag + "cluster head not in its own cluster");
        break;
      case Role::Member: {
        const NodeId h = a.head_of(v);
        if (h == kNoNode || h >= a.capacity()) {
          errors.push_back(tag + "member without a head");
        } else if (!a.is_head(h)) {
          errors.push_back(tag + "member of " + std::to_string(h) + " which is not a head");
        }
        break;
      }
      case Role::Unassigned:
      case Role::Absent:
        if (a.head_of(v) != kNoNode) errors.push_back(tag + "unaffiliated node names a head");
        break;
    }
  }
  return errors;
}

std::vector<std::string> check_affiliations(const ClusterAssignment& before,
                                            const ClusterAssignment& after,
                                            const NeighborGraph& g) {
  std::vector<std::string> errors;
  for (std::size_t i = 0; i < after.capacity(); ++i) {
    const auto v = static_cast<NodeId>(i);
    if (after.role(v) != Role::Member) continue;
    const bool changed = i >= before.capacity() || before.role(v) != Role::Member ||
                         before.head_of(v) != after.head_of(v);
    if (changed && !g.adjacent(v, after.head_of(v))) {
      errors.push_back("node " + std::to_string(v) + ": affiliated with non-neighbor head " +
                       std::to_string(after.head_of(v)));
    }
  }
  return errors;
}

}  // namespace manet
