#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shapetop/topology.hpp"

namespace shapetop {

/// A point of the space of a shape: one reduced-basis element.
struct SpacePoint {
  std::size_t index = 0;
  Shape shape;

  friend bool operator==(const SpacePoint&, const SpacePoint&) = default;
};

using IndexSet = std::vector<std::size_t>;  // sorted, distinct

/// A finite topology on the points of a space.
///
/// When built by star_topology, open_sets[i] corresponds to the i-th open of the source
/// topology.
struct SetTopology {
  std::vector<SpacePoint> points;
  std::vector<IndexSet> open_sets;

  friend bool operator==(const SetTopology&, const SetTopology&) = default;
};

/// Reduced-basis elements of t, indexed in listing order.
std::vector<SpacePoint> space_of(const Topology& t);

/// For each open C of t (in t's order), the set of basis points embedded in C.
SetTopology star_topology(const Topology& t);

/// Contains the empty set and the full point set and is closed under union and intersection.
bool is_set_topology(const SetTopology& st);

struct IsomorphismCheck {
  bool ok = true;
  std::string witness;  // empty when ok
};

/// Verifies that opens()[i] -> open_sets[i] is an order isomorphism onto a set topology
/// whose members sum back to their opens.
IsomorphismCheck check_isomorphism(const Topology& t, const SetTopology& st);

}  // namespace shapetop
