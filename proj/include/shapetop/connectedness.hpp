#pragma once

#include <cstddef>
#include <optional>

#include "shapetop/topology.hpp"

namespace shapetop {

/// Two nonempty disjoint opens summing to the carrier.
struct Separation {
  Shape c;
  Shape d;
};

/// A separation of the carrier, if one exists. Searches the complemented opens.
std::optional<Separation> find_separation(const Topology& t);

/// Whether x has no separation in its subshape topology. Throws Error(MemberNotPart).
bool is_connected_part(const Shape& x, const Topology& t);

struct LocalConnectivity {
  bool locally_connected = true;
  std::optional<Shape> failing_open;
};

LocalConnectivity is_locally_connected(const Topology& t);

/// The four characterizations of a totally disconnected topology, each computed on its own.
///
/// Conditions 2-4 share the premise that the carrier is disconnected; the raw_* fields
/// hold them without it.
struct EquivalenceReport {
  bool disconnected = false;
  /// Carrier disconnected and every connected nonempty open is a minimal nonempty open.
  bool condition1 = false;
  /// Reduced basis consists of pairwise disjoint nonempty parts.
  bool condition2 = false;
  /// Every open is closed-open.
  bool condition3 = false;
  /// The opens form a finite Boolean algebra with bottom 0 and top the carrier.
  bool condition4 = false;
  bool raw_condition2 = false;
  bool raw_condition3 = false;
  bool raw_condition4 = false;
  /// Literal reading: every connected nonempty open is a reduced-basis element.
  bool connected_opens_in_basis = false;
  std::size_t boolean_algebra_size = 0;  // number of opens when condition 4 holds

  bool all_agree() const {
    return condition1 == condition2 && condition2 == condition3 && condition3 == condition4;
  }
  bool totally_disconnected() const { return condition1; }
};

EquivalenceReport is_totally_disconnected(const Topology& t);

struct ConnectivityReport {
  bool structurally_connected = true;
  std::optional<Separation> witness;  // present iff not structurally connected
  bool visually_connected = true;
  bool locally_connected = true;
  bool totally_disconnected = false;
};

/// Throws Error(CarrierMismatch) unless t is a topology on s.
ConnectivityReport report(const Shape& s, const Topology& t);

}  // namespace shapetop
