#include "shapetop/connectedness.hpp"

#include <algorithm>

#include "shapetop/error.hpp"

namespace shapetop {

std::optional<Separation> find_separation(const Topology& t) {
  // S is connected iff its only complemented opens are 0 and S.
  for (const auto& c : t.opens()) {
    if (c.is_empty() || c == t.carrier()) {
      continue;
    }
    Shape d = difference(t.carrier(), c);
    if (t.is_open(d)) {
      return Separation{c, std::move(d)};
    }
  }
  return std::nullopt;
}

bool is_connected_part(const Shape& x, const Topology& t) {
  return !find_separation(subshape_topology(t, x)).has_value();
}

LocalConnectivity is_locally_connected(const Topology& t) {
  for (const auto& c : t.opens()) {
    if (c.is_empty()) {
      continue;
    }
    if (!is_connected_part(c, t)) {
      return LocalConnectivity{false, c};
    }
  }
  return {};
}

namespace {

bool boolean_algebra(const Topology& t) {
  const auto& opens = t.opens();
  const std::size_t n = opens.size();
  const auto bottom = t.index_of(Shape::empty(t.carrier().kind()));
  const auto top = t.index_of(t.carrier());
  if (!bottom || !top) {
    return false;
  }
  // Sum and product tables by open index; the family is closed, so every entry exists.
  std::vector<std::vector<std::size_t>> plus(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> times(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto s = t.index_of(sum(opens[i], opens[j]));
      const auto p = t.index_of(product(opens[i], opens[j]));
      if (!s || !p) {
        return false;
      }
      plus[i][j] = plus[j][i] = *s;
      times[i][j] = times[j][i] = *p;
    }
  }
  // Every element needs a lattice complement inside the family.
  for (std::size_t i = 0; i < n; ++i) {
    bool complemented = false;
    for (std::size_t j = 0; j < n && !complemented; ++j) {
      complemented = times[i][j] == *bottom && plus[i][j] == *top;
    }
    if (!complemented) {
      return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (times[a][plus[b][c]] != plus[times[a][b]][times[a][c]]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

EquivalenceReport is_totally_disconnected(const Topology& t) {
  EquivalenceReport r;
  r.disconnected = find_separation(t).has_value();

  const Basis reduced = reduce_basis(t);
  const auto& basis = reduced.elements();
  const auto& opens = t.opens();

  std::vector<Shape> nonempty;
  for (const auto& o : opens) {
    if (!o.is_empty()) {
      nonempty.push_back(o);
    }
  }
  auto is_minimal = [&](const Shape& c) {
    return std::none_of(nonempty.begin(), nonempty.end(),
                        [&](const Shape& o) { return o != c && part_of(o, c); });
  };
  // Minimal nonempty opens are reduced-basis elements and pass both checks, so only the
  // other opens are tested, the carrier first; the scan stops once both checks fail.
  std::vector<Shape> candidates{t.carrier()};
  for (const auto& o : nonempty) {
    if (o != t.carrier()) {
      candidates.push_back(o);
    }
  }
  bool connected_are_minimal = true;
  bool connected_in_basis = true;
  for (const auto& c : candidates) {
    if (!connected_are_minimal && !connected_in_basis) {
      break;
    }
    if (c.is_empty() || is_minimal(c)) {
      continue;
    }
    const bool in_basis = std::find(basis.begin(), basis.end(), c) != basis.end();
    if (in_basis && !connected_are_minimal) {
      continue;
    }
    if (!is_connected_part(c, t)) {
      continue;
    }
    connected_are_minimal = false;
    connected_in_basis = connected_in_basis && in_basis;
  }
  r.condition1 = r.disconnected && connected_are_minimal;
  r.connected_opens_in_basis = connected_in_basis;

  r.raw_condition2 = true;
  for (std::size_t i = 0; i < basis.size() && r.raw_condition2; ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!product(basis[i], basis[j]).is_empty()) {
        r.raw_condition2 = false;
        break;
      }
    }
  }

  r.raw_condition3 = std::all_of(opens.begin(), opens.end(),
                                 [&](const Shape& c) { return t.is_open(difference(t.carrier(), c)); });

  r.raw_condition4 = boolean_algebra(t);
  if (r.raw_condition4) {
    r.boolean_algebra_size = opens.size();
  }

  r.condition2 = r.disconnected && r.raw_condition2;
  r.condition3 = r.disconnected && r.raw_condition3;
  r.condition4 = r.disconnected && r.raw_condition4;
  return r;
}

ConnectivityReport report(const Shape& s, const Topology& t) {
  if (t.carrier() != s) {
    throw Error(ErrorCode::CarrierMismatch, "topology is not on the given shape");
  }
  ConnectivityReport r;
  r.witness = find_separation(t);
  r.structurally_connected = !r.witness.has_value();
  r.visually_connected = visually_connected(s);
  r.locally_connected = is_locally_connected(t).locally_connected;
  r.totally_disconnected = is_totally_disconnected(t).totally_disconnected();
  return r;
}

}  // namespace shapetop
