#include "shapetop/space.hpp"

#include <algorithm>
#include <set>

namespace shapetop {

namespace {

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

IndexSet unite(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string show(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::vector<SpacePoint> space_of(const Topology& t) {
  const Basis reduced = reduce_basis(t);
  std::vector<SpacePoint> points;
  points.reserve(reduced.elements().size());
  for (const auto& e : reduced.elements()) {
    points.push_back(SpacePoint{points.size(), e});
  }
  return points;
}

SetTopology star_topology(const Topology& t) {
  SetTopology st;
  st.points = space_of(t);
  st.open_sets.reserve(t.size());
  for (const auto& c : t.opens()) {
    IndexSet members;
    for (const auto& p : st.points) {
      if (part_of(p.shape, c)) {
        members.push_back(p.index);
      }
    }
    st.open_sets.push_back(std::move(members));
  }
  return st;
}

bool is_set_topology(const SetTopology& st) {
  const std::set<IndexSet> family(st.open_sets.begin(), st.open_sets.end());
  IndexSet full;
  for (const auto& p : st.points) {
    full.push_back(p.index);
  }
  std::sort(full.begin(), full.end());
  if (!family.contains(IndexSet{}) || !family.contains(full)) {
    return false;
  }
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (!family.contains(unite(a, b)) || !family.contains(intersect(a, b))) {
        return false;
      }
    }
  }
  return true;
}

IsomorphismCheck check_isomorphism(const Topology& t, const SetTopology& st) {
  const auto& opens = t.opens();
  if (st.open_sets.size() != opens.size()) {
    return {false, "topology has " + std::to_string(opens.size()) + " opens but the set topology has " +
                       std::to_string(st.open_sets.size()) + " open sets"};
  }
  const std::set<IndexSet> distinct(st.open_sets.begin(), st.open_sets.end());
  if (distinct.size() != st.open_sets.size()) {
    return {false, "two opens share an open set; the correspondence is not injective"};
  }
  if (!is_set_topology(st)) {
    return {false, "open sets are not closed under union and intersection"};
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      const bool parts = part_of(opens[i], opens[j]);
      const bool sets = subset(st.open_sets[i], st.open_sets[j]);
      if (parts != sets) {
        return {false, "order not preserved between open " + std::to_string(i) + " and open " +
                           std::to_string(j) + ": sets " + show(st.open_sets[i]) + " and " +
                           show(st.open_sets[j])};
      }
    }
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    std::vector<Shape> members;
    for (std::size_t idx : st.open_sets[i]) {
      if (idx >= st.points.size()) {
        return {false, "open set " + show(st.open_sets[i]) + " names a missing point"};
      }
      members.push_back(st.points[idx].shape);
    }
    if (sum_of(members, t.carrier().kind()) != opens[i]) {
      return {false, "points of open set " + show(st.open_sets[i]) + " do not sum to open " + std::to_string(i)};
    }
  }
  return {};
}

}  // namespace shapetop
