#include "shapetop/topology.hpp"

#include <algorithm>
#include <set>

#include "shapetop/error.hpp"

namespace shapetop {

namespace {

using OpenSet = std::set<Shape, ListingOrder>;

std::string describe(const Shape& s) {
  std::string out = "{";
  if (s.kind() == Kind::U0) {
    for (const auto& p : s.points()) {
      out += " (" + p.x.to_string() + "," + p.y.to_string() + ")";
    }
  } else {
    for (const auto& seg : s.segments()) {
      out += " (" + seg.a().x.to_string() + "," + seg.a().y.to_string() + ")-(" +
             seg.b().x.to_string() + "," + seg.b().y.to_string() + ")";
    }
  }
  return out + " }";
}

void require_part(const Shape& x, const Shape& carrier, const char* what) {
  if (x.kind() != carrier.kind()) {
    throw Error(ErrorCode::KindMismatch, std::string(what) + " has kind " + std::string(to_string(x.kind())) +
                                             ", carrier has kind " +
                                             std::string(to_string(carrier.kind())));
  }
  if (!part_of(x, carrier)) {
    throw Error(ErrorCode::MemberNotPart, std::string(what) + " " + describe(x) + " is not part of the carrier");
  }
}

std::vector<Shape> sorted_unique(std::vector<Shape> v) {
  std::sort(v.begin(), v.end(), ListingOrder{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_budget(const OpenSet& all, std::size_t max_opens) {
  if (all.size() > max_opens) {
    throw Error(ErrorCode::GeneratorBudgetExceeded,
                "generated family exceeds " + std::to_string(max_opens) + " opens");
  }
}

// Least family containing the seed closed under pairwise sums and, when requested,
// pairwise products. Each round adds all new sums, then all new products; only pairs
// touching an element added in the previous round are revisited.
std::vector<Shape> close_family(const std::vector<Shape>& seed, bool with_products, std::size_t max_opens) {
  OpenSet all(seed.begin(), seed.end());
  check_budget(all, max_opens);
  std::vector<Shape> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Shape> added;
    const std::vector<Shape> snapshot(all.begin(), all.end());
    for (const auto& y : frontier) {
      for (const auto& x : snapshot) {
        Shape s = sum(x, y);
        if (all.insert(s).second) {
          added.push_back(std::move(s));
          check_budget(all, max_opens);
        }
      }
    }
    if (with_products) {
      std::vector<Shape> recent = frontier;
      recent.insert(recent.end(), added.begin(), added.end());
      const std::vector<Shape> current(all.begin(), all.end());
      for (const auto& y : recent) {
        for (const auto& x : current) {
          Shape p = product(x, y);
          if (all.insert(p).second) {
            added.push_back(std::move(p));
            check_budget(all, max_opens);
          }
        }
      }
    }
    frontier = std::move(added);
  }
  return std::vector<Shape>(all.begin(), all.end());
}

bool expressible_as_sum(const Shape& target, std::span<const Shape> elements) {
  std::vector<Shape> below;
  for (const auto& e : elements) {
    if (part_of(e, target)) {
      below.push_back(e);
    }
  }
  return sum_of(below, target.kind()) == target;
}

}  // namespace

Topology make_topology_unchecked(Shape carrier, std::vector<Shape> opens) {
  return Topology(std::move(carrier), sorted_unique(std::move(opens)));
}

Topology Topology::from_opens(Shape carrier, std::vector<Shape> opens) {
  opens = sorted_unique(std::move(opens));
  const TopologyCheck check = is_topology(opens, carrier);
  if (!check.ok) {
    throw Error(ErrorCode::NotATopology, check.violation);
  }
  return Topology(std::move(carrier), std::move(opens));
}

std::optional<std::size_t> Topology::index_of(const Shape& x) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), x, ListingOrder{});
  if (it != opens_.end() && *it == x) {
    return static_cast<std::size_t>(it - opens_.begin());
  }
  return std::nullopt;
}

bool Topology::is_open(const Shape& x) const { return index_of(x).has_value(); }

TopologyCheck is_topology(std::span<const Shape> family, const Shape& carrier) {
  for (const auto& m : family) {
    require_part(m, carrier, "member");
  }
  const OpenSet members(family.begin(), family.end());
  TopologyCheck report;
  if (!members.contains(Shape::empty(carrier.kind()))) {
    report.ok = false;
    report.violation = "the empty shape is missing";
    return report;
  }
  if (!members.contains(carrier)) {
    report.ok = false;
    report.violation = "the carrier is missing";
    return report;
  }
  const std::vector<Shape> list(members.begin(), members.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const Shape s = sum(list[i], list[j]);
      if (!members.contains(s)) {
        report.ok = false;
        report.violation = "sum of " + describe(list[i]) + " and " + describe(list[j]) + " is missing";
        report.witness.emplace(list[i], list[j]);
        return report;
      }
      const Shape p = product(list[i], list[j]);
      if (!members.contains(p)) {
        report.ok = false;
        report.violation = "product of " + describe(list[i]) + " and " + describe(list[j]) + " is missing";
        report.witness.emplace(list[i], list[j]);
        return report;
      }
    }
  }
  return report;
}

Topology generate_topology(std::span<const Shape> parts, const Shape& carrier, const GenerateOptions& options) {
  if (parts.empty()) {
    throw Error(ErrorCode::EmptyGenerator, "no generating parts");
  }
  std::vector<Shape> seed;
  for (const auto& p : parts) {
    require_part(p, carrier, "generator");
    if (p.is_empty()) {
      throw Error(ErrorCode::EmptyGenerator, "generating parts must be nonempty");
    }
    seed.push_back(p);
  }
  if (sum_of(parts, carrier.kind()) != carrier) {
    if (!options.add_carrier_if_needed) {
      throw Error(ErrorCode::DoesNotExhaust, "generators do not sum to the carrier");
    }
    seed.push_back(carrier);
  }
  seed.push_back(Shape::empty(carrier.kind()));
  return make_topology_unchecked(carrier, close_family(seed, true, options.max_opens));
}

RefineResult refine(const Topology& t, std::span<const Shape> parts, std::size_t max_opens) {
  std::vector<Shape> seed = t.opens();
  std::vector<Shape> already;
  for (const auto& p : parts) {
    require_part(p, t.carrier(), "new part");
    if (t.is_open(p)) {
      already.push_back(p);
    } else {
      seed.push_back(p);
    }
  }
  if (seed.size() == t.opens().size()) {
    return RefineResult{t, std::move(already)};
  }
  return RefineResult{make_topology_unchecked(t.carrier(), close_family(seed, true, max_opens)),
                      std::move(already)};
}

BasisCheck is_basis(std::span<const Shape> elements, const Shape& carrier) {
  for (const auto& e : elements) {
    require_part(e, carrier, "basis element");
  }
  std::vector<Shape> list;
  for (const auto& e : elements) {
    if (!e.is_empty()) {
      list.push_back(e);
    }
  }
  list = sorted_unique(std::move(list));
  BasisCheck report;
  if (sum_of(list, carrier.kind()) != carrier) {
    report.ok = false;
    report.violation = "elements do not sum to the carrier";
    return report;
  }
  const OpenSet members(list.begin(), list.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const Shape p = product(list[i], list[j]);
      if (p.is_empty() || members.contains(p) || expressible_as_sum(p, list)) {
        continue;
      }
      report.ok = false;
      report.violation = "product of " + describe(list[i]) + " and " + describe(list[j]) +
                         " is neither an element nor a sum of elements";
      report.witness.emplace(list[i], list[j]);
      return report;
    }
  }
  return report;
}

bool is_reduced(std::span<const Shape> elements) {
  for (const auto& e : elements) {
    std::vector<Shape> others;
    for (const auto& o : elements) {
      if (o != e && part_of(o, e)) {
        others.push_back(o);
      }
    }
    if (!others.empty() && sum_of(others, e.kind()) == e) {
      return false;
    }
  }
  return true;
}

Basis Basis::from_elements(Shape carrier, std::vector<Shape> elements) {
  const BasisCheck check = is_basis(elements, carrier);
  if (!check.ok) {
    throw Error(ErrorCode::NotABasis, check.violation);
  }
  std::erase_if(elements, [](const Shape& s) { return s.is_empty(); });
  elements = sorted_unique(std::move(elements));
  const bool reduced = is_reduced(elements);
  return Basis(std::move(carrier), std::move(elements), reduced);
}

Topology generate_from_basis(const Basis& b, std::size_t max_opens) {
  std::vector<Shape> seed = b.elements();
  seed.push_back(Shape::empty(b.carrier().kind()));
  return make_topology_unchecked(b.carrier(), close_family(seed, false, max_opens));
}

Basis reduce_basis(const Basis& b) {
  std::vector<Shape> kept;
  for (const auto& e : b.elements()) {
    std::vector<Shape> below;
    for (const auto& o : b.elements()) {
      if (o != e && part_of(o, e)) {
        below.push_back(o);
      }
    }
    if (below.empty() || sum_of(below, e.kind()) != e) {
      kept.push_back(e);
    }
  }
  return Basis(b.carrier(), std::move(kept), true);
}

Basis reduce_basis(const Topology& t) {
  std::vector<Shape> nonempty;
  for (const auto& o : t.opens()) {
    if (!o.is_empty()) {
      nonempty.push_back(o);
    }
  }
  // A topology is a basis of itself.
  return reduce_basis(Basis(t.carrier(), std::move(nonempty), false));
}

Topology subshape_topology(const Topology& t, const Shape& x) {
  require_part(x, t.carrier(), "subshape");
  if (x.is_empty()) {
    throw Error(ErrorCode::EmptyShape, "subshape topology needs a nonempty part");
  }
  std::vector<Shape> opens;
  opens.reserve(t.size());
  for (const auto& c : t.opens()) {
    opens.push_back(product(x, c));
  }
  return make_topology_unchecked(x, std::move(opens));
}

Basis subshape_basis(const Basis& b, const Shape& x) {
  require_part(x, b.carrier(), "subshape");
  if (x.is_empty()) {
    throw Error(ErrorCode::EmptyShape, "subshape basis needs a nonempty part");
  }
  std::vector<Shape> elements;
  for (const auto& e : b.elements()) {
    Shape p = product(x, e);
    if (!p.is_empty()) {
      elements.push_back(std::move(p));
    }
  }
  elements = sorted_unique(std::move(elements));
  const bool reduced = is_reduced(elements);
  return Basis(x, std::move(elements), reduced);
}

bool covers(std::span<const Shape> family, const Shape& x) {
  return part_of(x, sum_of(family, x.kind()));
}

bool exhausts(const Topology& t) {
  std::vector<Shape> proper;
  for (const auto& o : t.opens()) {
    if (o != t.carrier()) {
      proper.push_back(o);
    }
  }
  return sum_of(proper, t.carrier().kind()) == t.carrier();
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Finer:
      return "finer";
    case Comparison::Coarser:
      return "coarser";
    case Comparison::Equal:
      return "equal";
    case Comparison::Incomparable:
      return "incomparable";
  }
  return "incomparable";
}

namespace {

Comparison verdict(bool first_in_second, bool second_in_first) {
  if (first_in_second && second_in_first) {
    return Comparison::Equal;
  }
  if (first_in_second) {
    return Comparison::Coarser;
  }
  if (second_in_first) {
    return Comparison::Finer;
  }
  return Comparison::Incomparable;
}

bool opens_included(const Topology& a, const Topology& b) {
  return std::all_of(a.opens().begin(), a.opens().end(), [&](const Shape& o) { return b.is_open(o); });
}

bool elements_generated_by(const Basis& a, const Basis& b) {
  return std::all_of(a.elements().begin(), a.elements().end(),
                     [&](const Shape& e) { return expressible_as_sum(e, b.elements()); });
}

}  // namespace

Comparison compare(const Topology& t1, const Topology& t2) {
  if (t1.carrier() != t2.carrier()) {
    throw Error(ErrorCode::CarrierMismatch, "topologies are on different shapes");
  }
  return verdict(opens_included(t1, t2), opens_included(t2, t1));
}

Comparison compare_by_bases(const Basis& b1, const Basis& b2) {
  if (b1.carrier() != b2.carrier()) {
    throw Error(ErrorCode::CarrierMismatch, "bases are on different shapes");
  }
  return verdict(elements_generated_by(b1, b2), elements_generated_by(b2, b1));
}

Shape interior(const Shape& x, const Topology& t) {
  require_part(x, t.carrier(), "part");
  std::vector<Shape> inside;
  for (const auto& o : t.opens()) {
    if (part_of(o, x)) {
      inside.push_back(o);
    }
  }
  return sum_of(inside, x.kind());
}

Shape closure(const Shape& x, const Topology& t) {
  require_part(x, t.carrier(), "part");
  Shape out = t.carrier();
  for (const auto& o : t.opens()) {
    if (part_of(x, o)) {
      out = product(out, o);
    }
  }
  return out;
}

PartClass classify_part(const Shape& x, const Topology& t) {
  PartClass c;
  c.interior = interior(x, t);
  c.closure = closure(x, t);
  c.open = t.is_open(x);
  c.closed = t.is_open(difference(t.carrier(), x));
  c.clopen = c.open && c.closed;
  c.dense = std::all_of(t.opens().begin(), t.opens().end(),
                        [&](const Shape& o) { return o.is_empty() || !product(x, o).is_empty(); });
  return c;
}

}  // namespace shapetop
