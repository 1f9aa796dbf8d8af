#include "shapetop/shape.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "shapetop/error.hpp"

namespace shapetop {

std::string_view to_string(Kind kind) { return kind == Kind::U0 ? "U0" : "U1"; }

namespace {

struct Interval {
  Scalar lo;
  Scalar hi;
};

using Intervals = std::vector<Interval>;
using LineGroups = std::map<LineKey, Intervals>;

void require_same_kind(const Shape& a, const Shape& b, const char* op) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorCode::KindMismatch, std::string(op) + " of " + std::string(to_string(a.kind())) +
                                             " and " + std::string(to_string(b.kind())) + " shapes");
  }
}

// Sorts and merges overlapping or abutting intervals.
Intervals merge(Intervals v) {
  std::sort(v.begin(), v.end(), [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  Intervals out;
  for (auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) {
        out.back().hi = std::move(iv.hi);
      }
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

LineGroups group(const std::vector<Segment>& segments) {
  LineGroups groups;
  for (const auto& s : segments) {
    const LineKey key = LineKey::of(s);
    groups[key].push_back(Interval{key.parameter(s.a()), key.parameter(s.b())});
  }
  return groups;
}

std::vector<Segment> ungroup(const LineGroups& groups) {
  std::vector<Segment> out;
  for (const auto& [key, intervals] : groups) {
    for (const auto& iv : intervals) {
      out.emplace_back(key.at(iv.lo), key.at(iv.hi));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Intervals intersect(const Intervals& a, const Intervals& b) {
  Intervals out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const Scalar& lo = std::max(a[i].lo, b[j].lo);
    const Scalar& hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) {
      out.push_back(Interval{lo, hi});
    }
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

Intervals subtract(const Intervals& a, const Intervals& b) {
  Intervals out;
  std::size_t j = 0;
  for (const auto& iv : a) {
    Scalar cursor = iv.lo;
    while (j < b.size() && b[j].hi <= cursor) {
      ++j;
    }
    std::size_t k = j;
    while (k < b.size() && b[k].lo < iv.hi) {
      if (cursor < b[k].lo) {
        out.push_back(Interval{cursor, b[k].lo});
      }
      if (cursor < b[k].hi) {
        cursor = b[k].hi;
      }
      if (!(cursor < iv.hi)) {
        break;
      }
      ++k;
    }
    if (cursor < iv.hi) {
      out.push_back(Interval{cursor, iv.hi});
    }
  }
  return out;
}

Shape from_groups(const LineGroups& groups) {
  return Shape::from_segments(ungroup(groups));
}

}  // namespace

Shape Shape::from_points(std::vector<Point> points) {
  Shape s(Kind::U0);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  s.points_ = std::move(points);
  return s;
}

Shape Shape::from_segments(std::vector<Segment> segments) {
  Shape s(Kind::U1);
  LineGroups groups = group(segments);
  for (auto& [key, intervals] : groups) {
    intervals = merge(std::move(intervals));
  }
  s.segments_ = ungroup(groups);
  return s;
}

std::strong_ordering operator<=>(const Shape& l, const Shape& r) {
  if (l.kind_ != r.kind_) {
    return l.kind_ < r.kind_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (l.kind_ == Kind::U0) {
    return std::lexicographical_compare_three_way(l.points_.begin(), l.points_.end(),
                                                  r.points_.begin(), r.points_.end());
  }
  return std::lexicographical_compare_three_way(l.segments_.begin(), l.segments_.end(),
                                                r.segments_.begin(), r.segments_.end());
}

Shape normalize(std::span<const Point> raw) {
  return Shape::from_points(std::vector<Point>(raw.begin(), raw.end()));
}

Shape normalize(std::span<const Segment> raw) {
  return Shape::from_segments(std::vector<Segment>(raw.begin(), raw.end()));
}

bool part_of(const Shape& x, const Shape& s) {
  require_same_kind(x, s, "part_of");
  if (x.kind() == Kind::U0) {
    return std::includes(s.points().begin(), s.points().end(), x.points().begin(), x.points().end());
  }
  // Each maximal element of x must embed in a single maximal element of s.
  for (const auto& seg : x.segments()) {
    const LineKey key = LineKey::of(seg);
    const bool embedded = std::any_of(s.segments().begin(), s.segments().end(), [&](const Segment& t) {
      return on_segment(seg.a(), t) && on_segment(seg.b(), t) && LineKey::of(t) == key;
    });
    if (!embedded) {
      return false;
    }
  }
  return true;
}

Shape sum(const Shape& a, const Shape& b) {
  require_same_kind(a, b, "sum");
  if (a.kind() == Kind::U0) {
    std::vector<Point> pts;
    std::set_union(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                   std::back_inserter(pts));
    return Shape::from_points(std::move(pts));
  }
  std::vector<Segment> segs = a.segments();
  segs.insert(segs.end(), b.segments().begin(), b.segments().end());
  return Shape::from_segments(std::move(segs));
}

Shape product(const Shape& a, const Shape& b) {
  require_same_kind(a, b, "product");
  if (a.kind() == Kind::U0) {
    std::vector<Point> pts;
    std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                          std::back_inserter(pts));
    return Shape::from_points(std::move(pts));
  }
  const LineGroups ga = group(a.segments());
  const LineGroups gb = group(b.segments());
  LineGroups out;
  for (const auto& [key, intervals] : ga) {
    if (auto it = gb.find(key); it != gb.end()) {
      Intervals common = intersect(intervals, it->second);
      if (!common.empty()) {
        out.emplace(key, std::move(common));
      }
    }
  }
  return from_groups(out);
}

Shape difference(const Shape& a, const Shape& b) {
  require_same_kind(a, b, "difference");
  if (a.kind() == Kind::U0) {
    std::vector<Point> pts;
    std::set_difference(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                        std::back_inserter(pts));
    return Shape::from_points(std::move(pts));
  }
  const LineGroups ga = group(a.segments());
  const LineGroups gb = group(b.segments());
  LineGroups out;
  for (const auto& [key, intervals] : ga) {
    auto it = gb.find(key);
    Intervals rest = it == gb.end() ? intervals : subtract(intervals, it->second);
    if (!rest.empty()) {
      out.emplace(key, std::move(rest));
    }
  }
  return from_groups(out);
}

Shape sum_of(std::span<const Shape> family, Kind kind) {
  if (family.empty()) {
    return Shape::empty(kind);
  }
  if (family.front().kind() != kind) {
    throw Error(ErrorCode::KindMismatch, "family kind differs from requested kind");
  }
  if (kind == Kind::U0) {
    std::vector<Point> pts;
    for (const auto& s : family) {
      require_same_kind(s, family.front(), "sum");
      pts.insert(pts.end(), s.points().begin(), s.points().end());
    }
    return Shape::from_points(std::move(pts));
  }
  std::vector<Segment> segs;
  for (const auto& s : family) {
    require_same_kind(s, family.front(), "sum");
    segs.insert(segs.end(), s.segments().begin(), s.segments().end());
  }
  return Shape::from_segments(std::move(segs));
}

Shape product_of(std::span<const Shape> family, const Shape& top) {
  Shape out = top;
  for (const auto& s : family) {
    out = product(out, s);
  }
  return out;
}

Shape boundary(const Shape& s) {
  if (s.kind() != Kind::U1) {
    throw Error(ErrorCode::KindMismatch, "points have no boundary");
  }
  if (s.is_empty()) {
    throw Error(ErrorCode::EmptyShape, "the empty shape has no boundary");
  }
  std::vector<Point> pts;
  for (const auto& seg : s.segments()) {
    pts.push_back(seg.a());
    pts.push_back(seg.b());
  }
  return Shape::from_points(std::move(pts));
}

bool touches(const Shape& a, const Shape& b) {
  require_same_kind(a, b, "touches");
  if (a.kind() == Kind::U0) {
    return !product(a, b).is_empty();
  }
  for (const auto& s : a.segments()) {
    for (const auto& t : b.segments()) {
      if (segments_intersect(s, t)) {
        return true;
      }
    }
  }
  return false;
}

bool visually_connected(const Shape& s) {
  if (s.kind() == Kind::U0) {
    return s.points().size() <= 1;
  }
  const auto& segs = s.segments();
  std::vector<std::size_t> parent(segs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  std::size_t components = segs.size();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const std::size_t ri = find(i);
      const std::size_t rj = find(j);
      if (ri != rj && segments_intersect(segs[i], segs[j])) {
        parent[ri] = rj;
        --components;
      }
    }
  }
  return components <= 1;
}

}  // namespace shapetop
