#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "shapetop/geometry.hpp"

namespace shapetop {

/// Algebra of basic elements: U0 points or U1 line segments in the plane.
/// Planes (U2) and solids (U3) would add further kinds here.
enum class Kind { U0, U1 };

std::string_view to_string(Kind kind);

/// A shape in canonical maximal form.
///
/// U0 shapes hold distinct points; U1 shapes hold maximal segments, i.e. no two
/// collinear segments overlap or touch end to end. Elements are sorted
/// lexicographically, so structural equality is shape equality.
class Shape {
 public:
  explicit Shape(Kind kind = Kind::U1) : kind_(kind) {}

  static Shape empty(Kind kind) { return Shape(kind); }
  static Shape from_points(std::vector<Point> points);
  static Shape from_segments(std::vector<Segment> segments);

  Kind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept { return points_.empty() && segments_.empty(); }
  std::size_t size() const noexcept { return kind_ == Kind::U0 ? points_.size() : segments_.size(); }

  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }

  friend bool operator==(const Shape&, const Shape&) = default;
  friend std::strong_ordering operator<=>(const Shape& l, const Shape& r);

 private:
  Kind kind_;
  std::vector<Point> points_;
  std::vector<Segment> segments_;
};

/// Canonical maximal form of raw points.
Shape normalize(std::span<const Point> raw);
/// Canonical maximal form of raw segments: collinear overlapping or abutting pieces merge.
Shape normalize(std::span<const Segment> raw);

bool part_of(const Shape& x, const Shape& s);
Shape sum(const Shape& a, const Shape& b);
Shape product(const Shape& a, const Shape& b);
Shape difference(const Shape& a, const Shape& b);

/// Sum and product over a family; `kind` is used when the family is empty.
Shape sum_of(std::span<const Shape> family, Kind kind);
Shape product_of(std::span<const Shape> family, const Shape& top);

/// Endpoints of all maximal segments of a nonempty U1 shape, including T-junction endpoints.
Shape boundary(const Shape& s);

/// U1: some maximal segment of a shares a point with some maximal segment of b.
/// U0: the shapes share a point.
bool touches(const Shape& a, const Shape& b);

/// U1: the intersection graph of the maximal segments is connected.
/// U0: at most one point.
bool visually_connected(const Shape& s);

/// Ordering used when listing the members of a family: element count, then lexicographic.
struct ListingOrder {
  bool operator()(const Shape& l, const Shape& r) const {
    if (l.size() != r.size()) {
      return l.size() < r.size();
    }
    return l < r;
  }
};

}  // namespace shapetop
