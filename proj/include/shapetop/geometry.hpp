#pragma once

#include <compare>
#include <optional>

#include "shapetop/scalar.hpp"

namespace shapetop {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

/// Closed line segment with distinct endpoints, stored with a() < b() lexicographically.
class Segment {
 public:
  /// Throws Error(DegenerateElement) when p == q.
  Segment(Point p, Point q);

  const Point& a() const noexcept { return a_; }
  const Point& b() const noexcept { return b_; }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend std::strong_ordering operator<=>(const Segment&, const Segment&) = default;

 private:
  Point a_;
  Point b_;
};

/// Integer carrier line a*x + b*y = c in primitive, sign-normalized form.
class LineKey {
 public:
  /// Line through two distinct points.
  static LineKey through(const Point& p, const Point& q);
  static LineKey of(const Segment& s) { return through(s.a(), s.b()); }

  const mpz_class& a() const noexcept { return a_; }
  const mpz_class& b() const noexcept { return b_; }
  const mpz_class& c() const noexcept { return c_; }

  bool vertical() const { return b_ == 0; }
  bool contains(const Point& p) const;

  /// Coordinate used to order points along the line: x, or y for vertical lines.
  /// Increasing parameter matches the lexicographic point order.
  Scalar parameter(const Point& p) const { return vertical() ? p.y : p.x; }
  Point at(const Scalar& t) const;

  friend bool operator==(const LineKey& l, const LineKey& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend std::strong_ordering operator<=>(const LineKey& l, const LineKey& r);

 private:
  LineKey(mpz_class a, mpz_class b, mpz_class c);

  mpz_class a_;
  mpz_class b_;
  mpz_class c_;
};

/// Signed area test: >0 when r lies left of p->q, 0 when collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// True when p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

/// True when the closed segments share at least one point.
bool segments_intersect(const Segment& s, const Segment& t);

/// The single crossing point of two non-collinear segments, if any.
std::optional<Point> crossing_point(const Segment& s, const Segment& t);

}  // namespace shapetop
