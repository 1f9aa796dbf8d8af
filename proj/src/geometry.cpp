#include "shapetop/geometry.hpp"

#include "shapetop/error.hpp"

namespace shapetop {

Segment::Segment(Point p, Point q) {
  if (p == q) {
    throw Error(ErrorCode::DegenerateElement,
                "segment endpoints coincide at (" + p.x.to_string() + ", " + p.y.to_string() + ")");
  }
  if (q < p) {
    std::swap(p, q);
  }
  a_ = std::move(p);
  b_ = std::move(q);
}

namespace {

std::strong_ordering compare_mpz(const mpz_class& l, const mpz_class& r) {
  const int c = cmp(l, r);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

LineKey::LineKey(mpz_class a, mpz_class b, mpz_class c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

LineKey LineKey::through(const Point& p, const Point& q) {
  // Normal (dy, -dx) scaled to integers.
  const mpq_class dx = q.x.raw() - p.x.raw();
  const mpq_class dy = q.y.raw() - p.y.raw();
  mpq_class a = dy;
  mpq_class b = -dx;
  mpq_class c = a * p.x.raw() + b * p.y.raw();

  mpz_class l = 1;
  for (const mpq_class* v : {&a, &b, &c}) {
    mpz_class den = v->get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  mpz_class ia = mpz_class(a * l);
  mpz_class ib = mpz_class(b * l);
  mpz_class ic = mpz_class(c * l);

  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
  ia /= g;
  ib /= g;
  ic /= g;
  if (ia < 0 || (ia == 0 && ib < 0)) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  return LineKey(std::move(ia), std::move(ib), std::move(ic));
}

bool LineKey::contains(const Point& p) const {
  return mpq_class(a_) * p.x.raw() + mpq_class(b_) * p.y.raw() == mpq_class(c_);
}

Point LineKey::at(const Scalar& t) const {
  if (vertical()) {
    return Point{Scalar(mpq_class(c_, a_)), t};
  }
  const mpq_class y = (mpq_class(c_) - mpq_class(a_) * t.raw()) / mpq_class(b_);
  return Point{t, Scalar(y)};
}

std::strong_ordering operator<=>(const LineKey& l, const LineKey& r) {
  if (auto c = compare_mpz(l.a_, r.a_); c != 0) {
    return c;
  }
  if (auto c = compare_mpz(l.b_, r.b_); c != 0) {
    return c;
  }
  return compare_mpz(l.c_, r.c_);
}

int orientation(const Point& p, const Point& q, const Point& r) {
  const mpq_class cross = (q.x.raw() - p.x.raw()) * (r.y.raw() - p.y.raw()) -
                          (q.y.raw() - p.y.raw()) * (r.x.raw() - p.x.raw());
  return sgn(cross);
}

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a(), s.b(), p) != 0) {
    return false;
  }
  // Collinear: p must lie within the bounding box, and endpoints are lexicographically sorted.
  return s.a() <= p && p <= s.b();
}

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a(), s.b(), t.a());
  const int o2 = orientation(s.a(), s.b(), t.b());
  const int o3 = orientation(t.a(), t.b(), s.a());
  const int o4 = orientation(t.a(), t.b(), s.b());
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    return true;
  }
  return (o1 == 0 && on_segment(t.a(), s)) || (o2 == 0 && on_segment(t.b(), s)) ||
         (o3 == 0 && on_segment(s.a(), t)) || (o4 == 0 && on_segment(s.b(), t));
}

std::optional<Point> crossing_point(const Segment& s, const Segment& t) {
  const mpq_class rx = s.b().x.raw() - s.a().x.raw();
  const mpq_class ry = s.b().y.raw() - s.a().y.raw();
  const mpq_class qx = t.b().x.raw() - t.a().x.raw();
  const mpq_class qy = t.b().y.raw() - t.a().y.raw();
  const mpq_class denom = rx * qy - ry * qx;
  if (denom == 0) {
    return std::nullopt;
  }
  const mpq_class wx = t.a().x.raw() - s.a().x.raw();
  const mpq_class wy = t.a().y.raw() - s.a().y.raw();
  const mpq_class u = (wx * qy - wy * qx) / denom;
  const mpq_class v = (wx * ry - wy * rx) / denom;
  if (u < 0 || u > 1 || v < 0 || v > 1) {
    return std::nullopt;
  }
  return Point{Scalar(mpq_class(s.a().x.raw() + u * rx)), Scalar(mpq_class(s.a().y.raw() + u * ry))};
}

}  // namespace shapetop
