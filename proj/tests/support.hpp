#pragma once

// Builders, random generators and small independent oracles shared by the tests.

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shapetop/connectedness.hpp"
#include "shapetop/io.hpp"
#include "shapetop/mapping.hpp"
#include "shapetop/oracle.hpp"
#include "shapetop/space.hpp"

#ifndef SHAPETOP_TEST_DATA
#define SHAPETOP_TEST_DATA "tests/data"
#endif

namespace shapetop::testing {

inline std::string data(const std::string& name) { return std::string(SHAPETOP_TEST_DATA) + "/" + name; }

inline Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(n, d); }

inline Point pt(Scalar x, Scalar y) { return Point{std::move(x), std::move(y)}; }

inline Segment seg(Scalar x1, Scalar y1, Scalar x2, Scalar y2) {
  return Segment(pt(std::move(x1), std::move(y1)), pt(std::move(x2), std::move(y2)));
}

/// Shape from a parsed inline element list, e.g. "seg 0 0 1 0 seg 2 0 3 0".
inline Shape S(const std::string& elements, Kind kind = Kind::U1) {
  return io::parse_shape(std::string("shape ") + (kind == Kind::U0 ? "U0" : "U1") + "\n" + elements);
}

/// [a, b] on the x-axis.
inline Shape X(Scalar a, Scalar b) { return Shape::from_segments({seg(std::move(a), q(0), std::move(b), q(0))}); }

inline Topology topo(const Shape& carrier, std::vector<Shape> opens) {
  return Topology::from_opens(carrier, std::move(opens));
}

/// Unions of quarter cells of [-16, 16] on the x-axis: an independent model of
/// x-axis U1 shapes whose endpoints are multiples of 1/4.
class CellSet {
 public:
  static constexpr int kLo = -64;  // quarter units
  static constexpr int kCells = 128;

  CellSet() = default;
  static CellSet interval(int lo_q, int hi_q) {
    CellSet c;
    for (int i = lo_q; i < hi_q; ++i) {
      c.bits_.set(static_cast<std::size_t>(i - kLo));
    }
    return c;
  }

  CellSet operator|(const CellSet& o) const { return CellSet(bits_ | o.bits_); }
  CellSet operator&(const CellSet& o) const { return CellSet(bits_ & o.bits_); }
  CellSet operator-(const CellSet& o) const { return CellSet(bits_ & ~o.bits_); }
  bool subset_of(const CellSet& o) const { return (bits_ & ~o.bits_).none(); }
  bool operator==(const CellSet& o) const { return bits_ == o.bits_; }

  Shape shape() const {
    std::vector<Segment> out;
    int i = 0;
    while (i < kCells) {
      if (!bits_.test(static_cast<std::size_t>(i))) {
        ++i;
        continue;
      }
      int j = i;
      while (j < kCells && bits_.test(static_cast<std::size_t>(j))) {
        ++j;
      }
      out.push_back(seg(q(i + kLo, 4), q(0), q(j + kLo, 4), q(0)));
      i = j;
    }
    return Shape::from_segments(out);
  }

 private:
  explicit CellSet(std::bitset<kCells> b) : bits_(b) {}
  std::bitset<kCells> bits_;
};

/// Independent closure check of a family under pairwise + and . .
inline bool closed_family(const std::vector<Shape>& family) {
  auto has = [&](const Shape& s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (!has(sum(a, b)) || !has(product(a, b))) {
        return false;
      }
    }
  }
  return true;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Rational in [-range, range] with denominator at most max_den.
  Scalar coord(int range = 8, int max_den = 4) {
    const int d = uniform(1, max_den);
    return q(uniform(-range * d, range * d), d);
  }

  /// Segments drawn mostly from a few shared lines so that overlaps and merges occur.
  Segment segment(int range = 8, int max_den = 4) {
    while (true) {
      const int kind = uniform(0, 5);
      Scalar t1 = coord(range, max_den);
      Scalar t2 = coord(range, max_den);
      if (t1 == t2) {
        continue;
      }
      const Scalar k(uniform(0, 2));
      switch (kind) {
        case 0:
        case 1:
          return seg(t1, k, t2, k);
        case 2:
          return seg(k, t1, k, t2);
        case 3:
          return seg(t1, t1, t2, t2);
        case 4: {
          const Scalar two(2);
          // Stay inside the coordinate range.
          if (two - t1 < q(-range) || two - t1 > q(range) || two - t2 < q(-range) || two - t2 > q(range)) {
            continue;
          }
          return seg(t1, two - t1, t2, two - t2);
        }
        default: {
          Scalar u1 = coord(range, max_den);
          Scalar u2 = coord(range, max_den);
          if (t1 == t2 && u1 == u2) {
            continue;
          }
          return seg(t1, u1, t2, u2);
        }
      }
    }
  }

  Shape shape(int max_segments = 6, int range = 8, int max_den = 4) {
    std::vector<Segment> segs;
    const int n = uniform(1, max_segments);
    for (int i = 0; i < n; ++i) {
      segs.push_back(segment(range, max_den));
    }
    return Shape::from_segments(segs);
  }

  Shape points(int max_points = 6, int range = 3) {
    std::vector<Point> pts;
    const int n = uniform(0, max_points);
    for (int i = 0; i < n; ++i) {
      pts.push_back(pt(q(uniform(-range, range)), q(uniform(-range, range))));
    }
    return Shape::from_points(pts);
  }

  /// Point on segment s at parameter t in [0, 1].
  static Point at(const Segment& s, const Scalar& t) {
    return pt(s.a().x + (s.b().x - s.a().x) * t, s.a().y + (s.b().y - s.a().y) * t);
  }

  /// Random part of the carrier: sub-segments of some of its maximal segments, cut at
  /// quarter parameters.
  Shape subpart(const Shape& carrier, double keep = 0.6) {
    std::vector<Segment> segs;
    for (const auto& s : carrier.segments()) {
      if (!coin(keep)) {
        continue;
      }
      int lo = uniform(0, 3);
      int hi = uniform(lo + 1, 4);
      if (coin(0.3)) {
        lo = 0;
        hi = 4;
      }
      segs.emplace_back(at(s, q(lo, 4)), at(s, q(hi, 4)));
    }
    return Shape::from_segments(segs);
  }

  Shape nonempty_subpart(const Shape& carrier, double keep = 0.6) {
    while (true) {
      Shape s = subpart(carrier, keep);
      if (!s.is_empty()) {
        return s;
      }
    }
  }

  /// Pairwise disjoint nonempty parts summing to the carrier; at most k of them.
  std::vector<Shape> partition(const Shape& carrier, int k) {
    std::vector<Segment> pieces;
    for (const auto& s : carrier.segments()) {
      std::vector<int> cuts{0, 4};
      const int extra = uniform(0, 2);
      for (int i = 0; i < extra; ++i) {
        cuts.push_back(uniform(1, 3));
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        pieces.emplace_back(at(s, q(cuts[i], 4)), at(s, q(cuts[i + 1], 4)));
      }
    }
    std::shuffle(pieces.begin(), pieces.end(), rng_);
    const std::size_t classes = std::min<std::size_t>(static_cast<std::size_t>(k), pieces.size());
    std::vector<std::vector<Segment>> groups(classes);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::size_t g = i < classes ? i : static_cast<std::size_t>(uniform(0, static_cast<int>(classes) - 1));
      groups[g].push_back(pieces[i]);
    }
    std::vector<Shape> out;
    for (const auto& g : groups) {
      out.push_back(Shape::from_segments(g));
    }
    return out;
  }

  /// Topology generated by 1..max_parts random parts (carrier added), retried until it has
  /// at most max_opens opens.
  Topology topology(const Shape& carrier, int max_parts = 3, std::size_t max_opens = 64) {
    while (true) {
      std::vector<Shape> parts;
      const int n = uniform(1, max_parts);
      for (int i = 0; i < n; ++i) {
        parts.push_back(nonempty_subpart(carrier));
      }
      GenerateOptions opts;
      opts.add_carrier_if_needed = true;
      Topology t = generate_topology(parts, carrier, opts);
      if (t.size() <= max_opens) {
        return t;
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace shapetop::testing
