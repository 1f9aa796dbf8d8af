#include "shapetop/oracle.hpp"

#include <algorithm>
#include <set>

#include "shapetop/error.hpp"

namespace shapetop::oracle {

namespace {

void require_u0(const Shape& s) {
  if (s.kind() != Kind::U0) {
    throw Error(ErrorCode::KindMismatch, "u0 oracle takes point shapes");
  }
}

}  // namespace

std::variant<Shape, bool> u0_oracle(U0Op op, const Shape& a, const Shape& b) {
  require_u0(a);
  require_u0(b);
  const std::set<Point> sa(a.points().begin(), a.points().end());
  const std::set<Point> sb(b.points().begin(), b.points().end());
  std::set<Point> out;
  switch (op) {
    case U0Op::Sum:
      out = sa;
      out.insert(sb.begin(), sb.end());
      break;
    case U0Op::Product:
      for (const auto& p : sa) {
        if (sb.contains(p)) {
          out.insert(p);
        }
      }
      break;
    case U0Op::Difference:
      for (const auto& p : sa) {
        if (!sb.contains(p)) {
          out.insert(p);
        }
      }
      break;
    case U0Op::PartOf:
      return std::all_of(sa.begin(), sa.end(), [&](const Point& p) { return sb.contains(p); });
  }
  return Shape::from_points(std::vector<Point>(out.begin(), out.end()));
}

std::vector<SetFamily> enumerate_set_topologies(std::size_t n) {
  if (n > 4) {
    throw Error(ErrorCode::TooLarge, "set topology enumeration is limited to 4 points");
  }
  const std::uint32_t full = (1u << n) - 1;
  // Candidate members other than the empty and full sets.
  std::vector<std::uint32_t> middle;
  for (std::uint32_t s = 1; s < full; ++s) {
    middle.push_back(s);
  }
  std::vector<SetFamily> out;
  const std::uint64_t choices = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    SetFamily family{0};
    if (full != 0) {
      family.push_back(full);
    }
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if (pick & (std::uint64_t{1} << i)) {
        family.push_back(middle[i]);
      }
    }
    std::sort(family.begin(), family.end());
    const std::set<std::uint32_t> members(family.begin(), family.end());
    bool closed = true;
    for (auto x : family) {
      for (auto y : family) {
        if (!members.contains(x | y) || !members.contains(x & y)) {
          closed = false;
          break;
        }
      }
      if (!closed) {
        break;
      }
    }
    if (closed) {
      out.push_back(std::move(family));
    }
  }
  return out;
}

SetFamily to_family(const SetTopology& st) {
  if (st.points.size() > 32) {
    throw Error(ErrorCode::TooLarge, "set family masks hold at most 32 points");
  }
  SetFamily out;
  for (const auto& set : st.open_sets) {
    std::uint32_t mask = 0;
    for (auto i : set) {
      mask |= 1u << i;
    }
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FragmentDecomposition decompose(std::span<const Shape> sources) {
  FragmentDecomposition d;
  d.sources.assign(sources.begin(), sources.end());
  if (sources.empty()) {
    return d;
  }
  const Kind kind = sources.front().kind();
  if (kind == Kind::U0) {
    std::set<Point> pts;
    for (const auto& s : sources) {
      if (s.kind() != kind) {
        throw Error(ErrorCode::KindMismatch, "fragment sources differ in kind");
      }
      pts.insert(s.points().begin(), s.points().end());
    }
    for (const auto& p : pts) {
      d.fragments.push_back(Shape::from_points({p}));
    }
    return d;
  }
  std::vector<Segment> all;
  for (const auto& s : sources) {
    if (s.kind() != kind) {
      throw Error(ErrorCode::KindMismatch, "fragment sources differ in kind");
    }
    all.insert(all.end(), s.segments().begin(), s.segments().end());
  }
  std::set<Segment> pieces;
  for (const auto& seg : all) {
    std::vector<Point> cuts{seg.a(), seg.b()};
    for (const auto& other : all) {
      if (auto p = crossing_point(seg, other)) {
        cuts.push_back(*p);
      } else {
        // Parallel or collinear: keep the other's endpoints that fall on this segment.
        for (const Point& e : {other.a(), other.b()}) {
          if (on_segment(e, seg)) {
            cuts.push_back(e);
          }
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      pieces.emplace(cuts[i], cuts[i + 1]);
    }
  }
  for (const auto& p : pieces) {
    d.fragments.push_back(Shape::from_segments({p}));
  }
  return d;
}

namespace {

// Step shapes and the query expressed in domain coordinates: each shape is carried back
// through the inverses of the affine steps that precede it.
std::vector<Shape> pulled_back_sources(const Mapping& f, const Shape& y) {
  std::vector<Shape> out;
  std::vector<AffineStep> inverses;  // innermost first
  auto carry_back = [&](Shape s) {
    for (auto it = inverses.rbegin(); it != inverses.rend(); ++it) {
      s = it->apply(s);
    }
    return s;
  };
  for (const auto& step : f.steps()) {
    if (const auto* g = std::get_if<AffineStep>(&step)) {
      inverses.push_back(g->inverse());
    } else if (const auto* a = std::get_if<AddStep>(&step)) {
      out.push_back(carry_back(a->shape));
    } else if (const auto* b = std::get_if<SubtractStep>(&step)) {
      out.push_back(carry_back(b->shape));
    }
  }
  out.push_back(carry_back(y));
  return out;
}

}  // namespace

BrutePreimage brute_preimage(const Mapping& f, const Shape& y, const Shape& domain, std::size_t max_fragments) {
  std::vector<Shape> sources{domain};
  for (auto& s : pulled_back_sources(f, y)) {
    sources.push_back(std::move(s));
  }
  const FragmentDecomposition d = decompose(sources);
  std::vector<Shape> alphabet;
  for (const auto& frag : d.fragments) {
    if (part_of(frag, domain)) {
      alphabet.push_back(frag);
    }
  }
  if (alphabet.size() > max_fragments) {
    throw Error(ErrorCode::TooManyFragments,
                std::to_string(alphabet.size()) + " fragments exceed the limit of " + std::to_string(max_fragments));
  }
  BrutePreimage out;
  out.fragments = alphabet.size();
  std::vector<Shape> admissible;
  const std::uint64_t subsets = std::uint64_t{1} << alphabet.size();
  for (std::uint64_t pick = 0; pick < subsets; ++pick) {
    std::vector<Shape> chosen;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (pick & (std::uint64_t{1} << i)) {
        chosen.push_back(alphabet[i]);
      }
    }
    Shape x = sum_of(chosen, domain.kind());
    if (part_of(image(f, x), y)) {
      admissible.push_back(std::move(x));
    }
  }
  out.admissible = admissible.size();
  if (admissible.empty()) {
    return out;
  }
  Shape sup = sum_of(admissible, domain.kind());
  out.supremum_is_member = std::find(admissible.begin(), admissible.end(), sup) != admissible.end();
  out.result = PreimageResult::of(std::move(sup));
  return out;
}

std::vector<Shape> expression_search(std::span<const Shape> generators, Kind kind) {
  if (generators.size() > 16) {
    throw Error(ErrorCode::TooLarge, "expression search takes at most 16 generators");
  }
  std::set<Shape> products;
  const std::uint32_t n = static_cast<std::uint32_t>(generators.size());
  for (std::uint32_t pick = 1; pick < (1u << n); ++pick) {
    std::optional<Shape> acc;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (pick & (1u << i)) {
        acc = acc ? product(*acc, generators[i]) : generators[i];
      }
    }
    products.insert(*acc);
  }
  if (products.size() > 16) {
    throw Error(ErrorCode::TooLarge, "too many distinct products for expression search");
  }
  const std::vector<Shape> terms(products.begin(), products.end());
  std::set<Shape> values{Shape::empty(kind)};
  for (std::uint32_t pick = 1; pick < (1u << terms.size()); ++pick) {
    std::vector<Shape> chosen;
    for (std::uint32_t i = 0; i < terms.size(); ++i) {
      if (pick & (1u << i)) {
        chosen.push_back(terms[i]);
      }
    }
    values.insert(sum_of(chosen, kind));
  }
  return std::vector<Shape>(values.begin(), values.end());
}

}  // namespace shapetop::oracle
