#include "shapetop/mapping.hpp"

#include <algorithm>
#include <set>

#include "shapetop/error.hpp"

namespace shapetop {

AffineStep::AffineStep(std::array<Scalar, 4> matrix, std::array<Scalar, 2> translation)
    : m_(std::move(matrix)), v_(std::move(translation)) {
  if ((m_[0] * m_[3] - m_[1] * m_[2]).is_zero()) {
    throw Error(ErrorCode::SingularAffine, "affine matrix has zero determinant");
  }
}

AffineStep AffineStep::translation(Scalar dx, Scalar dy) {
  return AffineStep({Scalar(1), Scalar(0), Scalar(0), Scalar(1)}, {std::move(dx), std::move(dy)});
}

Point AffineStep::apply(const Point& p) const {
  return Point{m_[0] * p.x + m_[1] * p.y + v_[0], m_[2] * p.x + m_[3] * p.y + v_[1]};
}

Shape AffineStep::apply(const Shape& s) const {
  if (s.kind() == Kind::U0) {
    std::vector<Point> pts;
    pts.reserve(s.points().size());
    for (const auto& p : s.points()) {
      pts.push_back(apply(p));
    }
    return Shape::from_points(std::move(pts));
  }
  std::vector<Segment> segs;
  segs.reserve(s.segments().size());
  for (const auto& seg : s.segments()) {
    segs.emplace_back(apply(seg.a()), apply(seg.b()));
  }
  return Shape::from_segments(std::move(segs));
}

AffineStep AffineStep::inverse() const {
  const Scalar det = m_[0] * m_[3] - m_[1] * m_[2];
  std::array<Scalar, 4> inv{m_[3] / det, -m_[1] / det, -m_[2] / det, m_[0] / det};
  // p = M^-1 (q - v)
  std::array<Scalar, 2> off{-(inv[0] * v_[0] + inv[1] * v_[1]), -(inv[2] * v_[0] + inv[3] * v_[1])};
  return AffineStep(std::move(inv), std::move(off));
}

Mapping::Mapping(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (const auto& step : steps_) {
    const Shape* s = nullptr;
    if (const auto* add = std::get_if<AddStep>(&step)) {
      s = &add->shape;
    } else if (const auto* sub = std::get_if<SubtractStep>(&step)) {
      s = &sub->shape;
    }
    if (s == nullptr) {
      continue;
    }
    if (kind_ && *kind_ != s->kind()) {
      throw Error(ErrorCode::KindMismatch, "mapping steps mix U0 and U1 shapes");
    }
    kind_ = s->kind();
  }
}

Mapping Mapping::then(const Mapping& next) const {
  std::vector<Step> all = steps_;
  all.insert(all.end(), next.steps_.begin(), next.steps_.end());
  return Mapping(std::move(all));
}

namespace {

void require_kind(const Mapping& f, const Shape& x) {
  if (f.kind() && *f.kind() != x.kind()) {
    throw Error(ErrorCode::KindMismatch, "mapping acts on " + std::string(to_string(*f.kind())) +
                                             " shapes, got " + std::string(to_string(x.kind())));
  }
}

struct ApplyStep {
  const Shape& x;
  Shape operator()(const AffineStep& g) const { return g.apply(x); }
  Shape operator()(const AddStep& a) const { return sum(x, a.shape); }
  Shape operator()(const SubtractStep& b) const { return difference(x, b.shape); }
};

// Largest z (anywhere in the plane) with step(z) <= y, if one exists.
struct PullBack {
  const Shape& y;
  std::optional<Shape> operator()(const AffineStep& g) const { return g.inverse().apply(y); }
  std::optional<Shape> operator()(const AddStep& a) const {
    if (!part_of(a.shape, y)) {
      return std::nullopt;
    }
    return y;
  }
  std::optional<Shape> operator()(const SubtractStep& b) const { return sum(y, b.shape); }
};

}  // namespace

Shape image(const Mapping& f, const Shape& x) {
  require_kind(f, x);
  Shape out = x;
  for (const auto& step : f.steps()) {
    out = std::visit(ApplyStep{out}, step);
  }
  return out;
}

PreimageResult preimage(const Mapping& f, const Shape& y, const Shape& domain) {
  require_kind(f, y);
  require_kind(f, domain);
  if (y.kind() != domain.kind()) {
    throw Error(ErrorCode::KindMismatch, "preimage query and domain differ in kind");
  }
  Shape bound = y;
  for (auto it = f.steps().rbegin(); it != f.steps().rend(); ++it) {
    std::optional<Shape> pulled = std::visit(PullBack{bound}, *it);
    if (!pulled) {
      return PreimageResult::undefined();
    }
    bound = std::move(*pulled);
  }
  return PreimageResult::of(product(domain, bound));
}

ContinuityReport is_continuous(const Mapping& f, const Topology& source, const Topology& target) {
  if (image(f, source.carrier()) != target.carrier()) {
    throw Error(ErrorCode::NotOnto, "the image of the source carrier is not the target carrier");
  }
  ContinuityReport report;
  report.table.reserve(target.size());
  bool all_defined_and_open = true;
  for (const auto& d : target.opens()) {
    PreimageResult pre = preimage(f, d, source.carrier());
    if (all_defined_and_open && report.witness.empty()) {
      if (!pre.defined()) {
        report.witness = "preimage of target open " + std::to_string(report.table.size()) + " is undefined";
        all_defined_and_open = false;
      } else if (!source.is_open(pre.shape())) {
        report.witness = "preimage of target open " + std::to_string(report.table.size()) +
                         " is not open in the source";
        all_defined_and_open = false;
      }
    }
    report.table.emplace_back(d, std::move(pre));
  }
  if (!all_defined_and_open) {
    return report;
  }

  const auto& opens = target.opens();
  const auto& table = report.table;
  for (std::size_t i = 0; i < opens.size() && report.witness.empty(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      const auto pi = table[i].second.shape();
      const auto pj = table[j].second.shape();
      const std::size_t prod_index = *target.index_of(product(opens[i], opens[j]));
      const std::size_t sum_index = *target.index_of(sum(opens[i], opens[j]));
      if (table[prod_index].second.shape() != product(pi, pj)) {
        report.witness = "f* does not preserve the product of target opens " + std::to_string(i) + " and " +
                         std::to_string(j);
        break;
      }
      if (table[sum_index].second.shape() != sum(pi, pj)) {
        report.witness =
            "f* does not preserve the sum of target opens " + std::to_string(i) + " and " + std::to_string(j);
        break;
      }
    }
  }
  if (report.witness.empty()) {
    const std::size_t top = *target.index_of(target.carrier());
    if (table[top].second.shape() != source.carrier()) {
      report.witness = "f* does not map the target carrier to the source carrier";
    }
  }
  report.continuous = report.witness.empty();

  std::set<Shape> images;
  for (const auto& [open, pre] : table) {
    images.insert(pre.shape());
  }
  report.injective = images.size() == table.size();
  return report;
}

bool check_closure_image(const Mapping& f, const Shape& x, const Topology& source, const Topology& target) {
  if (!is_continuous(f, source, target).continuous) {
    throw Error(ErrorCode::NotContinuous, "closure-image inequality needs a continuous mapping");
  }
  return part_of(image(f, closure(x, source)), closure(image(f, x), target));
}

}  // namespace shapetop
