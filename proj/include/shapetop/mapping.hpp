#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shapetop/topology.hpp"

namespace shapetop {

/// p -> M p + v with an invertible rational matrix M = [[m0, m1], [m2, m3]].
class AffineStep {
 public:
  /// Throws Error(SingularAffine) when det M == 0.
  AffineStep(std::array<Scalar, 4> matrix, std::array<Scalar, 2> translation);

  static AffineStep translation(Scalar dx, Scalar dy);

  const std::array<Scalar, 4>& matrix() const noexcept { return m_; }
  const std::array<Scalar, 2>& offset() const noexcept { return v_; }

  Point apply(const Point& p) const;
  Shape apply(const Shape& s) const;
  AffineStep inverse() const;

  friend bool operator==(const AffineStep&, const AffineStep&) = default;

 private:
  std::array<Scalar, 4> m_;
  std::array<Scalar, 2> v_;
};

/// x -> x + shape
struct AddStep {
  Shape shape;
  friend bool operator==(const AddStep&, const AddStep&) = default;
};

/// x -> x - shape
struct SubtractStep {
  Shape shape;
  friend bool operator==(const SubtractStep&, const SubtractStep&) = default;
};

using Step = std::variant<AffineStep, AddStep, SubtractStep>;

/// A mapping between shapes written as a composition of steps, applied left to right.
/// The empty composition is the identity.
class Mapping {
 public:
  Mapping() = default;
  /// Throws Error(KindMismatch) when add/subtract shapes differ in kind.
  explicit Mapping(std::vector<Step> steps);

  static Mapping identity() { return Mapping(); }

  const std::vector<Step>& steps() const noexcept { return steps_; }
  /// Kind fixed by the add/subtract steps, if any.
  std::optional<Kind> kind() const noexcept { return kind_; }

  /// g after f: apply this mapping, then `next`.
  Mapping then(const Mapping& next) const;

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  std::vector<Step> steps_;
  std::optional<Kind> kind_;
};

/// Largest part whose image embeds in the queried part, or undefined.
/// Undefined is distinct from the empty shape.
class PreimageResult {
 public:
  static PreimageResult undefined() { return PreimageResult(); }
  static PreimageResult of(Shape s) { return PreimageResult(std::move(s)); }

  bool defined() const noexcept { return shape_.has_value(); }
  /// Precondition: defined().
  const Shape& shape() const { return *shape_; }

  friend bool operator==(const PreimageResult&, const PreimageResult&) = default;

 private:
  PreimageResult() = default;
  explicit PreimageResult(Shape s) : shape_(std::move(s)) {}

  std::optional<Shape> shape_;
};

Shape image(const Mapping& f, const Shape& x);

/// Closed form composed in reverse step order, then restricted to the domain.
PreimageResult preimage(const Mapping& f, const Shape& y, const Shape& domain);

struct ContinuityReport {
  bool continuous = false;
  std::string witness;  // first failing condition; empty when continuous
  bool injective = false;
  /// f* table: each open of the target with its preimage.
  std::vector<std::pair<Shape, PreimageResult>> table;
};

/// f* must send every open of the target to an open of the source and be a lattice
/// homomorphism preserving the top element. Throws Error(NotOnto) unless
/// image(f, source carrier) == target carrier.
ContinuityReport is_continuous(const Mapping& f, const Topology& source, const Topology& target);

/// image(f, closure(x)) <= closure(image(f, x)). Throws Error(NotContinuous) if f is not
/// continuous between the topologies.
bool check_closure_image(const Mapping& f, const Shape& x, const Topology& source, const Topology& target);

}  // namespace shapetop
