#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shapetop/shape.hpp"

namespace shapetop {

inline constexpr std::size_t kDefaultMaxOpens = 4096;

/// A finite topology on a carrier shape: the lattice of open parts.
///
/// Opens are deduplicated and listed in ListingOrder, so the empty shape comes first.
/// Instances are only produced by validated constructors; members are immutable.
class Topology {
 public:
  /// Validates the family; throws Error(NotATopology) with the violation, or
  /// Error(MemberNotPart).
  static Topology from_opens(Shape carrier, std::vector<Shape> opens);

  const Shape& carrier() const noexcept { return carrier_; }
  const std::vector<Shape>& opens() const noexcept { return opens_; }
  std::size_t size() const noexcept { return opens_.size(); }

  bool is_open(const Shape& x) const;
  /// Position of x in opens(), if open.
  std::optional<std::size_t> index_of(const Shape& x) const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Topology(Shape carrier, std::vector<Shape> opens)
      : carrier_(std::move(carrier)), opens_(std::move(opens)) {}

  friend Topology make_topology_unchecked(Shape carrier, std::vector<Shape> opens);

  Shape carrier_;
  std::vector<Shape> opens_;
};

/// Sorts, deduplicates and wraps a family already known to be a topology.
Topology make_topology_unchecked(Shape carrier, std::vector<Shape> opens);

struct TopologyCheck {
  bool ok = true;
  std::string violation;                           // empty when ok
  std::optional<std::pair<Shape, Shape>> witness;  // first pair whose sum or product is missing
};

/// Checks the three topology conditions. Throws Error(MemberNotPart) if a member is not
/// part of the carrier.
TopologyCheck is_topology(std::span<const Shape> family, const Shape& carrier);

struct GenerateOptions {
  bool add_carrier_if_needed = false;
  std::size_t max_opens = kDefaultMaxOpens;
};

/// Smallest topology containing the generators: the fixpoint of rounds of pairwise sums
/// followed by pairwise products.
Topology generate_topology(std::span<const Shape> parts, const Shape& carrier,
                           const GenerateOptions& options = {});

struct RefineResult {
  Topology topology;
  std::vector<Shape> already_open;  // new parts that were open before refinement
};

RefineResult refine(const Topology& t, std::span<const Shape> parts,
                    std::size_t max_opens = kDefaultMaxOpens);

/// A finite family of nonempty parts generating a topology by sums.
class Basis {
 public:
  /// Validates the basis conditions; throws Error(NotABasis) with the violating pair.
  static Basis from_elements(Shape carrier, std::vector<Shape> elements);

  const Shape& carrier() const noexcept { return carrier_; }
  const std::vector<Shape>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return reduced_; }

  friend bool operator==(const Basis& l, const Basis& r) {
    return l.carrier_ == r.carrier_ && l.elements_ == r.elements_;
  }

 private:
  Basis(Shape carrier, std::vector<Shape> elements, bool reduced)
      : carrier_(std::move(carrier)), elements_(std::move(elements)), reduced_(reduced) {}

  friend Basis reduce_basis(const Basis& b);
  friend Basis reduce_basis(const Topology& t);
  friend Basis subshape_basis(const Basis& b, const Shape& x);

  Shape carrier_;
  std::vector<Shape> elements_;
  bool reduced_;
};

struct BasisCheck {
  bool ok = true;
  std::string violation;
  std::optional<std::pair<Shape, Shape>> witness;  // pair whose product is not expressible
};

/// Checks that the family sums to the carrier and that pairwise products are empty,
/// an element, or a sum of elements. Throws Error(MemberNotPart).
BasisCheck is_basis(std::span<const Shape> elements, const Shape& carrier);

Topology generate_from_basis(const Basis& b, std::size_t max_opens = kDefaultMaxOpens);

/// Drops every element that is the sum of the other elements below it. The result is the
/// unique reduced basis of the generated topology.
Basis reduce_basis(const Basis& b);
Basis reduce_basis(const Topology& t);

/// True when no element is the sum of other elements of the family.
bool is_reduced(std::span<const Shape> elements);

/// {x . C | C open}, a topology on x. Throws Error(MemberNotPart).
Topology subshape_topology(const Topology& t, const Shape& x);
/// {x . b | b in B}, without the empty products; a basis on x.
Basis subshape_basis(const Basis& b, const Shape& x);

bool covers(std::span<const Shape> family, const Shape& x);
bool exhausts(const Topology& t);

enum class Comparison { Finer, Coarser, Equal, Incomparable };
std::string_view to_string(Comparison c);

/// Verdict for t1 relative to t2. Throws Error(CarrierMismatch).
Comparison compare(const Topology& t1, const Topology& t2);
/// Same verdict computed from the reduced bases: b1's topology is coarser when each of
/// its elements is a sum of elements of b2.
Comparison compare_by_bases(const Basis& b1, const Basis& b2);

struct PartClass {
  bool open = false;
  bool closed = false;
  bool clopen = false;
  bool dense = false;
  Shape interior;
  Shape closure;
};

/// Sum of all opens embedded in x.
Shape interior(const Shape& x, const Topology& t);
/// Product of all opens having x as a part; the smallest such open.
Shape closure(const Shape& x, const Topology& t);
PartClass classify_part(const Shape& x, const Topology& t);

}  // namespace shapetop
