#pragma once

// Brute-force oracles kept independent of the main algorithms. Used by the acceptance
// suite and the hidden `oracle` CLI verb.

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "shapetop/mapping.hpp"
#include "shapetop/space.hpp"

namespace shapetop::oracle {

enum class U0Op { Sum, Product, Difference, PartOf };

/// Plain finite-set union, intersection, difference and subset on point shapes.
std::variant<Shape, bool> u0_oracle(U0Op op, const Shape& a, const Shape& b);

/// A family of subsets of {0..n-1}, each subset a bit mask; sorted ascending.
using SetFamily = std::vector<std::uint32_t>;

/// Every topology on n <= 4 points, by filtering all subset families. Throws
/// Error(TooLarge) for n > 4.
std::vector<SetFamily> enumerate_set_topologies(std::size_t n);

SetFamily to_family(const SetTopology& st);

/// Pairwise disjoint atoms of the common refinement of the sources.
struct FragmentDecomposition {
  std::vector<Shape> sources;
  std::vector<Shape> fragments;
};

/// U1: every segment is cut at all crossings and at collinear endpoints of the others.
/// U0: one fragment per distinct point.
FragmentDecomposition decompose(std::span<const Shape> sources);

struct BrutePreimage {
  PreimageResult result = PreimageResult::undefined();
  std::size_t fragments = 0;   // fragments of the domain enumerated
  std::size_t admissible = 0;  // fragment sums whose image embeds in y
  bool supremum_is_member = false;
};

/// Enumerates every fragment sum of the domain, keeps those whose image embeds in y and
/// returns their supremum, or undefined if none qualifies. Throws Error(TooManyFragments)
/// above `max_fragments`.
BrutePreimage brute_preimage(const Mapping& f, const Shape& y, const Shape& domain,
                             std::size_t max_fragments = 20);

/// All values of +/. expressions over the generators, plus the empty shape: sums of
/// products of nonempty generator subsets. Throws Error(TooLarge) past 16 distinct products.
std::vector<Shape> expression_search(std::span<const Shape> generators, Kind kind);

}  // namespace shapetop::oracle
