#pragma once

// Text formats. All files share one token grammar: whitespace-separated tokens, `#`
// comments to end of line, and `{` `}` as standalone tokens. Shape elements are written
// `pt x y` or `seg x1 y1 x2 y2` with integer or p/q coordinates.
//
//   .shape   shape U0|U1  <elements>
//   .parts   parts U0|U1  (part NAME { <elements> })*
//   .topo    topology over (PATH | { <elements> })  [parts PATH]  (open ({ <elements> } | @NAME))*
//   .map     [map U0|U1]  (affine a b c d tx ty | add (PATH | {..}) | sub (PATH | {..}))*
//   .space   space U0|U1 N  (point I { <elements> })*  (open { I* })*
//
// Relative paths resolve against the directory of the file that names them.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shapetop/connectedness.hpp"
#include "shapetop/mapping.hpp"
#include "shapetop/space.hpp"

namespace shapetop::io {

struct NamedPart {
  std::string name;
  Shape shape;
  friend bool operator==(const NamedPart&, const NamedPart&) = default;
};

struct PartsFile {
  Kind kind = Kind::U1;
  std::vector<NamedPart> parts;
  friend bool operator==(const PartsFile&, const PartsFile&) = default;

  std::vector<Shape> shapes() const;
};

Shape parse_shape(std::string_view text, const std::string& source = "<shape>");
std::string write_shape(const Shape& s);

PartsFile parse_parts(std::string_view text, const std::string& source = "<parts>");
std::string write_parts(const PartsFile& parts);

/// Carrier and opens as written, before any validation.
struct TopologyFile {
  Shape carrier;
  std::vector<Shape> opens;
};

TopologyFile parse_topology_file(std::string_view text, const std::string& source = "<topology>",
                                 const std::filesystem::path& base_dir = {});
/// Validates the opens as a topology; throws Error(NotATopology) otherwise.
Topology parse_topology(std::string_view text, const std::string& source = "<topology>",
                        const std::filesystem::path& base_dir = {});
std::string write_topology(const Topology& t);

Mapping parse_mapping(std::string_view text, const std::string& source = "<map>",
                      const std::filesystem::path& base_dir = {});
std::string write_mapping(const Mapping& f, Kind kind);

SetTopology parse_space(std::string_view text, const std::string& source = "<space>");
std::string write_space(const SetTopology& st, Kind kind);

/// Basis written as a parts file with elements named b0, b1, ...
std::string write_basis(const Basis& b);

/// Hasse diagram of the opens under part-of. Nodes o0..oN follow t.opens(); a legend
/// node lists each open. Separation members, when given, are filled.
std::string topology_to_dot(const Topology& t, const std::optional<Separation>& highlight = std::nullopt);
/// Hasse diagram of the open sets under inclusion.
std::string space_to_dot(const SetTopology& st);

/// One-line rendering of a shape's elements, e.g. "seg 0 0 1 0; seg 2 0 3 0".
std::string inline_shape(const Shape& s);

std::string read_file(const std::filesystem::path& path);
Shape load_shape(const std::filesystem::path& path);
PartsFile load_parts(const std::filesystem::path& path);
Topology load_topology(const std::filesystem::path& path);
TopologyFile load_topology_file(const std::filesystem::path& path);
Mapping load_mapping(const std::filesystem::path& path);

}  // namespace shapetop::io
