#include "shapetop/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "shapetop/error.hpp"

namespace shapetop::io {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      out.push_back(Token{std::move(current), line});
      current.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') {
        ++i;
      }
      if (i < text.size()) {
        ++line;
      }
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else if (c == '{' || c == '}') {
      flush();
      out.push_back(Token{std::string(1, c), line});
    } else {
      current.push_back(c);
    }
  }
  flush();
  return out;
}

class Reader {
 public:
  Reader(std::string_view text, std::string source) : tokens_(tokenize(text)), source_(std::move(source)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& source() const { return source_; }

  const Token& peek() const { return tokens_.at(pos_); }
  bool peek_is(std::string_view s) const { return !done() && peek().text == s; }

  Token next(std::string_view expected_what) {
    if (done()) {
      fail_at_end("unexpected end of input, expected " + std::string(expected_what));
    }
    return tokens_[pos_++];
  }

  void expect(std::string_view word) {
    const Token t = next("'" + std::string(word) + "'");
    if (t.text != word) {
      fail(t, "expected '" + std::string(word) + "'");
    }
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(source_, t.line, t.text, message);
  }

  [[noreturn]] void fail_at_end(const std::string& message) const {
    const std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
    throw ParseError(source_, line, "", message);
  }

  Scalar scalar() {
    const Token t = next("a coordinate");
    try {
      return Scalar::parse(t.text);
    } catch (const std::invalid_argument&) {
      fail(t, "invalid rational coordinate");
    }
  }

  Kind kind() {
    const Token t = next("U0 or U1");
    if (t.text == "U0") {
      return Kind::U0;
    }
    if (t.text == "U1") {
      return Kind::U1;
    }
    fail(t, "expected U0 or U1");
  }

  std::size_t index() {
    const Token t = next("an index");
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail(t, "expected a nonnegative integer");
    }
    return static_cast<std::size_t>(std::stoull(t.text));
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string source_;
};

struct ElementSink {
  std::optional<Kind> kind;
  std::vector<Point> points;
  std::vector<Segment> segments;

  Shape build(Kind fallback) const {
    const Kind k = kind.value_or(fallback);
    return k == Kind::U0 ? Shape::from_points(points) : Shape::from_segments(segments);
  }
};

// Reads one element if the next token starts one. Returns false otherwise.
bool read_element(Reader& r, ElementSink& sink) {
  if (r.done()) {
    return false;
  }
  const Token head = r.peek();
  if (head.text != "pt" && head.text != "seg") {
    return false;
  }
  r.next("element");
  const Kind k = head.text == "pt" ? Kind::U0 : Kind::U1;
  if (sink.kind && *sink.kind != k) {
    r.fail(head, "element kind does not match " + std::string(to_string(*sink.kind)));
  }
  sink.kind = k;
  if (k == Kind::U0) {
    Scalar x = r.scalar();
    Scalar y = r.scalar();
    sink.points.push_back(Point{std::move(x), std::move(y)});
  } else {
    Scalar x1 = r.scalar();
    Scalar y1 = r.scalar();
    Scalar x2 = r.scalar();
    Scalar y2 = r.scalar();
    sink.segments.emplace_back(Point{std::move(x1), std::move(y1)}, Point{std::move(x2), std::move(y2)});
  }
  return true;
}

// `{ <elements> }`, with the opening brace already consumed.
Shape read_block_body(Reader& r, std::optional<Kind> kind, Kind fallback) {
  ElementSink sink{kind, {}, {}};
  while (true) {
    if (r.peek_is("}")) {
      r.next("}");
      break;
    }
    if (!read_element(r, sink)) {
      if (r.done()) {
        r.fail_at_end("unterminated block, expected '}'");
      }
      r.fail(r.peek(), "expected pt, seg or '}'");
    }
  }
  return sink.build(fallback);
}

std::filesystem::path resolve(const std::filesystem::path& base_dir, const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_relative() && !base_dir.empty()) {
    return base_dir / p;
  }
  return p;
}

std::string read_referenced(Reader& r, const Token& t, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    r.fail(t, "cannot read file " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A shape given inline as `{ ... }` or as a path to a .shape file.
Shape read_shape_ref(Reader& r, std::optional<Kind> kind, Kind fallback, const std::filesystem::path& base_dir) {
  const Token t = r.next("'{' or a file path");
  if (t.text == "{") {
    return read_block_body(r, kind, fallback);
  }
  const auto path = resolve(base_dir, t.text);
  Shape s = parse_shape(read_referenced(r, t, path), path.string());
  if (kind && s.kind() != *kind) {
    r.fail(t, "referenced shape has kind " + std::string(to_string(s.kind())));
  }
  return s;
}

void write_elements(std::ostream& os, const Shape& s, std::string_view indent) {
  for (const auto& p : s.points()) {
    os << indent << "pt " << p.x << ' ' << p.y << '\n';
  }
  for (const auto& seg : s.segments()) {
    os << indent << "seg " << seg.a().x << ' ' << seg.a().y << ' ' << seg.b().x << ' ' << seg.b().y << '\n';
  }
}

void write_block(std::ostream& os, const Shape& s) {
  if (s.is_empty()) {
    os << "{ }\n";
    return;
  }
  os << "{\n";
  write_elements(os, s, "  ");
  os << "}\n";
}

}  // namespace

std::vector<Shape> PartsFile::shapes() const {
  std::vector<Shape> out;
  out.reserve(parts.size());
  for (const auto& p : parts) {
    out.push_back(p.shape);
  }
  return out;
}

Shape parse_shape(std::string_view text, const std::string& source) {
  Reader r(text, source);
  r.expect("shape");
  const Kind kind = r.kind();
  ElementSink sink{kind, {}, {}};
  while (!r.done()) {
    if (!read_element(r, sink)) {
      r.fail(r.peek(), "expected pt or seg");
    }
  }
  return sink.build(kind);
}

std::string write_shape(const Shape& s) {
  std::ostringstream os;
  os << "shape " << to_string(s.kind()) << '\n';
  write_elements(os, s, "");
  return os.str();
}

PartsFile parse_parts(std::string_view text, const std::string& source) {
  Reader r(text, source);
  r.expect("parts");
  PartsFile out;
  out.kind = r.kind();
  std::map<std::string, bool> seen;
  while (!r.done()) {
    r.expect("part");
    const Token name = r.next("a part name");
    if (name.text == "{" || name.text == "}") {
      r.fail(name, "expected a part name");
    }
    if (seen[name.text]) {
      r.fail(name, "duplicate part name");
    }
    seen[name.text] = true;
    r.expect("{");
    out.parts.push_back(NamedPart{name.text, read_block_body(r, out.kind, out.kind)});
  }
  return out;
}

std::string write_parts(const PartsFile& parts) {
  std::ostringstream os;
  os << "parts " << to_string(parts.kind) << '\n';
  for (const auto& p : parts.parts) {
    os << "part " << p.name << ' ';
    write_block(os, p.shape);
  }
  return os.str();
}

TopologyFile parse_topology_file(std::string_view text, const std::string& source,
                                 const std::filesystem::path& base_dir) {
  Reader r(text, source);
  r.expect("topology");
  r.expect("over");
  const Shape carrier = read_shape_ref(r, std::nullopt, Kind::U1, base_dir);
  std::optional<PartsFile> named;
  std::vector<Shape> opens;
  while (!r.done()) {
    const Token t = r.next("'parts' or 'open'");
    if (t.text == "parts") {
      const Token p = r.next("a parts file path");
      const auto path = resolve(base_dir, p.text);
      named = parse_parts(read_referenced(r, p, path), path.string());
      if (named->kind != carrier.kind()) {
        r.fail(p, "parts file kind differs from the carrier");
      }
    } else if (t.text == "open") {
      if (r.peek_is("{")) {
        r.next("{");
        opens.push_back(read_block_body(r, carrier.kind(), carrier.kind()));
        continue;
      }
      const Token ref = r.next("'{' or @name");
      if (ref.text.size() < 2 || ref.text[0] != '@') {
        r.fail(ref, "expected '{' or @name");
      }
      if (!named) {
        r.fail(ref, "named open used before a 'parts' line");
      }
      const std::string name = ref.text.substr(1);
      const auto it = std::find_if(named->parts.begin(), named->parts.end(),
                                   [&](const NamedPart& p) { return p.name == name; });
      if (it == named->parts.end()) {
        r.fail(ref, "unknown part name");
      }
      opens.push_back(it->shape);
    } else {
      r.fail(t, "expected 'parts' or 'open'");
    }
  }
  return TopologyFile{carrier, std::move(opens)};
}

Topology parse_topology(std::string_view text, const std::string& source, const std::filesystem::path& base_dir) {
  TopologyFile f = parse_topology_file(text, source, base_dir);
  return Topology::from_opens(std::move(f.carrier), std::move(f.opens));
}

std::string write_topology(const Topology& t) {
  std::ostringstream os;
  os << "# " << t.size() << " opens\n";
  os << "topology over ";
  write_block(os, t.carrier());
  for (const auto& o : t.opens()) {
    os << "open ";
    write_block(os, o);
  }
  return os.str();
}

Mapping parse_mapping(std::string_view text, const std::string& source, const std::filesystem::path& base_dir) {
  Reader r(text, source);
  std::optional<Kind> kind;
  if (r.peek_is("map")) {
    r.next("map");
    kind = r.kind();
  }
  std::vector<Step> steps;
  while (!r.done()) {
    const Token t = r.next("a step");
    if (t.text == "affine") {
      std::array<Scalar, 4> m;
      for (auto& v : m) {
        v = r.scalar();
      }
      std::array<Scalar, 2> off;
      for (auto& v : off) {
        v = r.scalar();
      }
      steps.emplace_back(AffineStep(std::move(m), std::move(off)));
    } else if (t.text == "add" || t.text == "sub") {
      Shape s = read_shape_ref(r, kind, kind.value_or(Kind::U1), base_dir);
      if (!kind) {
        kind = s.kind();
      }
      if (t.text == "add") {
        steps.emplace_back(AddStep{std::move(s)});
      } else {
        steps.emplace_back(SubtractStep{std::move(s)});
      }
    } else {
      r.fail(t, "expected affine, add or sub");
    }
  }
  return Mapping(std::move(steps));
}

std::string write_mapping(const Mapping& f, Kind kind) {
  std::ostringstream os;
  os << "map " << to_string(f.kind().value_or(kind)) << '\n';
  for (const auto& step : f.steps()) {
    if (const auto* g = std::get_if<AffineStep>(&step)) {
      os << "affine";
      for (const auto& v : g->matrix()) {
        os << ' ' << v;
      }
      for (const auto& v : g->offset()) {
        os << ' ' << v;
      }
      os << '\n';
    } else if (const auto* a = std::get_if<AddStep>(&step)) {
      os << "add ";
      write_block(os, a->shape);
    } else if (const auto* b = std::get_if<SubtractStep>(&step)) {
      os << "sub ";
      write_block(os, b->shape);
    }
  }
  return os.str();
}

SetTopology parse_space(std::string_view text, const std::string& source) {
  Reader r(text, source);
  r.expect("space");
  const Kind kind = r.kind();
  const std::size_t count = r.index();
  SetTopology st;
  while (!r.done() && r.peek_is("point")) {
    r.next("point");
    const Token idx = r.peek();
    const std::size_t i = r.index();
    if (i != st.points.size()) {
      r.fail(idx, "points must be numbered 0, 1, ... in order");
    }
    r.expect("{");
    st.points.push_back(SpacePoint{i, read_block_body(r, kind, kind)});
  }
  if (st.points.size() != count) {
    r.fail_at_end("expected " + std::to_string(count) + " points");
  }
  while (!r.done()) {
    r.expect("open");
    r.expect("{");
    IndexSet set;
    while (!r.peek_is("}")) {
      const Token idx = r.peek();
      const std::size_t i = r.index();
      if (i >= count || (!set.empty() && i <= set.back())) {
        r.fail(idx, "open set indices must be increasing point indices");
      }
      set.push_back(i);
      if (r.done()) {
        r.fail_at_end("unterminated open set");
      }
    }
    r.next("}");
    st.open_sets.push_back(std::move(set));
  }
  return st;
}

std::string write_space(const SetTopology& st, Kind kind) {
  std::ostringstream os;
  os << "space " << to_string(kind) << ' ' << st.points.size() << '\n';
  for (const auto& p : st.points) {
    os << "point " << p.index << ' ';
    write_block(os, p.shape);
  }
  for (const auto& set : st.open_sets) {
    os << "open {";
    for (auto i : set) {
      os << ' ' << i;
    }
    os << " }\n";
  }
  return os.str();
}

std::string write_basis(const Basis& b) {
  PartsFile parts;
  parts.kind = b.carrier().kind();
  for (std::size_t i = 0; i < b.elements().size(); ++i) {
    parts.parts.push_back(NamedPart{"b" + std::to_string(i), b.elements()[i]});
  }
  return write_parts(parts);
}

std::string inline_shape(const Shape& s) {
  if (s.is_empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& p : s.points()) {
    os << (first ? "" : "; ") << "pt " << p.x << ' ' << p.y;
    first = false;
  }
  for (const auto& seg : s.segments()) {
    os << (first ? "" : "; ") << "seg " << seg.a().x << ' ' << seg.a().y << ' ' << seg.b().x << ' ' << seg.b().y;
    first = false;
  }
  return os.str();
}

namespace {

// Covering pairs (i, j): less(i, j) with nothing strictly between.
template <typename Less>
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(std::size_t n, Less less) {
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lt[i][j] = i != j && less(i, j);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) {
        continue;
      }
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        covered = !(lt[i][k] && lt[k][j]);
      }
      if (covered) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::string show_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::string topology_to_dot(const Topology& t, const std::optional<Separation>& highlight) {
  const auto& opens = t.opens();
  std::ostringstream os;
  os << "digraph topology {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < opens.size(); ++i) {
    os << "  o" << i << " [label=\"o" << i << "\"";
    if (highlight && (opens[i] == highlight->c || opens[i] == highlight->d)) {
      os << ", style=filled, fillcolor=\"" << (opens[i] == highlight->c ? "lightblue" : "lightpink") << "\"";
    }
    os << "];\n";
  }
  for (const auto& [i, j] : covering_pairs(opens.size(), [&](std::size_t a, std::size_t b) {
         return part_of(opens[a], opens[b]);
       })) {
    os << "  o" << i << " -> o" << j << ";\n";
  }
  os << "  legend [shape=note, label=\"";
  for (std::size_t i = 0; i < opens.size(); ++i) {
    os << 'o' << i << ": " << inline_shape(opens[i]) << "\\l";
  }
  os << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string space_to_dot(const SetTopology& st) {
  const auto& sets = st.open_sets;
  std::ostringstream os;
  os << "digraph space {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    os << "  u" << i << " [label=\"" << show_set(sets[i]) << "\"];\n";
  }
  for (const auto& [i, j] : covering_pairs(sets.size(), [&](std::size_t a, std::size_t b) {
         return std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end());
       })) {
    os << "  u" << i << " -> u" << j << ";\n";
  }
  os << "  legend [shape=note, label=\"";
  for (const auto& p : st.points) {
    os << p.index << ": " << inline_shape(p.shape) << "\\l";
  }
  os << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "", "cannot read file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Shape load_shape(const std::filesystem::path& path) { return parse_shape(read_file(path), path.string()); }

PartsFile load_parts(const std::filesystem::path& path) { return parse_parts(read_file(path), path.string()); }

Topology load_topology(const std::filesystem::path& path) {
  return parse_topology(read_file(path), path.string(), path.parent_path());
}

TopologyFile load_topology_file(const std::filesystem::path& path) {
  return parse_topology_file(read_file(path), path.string(), path.parent_path());
}

Mapping load_mapping(const std::filesystem::path& path) {
  return parse_mapping(read_file(path), path.string(), path.parent_path());
}

}  // namespace shapetop::io
