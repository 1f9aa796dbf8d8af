// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "shapetop/cli.hpp"
#include "shapetop/error.hpp"
#include "support.hpp"

#ifndef SHAPETOP_CLI_PATH
#define SHAPETOP_CLI_PATH ""
#endif

using namespace shapetop;
using namespace shapetop::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) {
        first_failure_ = what;
      }
    }
  }
  std::size_t total() const { return total_; }
  std::size_t failed() const { return failed_; }
  std::size_t passed() const { return total_ - failed_; }
  bool ok() const { return failed_ == 0; }
  std::string failure() const { return failed_ == 0 ? "" : "; first failure: " + first_failure_; }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

std::set<Shape> as_set(const Topology& t) { return {t.opens().begin(), t.opens().end()}; }

bool subset(const std::set<Shape>& a, const std::set<Shape>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// 1. Algebra laws on random U1 shapes.
Outcome algebra_laws() {
  Gen g(1001);
  Tally cases;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) {
    const Shape a = g.shape(6);
    const Shape b = g.shape(6);
    const Shape c = g.shape(6);
    bool ok = true;
    ok = ok && sum(a, a) == a && product(a, a) == a;
    ok = ok && sum(a, b) == sum(b, a) && product(a, b) == product(b, a);
    ok = ok && sum(sum(a, b), c) == sum(a, sum(b, c));
    ok = ok && product(product(a, b), c) == product(a, product(b, c));
    ok = ok && sum(a, product(a, b)) == a && product(a, sum(a, b)) == a;
    ok = ok && product(a, sum(b, c)) == sum(product(a, b), product(a, c));
    ok = ok && sum(a, product(b, c)) == product(sum(a, b), sum(a, c));
    ok = ok && difference(a, difference(a, b)) == product(a, b);
    ok = ok && part_of(a, sum(a, b)) && part_of(product(a, b), a) && part_of(product(a, b), b);
    ok = ok && io::parse_shape(io::write_shape(a)) == a;
    cases.check(ok, "case " + std::to_string(i));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  return {cases.ok() && secs < 10.0,
          ratio(cases.passed(), 1000) + " random shape triples satisfy every law in " + buf + " s" + cases.failure()};
}

// 2. U0 shapes agree with plain set operations.
Outcome u0_oracle_agreement() {
  Gen g(1002);
  Tally cases;
  for (int i = 0; i < 1000; ++i) {
    const Shape a = g.points(6);
    const Shape b = g.points(6);
    using oracle::U0Op;
    const bool ok = std::get<Shape>(oracle::u0_oracle(U0Op::Sum, a, b)) == sum(a, b) &&
                    std::get<Shape>(oracle::u0_oracle(U0Op::Product, a, b)) == product(a, b) &&
                    std::get<Shape>(oracle::u0_oracle(U0Op::Difference, a, b)) == difference(a, b) &&
                    std::get<bool>(oracle::u0_oracle(U0Op::PartOf, a, b)) == part_of(a, b);
    cases.check(ok, "pair " + std::to_string(i));
  }
  return {cases.ok(), ratio(cases.passed(), 1000) + " point-shape pairs agree on all four operations" + cases.failure()};
}

// 3. Generated topologies are topologies containing P and nothing beyond +/. expressions.
Outcome generated_topologies() {
  Gen g(1003);
  Tally cases;
  std::size_t largest = 0;
  for (int i = 0; i < 200; ++i) {
    const Shape carrier = g.shape(4);
    std::vector<Shape> p;
    for (int k = g.uniform(1, 3); k > 0; --k) {
      p.push_back(g.nonempty_subpart(carrier));
    }
    GenerateOptions opts;
    opts.add_carrier_if_needed = true;
    const Topology t = generate_topology(p, carrier, opts);
    largest = std::max(largest, t.size());
    std::vector<Shape> generators = p;
    if (sum_of(p, Kind::U1) != carrier) {
      generators.push_back(carrier);
    }
    const auto expr = oracle::expression_search(generators, Kind::U1);
    bool ok = is_topology(t.opens(), carrier).ok && closed_family(t.opens());
    ok = ok && std::all_of(p.begin(), p.end(), [&](const Shape& s) { return t.is_open(s); });
    ok = ok && as_set(t) == std::set<Shape>(expr.begin(), expr.end());
    cases.check(ok, "generator set " + std::to_string(i));
  }
  return {cases.ok(), ratio(cases.passed(), 200) + " generator sets (largest topology " + std::to_string(largest) +
                          " opens) match expression search" + cases.failure()};
}

// 4. Every basis of a topology reduces to the same reduced basis.
Outcome reduced_basis_uniqueness() {
  Gen g(1004);
  Tally cases;
  std::size_t bases_seen = 0;
  for (int i = 0; i < 200; ++i) {
    const Shape carrier = g.shape(4);
    const Topology t = g.topology(carrier, 3, 10);
    const Basis expected = reduce_basis(t);
    std::vector<Shape> nonempty;
    for (const auto& o : t.opens()) {
      if (!o.is_empty()) {
        nonempty.push_back(o);
      }
    }
    bool ok = is_reduced(expected.elements()) && generate_from_basis(expected) == t;
    std::size_t found = 0;
    for (std::uint32_t pick = 1; pick < (1u << nonempty.size()); ++pick) {
      std::vector<Shape> subset;
      for (std::size_t k = 0; k < nonempty.size(); ++k) {
        if (pick & (1u << k)) {
          subset.push_back(nonempty[k]);
        }
      }
      if (!is_basis(subset, carrier).ok) {
        continue;
      }
      const Basis b = Basis::from_elements(carrier, subset);
      if (generate_from_basis(b) != t) {
        continue;
      }
      ++found;
      ok = ok && reduce_basis(b) == expected;
    }
    ok = ok && found > 0;
    bases_seen += found;
    cases.check(ok, "topology " + std::to_string(i));
  }
  return {cases.ok(), ratio(cases.passed(), 200) + " topologies; " + std::to_string(bases_seen) +
                          " bases enumerated, each reducing to the common reduced basis" + cases.failure()};
}

// 5. The subshape basis generates the subshape topology.
Outcome subshape_basis_theorem() {
  Gen g(1005);
  Tally cases;
  for (int i = 0; i < 200; ++i) {
    const Shape carrier = g.shape(4);
    const Topology t = g.topology(carrier, 3, 40);
    std::vector<Shape> elements;
    if (i % 2 == 0) {
      elements = reduce_basis(t).elements();
    } else {
      for (const auto& o : t.opens()) {
        if (!o.is_empty()) {
          elements.push_back(o);
        }
      }
    }
    const Basis b = Basis::from_elements(carrier, elements);
    const Shape x = g.nonempty_subpart(carrier, 0.7);
    const Topology tx = subshape_topology(t, x);
    std::set<Shape> direct;
    for (const auto& o : t.opens()) {
      direct.insert(product(x, o));
    }
    const bool ok = generate_from_basis(subshape_basis(b, x)) == tx && as_set(tx) == direct;
    cases.check(ok, "pair " + std::to_string(i));
  }
  return {cases.ok(), ratio(cases.passed(), 200) + " (topology, part) pairs: generated B_x equals T_x" + cases.failure()};
}

// 6. Interior and closure.
Outcome interior_closure() {
  Gen g(1006);
  Tally cases;
  std::size_t open_cases = 0;
  for (int i = 0; i < 500; ++i) {
    const Shape carrier = g.shape(4);
    const Topology t = g.topology(carrier, 3, 40);
    const Shape x = g.coin(0.25) ? t.opens()[static_cast<std::size_t>(g.uniform(0, static_cast<int>(t.size()) - 1))]
                                 : g.subpart(carrier, 0.7);
    const Shape in = interior(x, t);
    const Shape cl = closure(x, t);
    Shape brute_cl = carrier;
    std::vector<Shape> inside;
    for (const auto& o : t.opens()) {
      if (part_of(x, o)) {
        brute_cl = product(brute_cl, o);
      }
      if (part_of(o, x)) {
        inside.push_back(o);
      }
    }
    const bool open = t.is_open(x);
    open_cases += open ? 1 : 0;
    bool ok = part_of(in, x) && part_of(x, cl);
    ok = ok && open == (x == cl);
    ok = ok && cl == brute_cl && t.is_open(cl);
    ok = ok && in == sum_of(inside, Kind::U1) && t.is_open(in);
    ok = ok && (!open || in == x);
    cases.check(ok, "pair " + std::to_string(i));
  }
  return {cases.ok(), ratio(cases.passed(), 500) + " (topology, part) pairs, " + std::to_string(open_cases) +
                          " with open parts" + cases.failure()};
}

// 7. Continuity.
Outcome continuity() {
  Gen g(1007);
  Tally identity_cases;
  Tally closure_cases;
  std::size_t continuous_count = 0;
  std::vector<std::tuple<Mapping, Topology, Topology>> continuous_maps;
  for (int i = 0; i < 100; ++i) {
    const Shape carrier = g.shape(3);
    // Source and target: coarser then finer, unrelated, or finer then coarser.
    Topology t1 = g.topology(carrier, 2, 30);
    Topology t2 = t1;
    switch (i % 3) {
      case 0:
        t2 = refine(t1, std::vector<Shape>{g.nonempty_subpart(carrier)}, 200).topology;
        break;
      case 1:
        t2 = g.topology(carrier, 2, 30);
        break;
      default:
        t1 = refine(t2, std::vector<Shape>{g.nonempty_subpart(carrier)}, 200).topology;
        break;
    }
    const ContinuityReport r = is_continuous(Mapping::identity(), t1, t2);
    const bool expected = subset(as_set(t2), as_set(t1));
    identity_cases.check(r.continuous == expected, "identity pair " + std::to_string(i));
    if (r.continuous) {
      ++continuous_count;
      continuous_maps.emplace_back(Mapping::identity(), t1, t2);
    }
  }

  // f(x) = x - B from [0,3] with B = [1,2].
  const Shape s = X(0, 3);
  const Shape b = X(1, 2);
  const Shape plus = difference(s, b);
  const Topology src = topo(s, {Shape(), X(0, 2), X(1, 3), b, s});
  const Topology tgt = topo(plus, {Shape(), X(0, 1), X(2, 3), plus});
  const Mapping minus_b({SubtractStep{b}});
  const ContinuityReport ex = is_continuous(minus_b, src, tgt);
  const bool bottom_to_b = !ex.table.empty() && ex.table.front().first.is_empty() &&
                           ex.table.front().second.defined() && ex.table.front().second.shape() == b &&
                           !b.is_empty();
  const bool example_ok = ex.continuous && bottom_to_b;
  if (ex.continuous) {
    continuous_maps.emplace_back(minus_b, src, tgt);
  }

  // A translated copy of a topology.
  {
    const Shape carrier = g.shape(3);
    const Topology t = g.topology(carrier, 3, 30);
    const AffineStep shift = AffineStep::translation(q(5), q(-3));
    std::vector<Shape> moved;
    for (const auto& o : t.opens()) {
      moved.push_back(shift.apply(o));
    }
    const Topology image_t = topo(shift.apply(carrier), moved);
    const Mapping f({shift});
    if (is_continuous(f, t, image_t).continuous) {
      continuous_maps.emplace_back(f, t, image_t);
    } else {
      closure_cases.check(false, "translation is not continuous");
    }
  }

  for (const auto& [f, source, target] : continuous_maps) {
    for (int k = 0; k < 200; ++k) {
      const Shape x = g.subpart(source.carrier(), 0.7);
      closure_cases.check(check_closure_image(f, x, source, target), "closure image");
    }
  }
  return {identity_cases.ok() && example_ok && closure_cases.ok(),
          "identity verdict matches inclusion on " + ratio(identity_cases.passed(), 100) + " pairs (" +
              std::to_string(continuous_count) + " continuous); x - B continuous with f*(0) = B: " +
              (example_ok ? "yes" : "no") + "; closure image holds " + ratio(closure_cases.passed(), closure_cases.total()) +
              " over " + std::to_string(continuous_maps.size()) + " mappings" + identity_cases.failure() +
              closure_cases.failure()};
}

// 8. Closed-form preimages equal the fragment brute force.
Outcome preimage_agreement() {
  Gen g(1008);
  Tally cases;
  std::size_t undefined = 0;
  std::size_t skipped = 0;
  auto small = [&](int n) { return g.shape(n, 4, 2); };
  auto random_step = [&]() -> Step {
    switch (g.uniform(0, 2)) {
      case 0:
        return AddStep{small(2)};
      case 1:
        return SubtractStep{small(2)};
      default: {
        static const std::array<std::array<int, 4>, 4> mats{{{1, 0, 0, 1}, {0, -1, 1, 0}, {-1, 0, 0, 1}, {2, 0, 0, 2}}};
        const auto& m = mats[static_cast<std::size_t>(g.uniform(0, 3))];
        return AffineStep({q(m[0]), q(m[1]), q(m[2]), q(m[3])}, {q(g.uniform(-2, 2)), q(g.uniform(-2, 2))});
      }
    }
  };
  int i = 0;
  while (cases.total() < 300) {
    ++i;
    std::vector<Step> steps;
    for (int k = g.uniform(1, 2); k > 0; --k) {
      steps.push_back(random_step());
    }
    const Mapping f(steps);
    const Shape domain = small(3);
    Shape y = small(3);
    if (g.coin(0.4)) {
      // Favour defined cases by making y contain the image of a random part.
      y = sum(y, image(f, g.subpart(domain)));
    }
    oracle::BrutePreimage brute;
    try {
      brute = oracle::brute_preimage(f, y, domain);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooManyFragments) {
        throw;
      }
      ++skipped;
      continue;
    }
    const PreimageResult closed = preimage(f, y, domain);
    bool ok = closed == brute.result;
    if (brute.admissible > 0) {
      ok = ok && brute.supremum_is_member;
    }
    if (!closed.defined()) {
      ++undefined;
    }
    cases.check(ok, "case " + std::to_string(i));
  }
  return {cases.ok() && undefined >= 50, ratio(cases.passed(), 300) + " cases agree, " + std::to_string(undefined) +
                                             " undefined (" + std::to_string(skipped) +
                                             " draws over the fragment limit redrawn)" + cases.failure()};
}

// Exhaustive pair scan for a separation.
bool has_separation_by_pairs(const Topology& t) {
  for (const auto& c : t.opens()) {
    for (const auto& d : t.opens()) {
      if (!c.is_empty() && !d.is_empty() && product(c, d).is_empty() && sum(c, d) == t.carrier()) {
        return true;
      }
    }
  }
  return false;
}

// 9. Connectedness.
Outcome connectedness() {
  Gen g(1009);
  Tally separations;
  std::size_t disconnected = 0;
  for (int i = 0; i < 300; ++i) {
    const Shape carrier = g.shape(4);
    Topology t = g.topology(carrier, 3, 40);
    if (i % 3 == 0) {
      const auto parts = g.partition(carrier, 3);
      std::vector<Shape> gens = parts;
      gens.push_back(g.nonempty_subpart(carrier));
      GenerateOptions opts;
      opts.add_carrier_if_needed = true;
      t = generate_topology(i % 2 == 0 ? parts : gens, carrier, opts);
    }
    const auto sep = find_separation(t);
    const bool brute = has_separation_by_pairs(t);
    bool ok = sep.has_value() == brute;
    if (sep) {
      ++disconnected;
      ok = ok && t.is_open(sep->c) && t.is_open(sep->d) && !sep->c.is_empty() && !sep->d.is_empty() &&
           product(sep->c, sep->d).is_empty() && sum(sep->c, sep->d) == carrier;
    }
    separations.check(ok, "topology " + std::to_string(i));
  }

  Tally disjoint;
  for (int i = 0; i < 100; ++i) {
    Shape carrier = g.shape(4);
    std::vector<Shape> parts = g.partition(carrier, 4);
    while (parts.size() < 2) {
      carrier = g.shape(4);
      parts = g.partition(carrier, 4);
    }
    const Topology t = generate_from_basis(Basis::from_elements(carrier, parts));
    const EquivalenceReport r = is_totally_disconnected(t);
    disjoint.check(r.all_agree() && r.condition1 && r.condition2 && r.condition3 && r.condition4,
                   "disjoint basis " + std::to_string(i));
  }

  Tally general;
  std::size_t general_true = 0;
  for (int i = 0; i < 100; ++i) {
    const Shape carrier = g.shape(4);
    const Topology t = g.topology(carrier, 3, 40);
    const EquivalenceReport r = is_totally_disconnected(t);
    general_true += r.totally_disconnected() ? 1 : 0;
    general.check(r.all_agree(), "general topology " + std::to_string(i));
  }

  struct Fixture {
    const char* shape;
    const char* topology;
    bool visual;
    bool structural;
  };
  const Fixture fixtures[] = {
      {"line.shape", "line_connected.topo", true, true},
      {"line.shape", "line_split.topo", true, false},
      {"two_piece.shape", "two_piece_connected.topo", false, true},
      {"two_piece.shape", "two_piece_split.topo", false, false},
  };
  Tally combos;
  for (const auto& f : fixtures) {
    const ConnectivityReport r = report(io::load_shape(data(f.shape)), io::load_topology(data(f.topology)));
    combos.check(r.visually_connected == f.visual && r.structurally_connected == f.structural, f.topology);
  }

  return {separations.ok() && disjoint.ok() && general.ok() && combos.ok(),
          "separation agrees with pair scan " + ratio(separations.passed(), 300) + " (" + std::to_string(disconnected) +
              " disconnected); conditions agree and hold on " + ratio(disjoint.passed(), 100) +
              " disjoint-basis topologies; agree on " + ratio(general.passed(), 100) + " general topologies (" +
              std::to_string(general_true) + " totally disconnected); visual x structural fixtures " +
              ratio(combos.passed(), 4) + separations.failure() + disjoint.failure() + general.failure() +
              combos.failure()};
}

// 10. Space isomorphism and the set-topology catalog.
Outcome space_isomorphism() {
  Gen g(1010);
  const std::size_t expected_counts[] = {1, 4, 29};
  std::vector<std::set<oracle::SetFamily>> catalog(4);
  bool counts_ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto all = oracle::enumerate_set_topologies(n);
    counts_ok = counts_ok && all.size() == expected_counts[n - 1];
    catalog[n] = std::set<oracle::SetFamily>(all.begin(), all.end());
  }
  Tally iso;
  Tally in_catalog;
  for (int i = 0; i < 200; ++i) {
    const Shape carrier = g.shape(4);
    const Topology t = g.topology(carrier, 3, 40);
    const SetTopology st = star_topology(t);
    iso.check(check_isomorphism(t, st).ok && is_set_topology(st), "topology " + std::to_string(i));
    if (st.points.size() <= 3) {
      in_catalog.check(catalog[st.points.size()].contains(oracle::to_family(st)), "catalog " + std::to_string(i));
    }
  }
  return {iso.ok() && in_catalog.ok() && counts_ok && in_catalog.total() > 0,
          "isomorphic " + ratio(iso.passed(), 200) + "; " + ratio(in_catalog.passed(), in_catalog.total()) +
              " spaces with <= 3 points found in the catalog; counts 1/4/29 " + (counts_ok ? "match" : "differ") +
              iso.failure() + in_catalog.failure()};
}

// 11. Determinism of every CLI command, in process and as a separate program.
Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "shapetop_acceptance";
  fs::create_directories(tmp);
  const std::string out_file = (tmp / "out.txt").string();
  const std::vector<std::vector<std::string>> commands{
      {"normalize", data("overlap.shape")},
      {"alg", "sum", data("s02.shape"), data("s13.shape")},
      {"alg", "product", data("s02.shape"), data("s13.shape")},
      {"alg", "diff", data("s03.shape"), data("s13.shape")},
      {"alg", "partof", data("s13.shape"), data("s03.shape")},
      {"alg", "touches", data("s01.shape"), data("s13.shape")},
      {"alg", "boundary", data("two_piece.shape")},
      {"alg", "visual", data("two_piece.shape")},
      {"topo", "gen", data("gen2.parts"), "--carrier", data("s03.shape"), "-o", out_file},
      {"topo", "gen", data("gen2.parts"), "--carrier", data("s03.shape")},
      {"topo", "refine", data("left.topo"), data("gen2.parts")},
      {"topo", "check", data("five.topo")},
      {"topo", "check", data("missing_product.topo")},
      {"topo", "reduce", data("five.topo")},
      {"topo", "compare", data("left.topo"), data("right.topo")},
      {"topo", "sub", data("five.topo"), data("s13.shape")},
      {"topo", "classify", data("five.topo"), data("half.shape")},
      {"topo", "dot", data("five.topo"), "-o", out_file},
      {"topo", "dot", data("two_piece_split.topo"), "--separation", "-o", out_file},
      {"topo", "dot", data("two_piece_connected.topo")},
      {"space", "build", data("five.topo")},
      {"space", "build", data("five.topo"), "--dot", "-o", out_file},
      {"space", "check", data("five.topo")},
      {"map", "image", data("rot90.map"), data("two_piece.shape")},
      {"map", "preimage", data("add_a.map"), data("s03.shape"), "--domain", data("s02.shape")},
      {"map", "preimage", data("add_a.map"), data("s01.shape"), "--domain", data("s02.shape")},
      {"map", "continuous", data("sub_b.map"), data("five.topo"), data("two_piece_split.topo")},
      {"conn", "report", data("two_piece.shape"), data("two_piece_connected.topo")},
      {"conn", "report", data("line.shape"), data("line_split.topo")},
      {"conn", "totally", data("two_piece_split.topo")},
      {"oracle", "preimage", data("add_a.map"), data("s03.shape"), "--domain", data("s02.shape")},
  };
  auto in_process = [&](const std::vector<std::string>& args) {
    fs::remove(out_file);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    std::string file = fs::exists(out_file) ? io::read_file(out_file) : "";
    return std::to_string(code) + "\n" + out.str() + "\n" + err.str() + "\n" + file;
  };
  const std::string cli_path = SHAPETOP_CLI_PATH;
  auto as_process = [&](const std::vector<std::string>& args) {
    fs::remove(out_file);
    const std::string stdout_path = (tmp / "stdout.txt").string();
    std::string cmd = "\"" + cli_path + "\"";
    for (const auto& a : args) {
      cmd += " \"" + a + "\"";
    }
    cmd += " > \"" + stdout_path + "\" 2>&1";
    const int code = std::system(cmd.c_str());
    std::string file = fs::exists(out_file) ? io::read_file(out_file) : "";
    return std::to_string(code) + "\n" + io::read_file(stdout_path) + "\n" + file;
  };
  Tally runs;
  std::size_t nonempty = 0;
  for (const auto& args : commands) {
    const std::string first = in_process(args);
    const std::string second = in_process(args);
    runs.check(first == second, "in process: " + args[0] + " " + args[1]);
    nonempty += first.size() > 8 ? 1 : 0;
    if (!cli_path.empty()) {
      const std::string p1 = as_process(args);
      const std::string p2 = as_process(args);
      runs.check(p1 == p2, "process: " + args[0] + " " + args[1]);
    }
  }
  fs::remove_all(tmp);
  return {runs.ok() && nonempty == commands.size(),
          ratio(runs.passed(), runs.total()) + " repeated runs byte-identical over " + std::to_string(commands.size()) +
              " commands" + (cli_path.empty() ? " (in process only)" : " (in process and as a program)") +
              runs.failure()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 algebra laws", algebra_laws},
      {"AC2 U0 set oracle", u0_oracle_agreement},
      {"AC3 generated topologies", generated_topologies},
      {"AC4 reduced basis uniqueness", reduced_basis_uniqueness},
      {"AC5 subshape basis", subshape_basis_theorem},
      {"AC6 interior and closure", interior_closure},
      {"AC7 continuity", continuity},
      {"AC8 preimage oracle", preimage_agreement},
      {"AC9 connectedness", connectedness},
      {"AC10 space isomorphism", space_isomorphism},
      {"AC11 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, " [%.1f s]", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << elapsed << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
