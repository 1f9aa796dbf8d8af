#include "shapetop/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "shapetop/connectedness.hpp"
#include "shapetop/error.hpp"
#include "shapetop/io.hpp"
#include "shapetop/oracle.hpp"

namespace shapetop::cli {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string braced(const Shape& s) { return "{" + io::inline_shape(s) + "}"; }

std::string show(const PreimageResult& r) { return r.defined() ? braced(r.shape()) : "undefined"; }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t max_opens_from(std::optional<std::size_t> flag) {
  if (flag) {
    return *flag;
  }
  const char* env = std::getenv("SHAPETOP_MAX_OPENS");
  if (env == nullptr || *env == '\0') {
    return kDefaultMaxOpens;
  }
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("SHAPETOP_MAX_OPENS must be a positive integer");
  }
  return static_cast<std::size_t>(std::stoull(text));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    throw UsageError("cannot write " + path);
  }
}

int verdict(bool b) { return b ? kOk : kFalse; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topologies on shapes", "shapetop"};
  app.require_subcommand(1);

  std::function<int()> action;
  // Positional and flag storage shared by the leaf commands.
  std::string a, b, c, output, carrier, domain, space_file;
  bool add_carrier = false, as_dot = false, with_separation = false;
  std::optional<std::size_t> max_opens;
  std::size_t count = 0;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  std::function<int()> body) {
    CLI::App* cmd = parent->add_subcommand(name, desc);
    cmd->callback([&action, body] { action = body; });
    return cmd;
  };

  // normalize
  leaf(&app, "normalize", "Print the canonical maximal form of a shape",
       [&] {
         out << io::write_shape(io::load_shape(a));
         return kOk;
       })
      ->add_option("shape", a)->required();

  // alg
  CLI::App* alg = app.add_subcommand("alg", "Shape algebra");
  alg->require_subcommand(1);
  auto binary_shape = [&](const std::string& name, const std::string& desc, Shape (*op)(const Shape&, const Shape&)) {
    CLI::App* cmd = leaf(alg, name, desc, [&, op] {
      out << io::write_shape(op(io::load_shape(a), io::load_shape(b)));
      return kOk;
    });
    cmd->add_option("a", a)->required();
    cmd->add_option("b", b)->required();
  };
  binary_shape("sum", "a + b", &sum);
  binary_shape("product", "a . b", &product);
  binary_shape("diff", "a - b", &difference);
  {
    CLI::App* cmd = leaf(alg, "partof", "Whether a is part of b", [&] {
      const bool r = part_of(io::load_shape(a), io::load_shape(b));
      out << yes_no(r) << '\n';
      return verdict(r);
    });
    cmd->add_option("a", a)->required();
    cmd->add_option("b", b)->required();
  }
  {
    CLI::App* cmd = leaf(alg, "touches", "Whether a and b touch", [&] {
      const bool r = touches(io::load_shape(a), io::load_shape(b));
      out << yes_no(r) << '\n';
      return verdict(r);
    });
    cmd->add_option("a", a)->required();
    cmd->add_option("b", b)->required();
  }
  leaf(alg, "boundary", "Endpoints of the maximal segments",
       [&] {
         out << io::write_shape(boundary(io::load_shape(a)));
         return kOk;
       })
      ->add_option("shape", a)->required();
  leaf(alg, "visual", "Whether a shape is visually connected",
       [&] {
         const bool r = visually_connected(io::load_shape(a));
         out << yes_no(r) << '\n';
         return verdict(r);
       })
      ->add_option("shape", a)->required();

  // topo
  CLI::App* topo = app.add_subcommand("topo", "Topologies on a shape");
  topo->require_subcommand(1);
  {
    CLI::App* cmd = leaf(topo, "gen", "Generate the topology of a parts file", [&] {
      const io::PartsFile parts = io::load_parts(a);
      GenerateOptions opts;
      opts.add_carrier_if_needed = add_carrier;
      opts.max_opens = max_opens_from(max_opens);
      const auto shapes = parts.shapes();
      emit(io::write_topology(generate_topology(shapes, io::load_shape(carrier), opts)), output, out);
      return kOk;
    });
    cmd->add_option("parts", a)->required();
    cmd->add_option("--carrier", carrier, "Carrier .shape file")->required();
    cmd->add_flag("--add-carrier", add_carrier, "Add the carrier when the parts do not exhaust it");
    cmd->add_option("--max-opens", max_opens, "Cap on the number of opens");
    cmd->add_option("-o,--output", output);
  }
  {
    CLI::App* cmd = leaf(topo, "refine", "Refine a topology by more parts", [&] {
      const Topology t = io::load_topology(a);
      const io::PartsFile parts = io::load_parts(b);
      const auto shapes = parts.shapes();
      const RefineResult r = refine(t, shapes, max_opens_from(max_opens));
      for (const auto& s : r.already_open) {
        err << "warning: AlreadyOpen: " << braced(s) << '\n';
      }
      emit(io::write_topology(r.topology), output, out);
      return kOk;
    });
    cmd->add_option("topology", a)->required();
    cmd->add_option("parts", b)->required();
    cmd->add_option("--max-opens", max_opens);
    cmd->add_option("-o,--output", output);
  }
  leaf(topo, "check", "Check the topology conditions",
       [&] {
         const io::TopologyFile f = io::load_topology_file(a);
         const TopologyCheck r = is_topology(f.opens, f.carrier);
         out << "topology: " << yes_no(r.ok) << '\n';
         if (!r.ok) {
           out << "violation: " << r.violation << '\n';
           if (r.witness) {
             out << "witness: " << braced(r.witness->first) << ' ' << braced(r.witness->second) << '\n';
           }
         }
         return verdict(r.ok);
       })
      ->add_option("topology", a)->required();
  leaf(topo, "reduce", "Print the reduced basis",
       [&] {
         out << io::write_basis(reduce_basis(io::load_topology(a)));
         return kOk;
       })
      ->add_option("topology", a)->required();
  {
    CLI::App* cmd = leaf(topo, "compare", "Compare two topologies", [&] {
      const Topology t1 = io::load_topology(a);
      const Topology t2 = io::load_topology(b);
      out << to_string(compare(t1, t2)) << '\n';
      return kOk;
    });
    cmd->add_option("t1", a)->required();
    cmd->add_option("t2", b)->required();
  }
  {
    CLI::App* cmd = leaf(topo, "sub", "Subshape topology", [&] {
      out << io::write_topology(subshape_topology(io::load_topology(a), io::load_shape(b)));
      return kOk;
    });
    cmd->add_option("topology", a)->required();
    cmd->add_option("part", b)->required();
  }
  {
    CLI::App* cmd = leaf(topo, "classify", "Open, closed, clopen, dense, interior and closure", [&] {
      const PartClass pc = classify_part(io::load_shape(b), io::load_topology(a));
      out << "open: " << yes_no(pc.open) << '\n'
          << "closed: " << yes_no(pc.closed) << '\n'
          << "clopen: " << yes_no(pc.clopen) << '\n'
          << "dense: " << yes_no(pc.dense) << '\n'
          << "interior: " << braced(pc.interior) << '\n'
          << "closure: " << braced(pc.closure) << '\n';
      return kOk;
    });
    cmd->add_option("topology", a)->required();
    cmd->add_option("part", b)->required();
  }
  {
    CLI::App* cmd = leaf(topo, "dot", "Hasse diagram in DOT", [&] {
      const Topology t = io::load_topology(a);
      std::optional<Separation> sep;
      if (with_separation) {
        sep = find_separation(t);
      }
      emit(io::topology_to_dot(t, sep), output, out);
      return kOk;
    });
    cmd->add_option("topology", a)->required();
    cmd->add_flag("--separation", with_separation, "Fill the members of a separation");
    cmd->add_option("-o,--output", output);
  }

  // space
  CLI::App* space = app.add_subcommand("space", "The space of a shape");
  space->require_subcommand(1);
  {
    CLI::App* cmd = leaf(space, "build", "Points and open sets of the space", [&] {
      const Topology t = io::load_topology(a);
      const SetTopology st = star_topology(t);
      emit(as_dot ? io::space_to_dot(st) : io::write_space(st, t.carrier().kind()), output, out);
      return kOk;
    });
    cmd->add_option("topology", a)->required();
    cmd->add_flag("--dot", as_dot);
    cmd->add_option("-o,--output", output);
  }
  {
    CLI::App* cmd = leaf(space, "check", "Check that the space is isomorphic to the topology", [&] {
      const Topology t = io::load_topology(a);
      const SetTopology st = space_file.empty() ? star_topology(t) : io::parse_space(io::read_file(space_file), space_file);
      const IsomorphismCheck r = check_isomorphism(t, st);
      out << "isomorphic: " << yes_no(r.ok) << '\n';
      if (!r.ok) {
        out << "witness: " << r.witness << '\n';
      }
      return verdict(r.ok);
    });
    cmd->add_option("topology", a)->required();
    cmd->add_option("--space", space_file, "A .space file to check instead of the built one");
  }

  // map
  CLI::App* map = app.add_subcommand("map", "Mappings between shapes");
  map->require_subcommand(1);
  {
    CLI::App* cmd = leaf(map, "image", "Image of a part", [&] {
      out << io::write_shape(image(io::load_mapping(a), io::load_shape(b)));
      return kOk;
    });
    cmd->add_option("map", a)->required();
    cmd->add_option("part", b)->required();
  }
  {
    CLI::App* cmd = leaf(map, "preimage", "Largest part whose image embeds in y", [&] {
      const PreimageResult r = preimage(io::load_mapping(a), io::load_shape(b), io::load_shape(domain));
      if (!r.defined()) {
        out << "undefined\n";
        return kFalse;
      }
      out << io::write_shape(r.shape());
      return kOk;
    });
    cmd->add_option("map", a)->required();
    cmd->add_option("y", b)->required();
    cmd->add_option("--domain", domain)->required();
  }
  {
    CLI::App* cmd = leaf(map, "continuous", "Continuity verdict and the f* table", [&] {
      const Mapping f = io::load_mapping(a);
      const Topology src = io::load_topology(b);
      const Topology tgt = io::load_topology(c);
      const ContinuityReport r = is_continuous(f, src, tgt);
      out << "continuous: " << yes_no(r.continuous) << '\n';
      if (!r.continuous) {
        out << "witness: " << r.witness << '\n';
      }
      out << "injective: " << yes_no(r.injective) << '\n';
      out << "f*:\n";
      for (std::size_t i = 0; i < r.table.size(); ++i) {
        const auto& [open, pre] = r.table[i];
        out << "  o" << i << ' ' << braced(open) << " -> " << show(pre);
        if (pre.defined()) {
          if (auto j = src.index_of(pre.shape())) {
            out << " = o" << *j;
          } else {
            out << " not open";
          }
        }
        out << '\n';
      }
      return verdict(r.continuous);
    });
    cmd->add_option("map", a)->required();
    cmd->add_option("source", b)->required();
    cmd->add_option("target", c)->required();
  }

  // conn
  CLI::App* conn = app.add_subcommand("conn", "Connectedness");
  conn->require_subcommand(1);
  {
    CLI::App* cmd = leaf(conn, "report", "Visual and structural connectedness", [&] {
      const ConnectivityReport r = report(io::load_shape(a), io::load_topology(b));
      out << "structurally_connected: " << yes_no(r.structurally_connected) << '\n';
      if (r.witness) {
        out << "separation: " << braced(r.witness->c) << ' ' << braced(r.witness->d) << '\n';
      }
      out << "visually_connected: " << yes_no(r.visually_connected) << '\n'
          << "locally_connected: " << yes_no(r.locally_connected) << '\n'
          << "totally_disconnected: " << yes_no(r.totally_disconnected) << '\n';
      return kOk;
    });
    cmd->add_option("shape", a)->required();
    cmd->add_option("topology", b)->required();
  }
  leaf(conn, "totally", "The four totally-disconnected conditions",
       [&] {
         const EquivalenceReport r = is_totally_disconnected(io::load_topology(a));
         out << "disconnected: " << yes_no(r.disconnected) << '\n'
             << "condition1: " << yes_no(r.condition1) << '\n'
             << "condition2: " << yes_no(r.condition2) << '\n'
             << "condition3: " << yes_no(r.condition3) << '\n'
             << "condition4: " << yes_no(r.condition4) << '\n'
             << "connected_opens_in_basis: " << yes_no(r.connected_opens_in_basis) << '\n'
             << "agree: " << yes_no(r.all_agree()) << '\n';
         if (r.condition4) {
           out << "boolean_algebra_size: " << r.boolean_algebra_size << '\n';
         }
         return verdict(r.totally_disconnected());
       })
      ->add_option("topology", a)->required();

  // oracle (debugging aid)
  CLI::App* orc = app.add_subcommand("oracle", "");
  orc->group("");
  orc->require_subcommand(1);
  {
    CLI::App* cmd = leaf(orc, "preimage", "Brute-force preimage", [&] {
      const oracle::BrutePreimage r =
          oracle::brute_preimage(io::load_mapping(a), io::load_shape(b), io::load_shape(domain));
      out << "fragments: " << r.fragments << '\n' << "admissible: " << r.admissible << '\n';
      out << "preimage: " << show(r.result) << '\n';
      return verdict(r.result.defined());
    });
    cmd->add_option("map", a)->required();
    cmd->add_option("y", b)->required();
    cmd->add_option("--domain", domain)->required();
  }
  leaf(orc, "settops", "Count the topologies on n points",
       [&] {
         out << oracle::enumerate_set_topologies(count).size() << '\n';
         return kOk;
       })
      ->add_option("n", count)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!action) {
    err << "no command\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  }
}

}  // namespace shapetop::cli
