#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swapreach/bench.hpp"
#include "swapreach/gen.hpp"
#include "swapreach/io.hpp"
#include "swapreach/normalize.hpp"
#include "swapreach/oracle.hpp"
#include "swapreach/reduction.hpp"
#include "swapreach/stable_sets.hpp"
#include "swapreach/tree_solver.hpp"
#include "swapreach/witness.hpp"

namespace {

using namespace swapreach;

// Exit codes: 0 success / answer yes, 1 answer no, 2 input or usage
// errors, 3 inconclusive (search budget or move cap exhausted).
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitInconclusive = 3;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t cap = 1'000'000;
  std::uint64_t budget = 10'000'000;
};

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << content;
}

std::string join_names(const std::vector<std::string>& names, char sep) {
  std::string s;
  for (const auto& n : names) {
    if (!s.empty()) s += sep;
    s += n;
  }
  return s;
}

std::vector<std::string> agent_names_of(const Instance& inst, const std::vector<AgentId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (AgentId i : ids) out.push_back(inst.agent_name(i));
  return out;
}

std::vector<std::string> item_names_of(const Instance& inst, const std::vector<ItemId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (ItemId j : ids) out.push_back(inst.item_name(j));
  return out;
}

int run_validate(const std::string& file, const std::string& out) {
  const Instance inst = parse_instance_file(file);
  write_out(out, serialize_instance(inst));
  return kExitYes;
}

int run_solve(const std::string& file, const Options& opt) {
  const Instance inst = parse_instance_file(file);
  const Decision d = solve_tree(inst);
  const bool csv = opt.format == "csv";
  if (d.yes) {
    if (csv)
      std::cout << "answer,yes\nleaves," << d.leaves.size() << "\n";
    else
      std::cout << "YES\nleaves " << d.leaves.size() << "\n";
    return kExitYes;
  }
  if (d.disconnected_item) {
    const std::string name = inst.item_name(*d.disconnected_item);
    if (csv)
      std::cout << "answer,no\nreason,disconnected\nitem," << name << "\n";
    else
      std::cout << "NO\ndisconnected " << name << "\n";
    return kExitNo;
  }
  const CrossingCert& c = *d.crossing;
  const auto stable = join_names(item_names_of(inst, c.stable_items), csv ? ';' : ' ');
  const auto comp = join_names(agent_names_of(inst, c.component_agents), csv ? ';' : ' ');
  if (csv)
    std::cout << "answer,no\nreason,crossing\nstable," << stable << "\nitem,"
              << inst.item_name(c.item) << "\ncomponent," << comp << "\n";
  else
    std::cout << "NO\nstable " << stable << "\nitem " << inst.item_name(c.item) << "\ncomponent "
              << comp << "\n";
  return kExitNo;
}

int run_witness(const std::string& file, bool check, const Options& opt) {
  const Instance inst = parse_instance_file(file);
  const bool csv = opt.format == "csv";
  auto print = [&](SwapMove m) {
    if (csv)
      std::cout << "move," << inst.agent_name(m.first) << "," << inst.agent_name(m.second) << "\n";
    else
      std::cout << "swap " << inst.agent_name(m.first) << " " << inst.agent_name(m.second) << "\n";
  };
  if (check) {
    const ReconfigSequence seq = build_witness(inst, opt.cap);
    if (!replay_ok(inst, seq)) fail(Errc::Internal, "witness failed independent replay");
    for (SwapMove m : seq.moves) print(m);
  } else {
    build_witness_stream(inst, opt.cap, print);
  }
  return kExitYes;
}

int run_oracle(const std::string& file, const Options& opt) {
  const Instance inst = parse_instance_file(file);
  const OracleResult r = bfs_reachable(inst, opt.budget);
  const bool csv = opt.format == "csv";
  switch (r.status) {
    case SearchStatus::Reachable:
      if (csv)
        std::cout << "status,reachable\ndistance," << r.distance << "\nexplored," << r.explored
                  << "\n";
      else
        std::cout << "reachable distance " << r.distance << " explored " << r.explored << "\n";
      for (SwapMove m : r.shortest) {
        if (csv)
          std::cout << "move," << inst.agent_name(m.first) << "," << inst.agent_name(m.second)
                    << "\n";
        else
          std::cout << "swap " << inst.agent_name(m.first) << " " << inst.agent_name(m.second)
                    << "\n";
      }
      return kExitYes;
    case SearchStatus::Unreachable:
      if (csv)
        std::cout << "status,unreachable\nexplored," << r.explored << "\n";
      else
        std::cout << "unreachable explored " << r.explored << "\n";
      return kExitNo;
    case SearchStatus::Exhausted: break;
  }
  if (csv)
    std::cout << "status,exhausted\nexplored," << r.explored << "\n";
  else
    std::cout << "exhausted explored " << r.explored << "\n";
  return kExitInconclusive;
}

int run_stable(const std::string& file, const std::string& item, const Options& opt) {
  const Instance raw = parse_instance_file(file);
  // Stability is read off the normalized acceptability; pinning the
  // target to the source keeps normalization from rejecting anything.
  InstanceData d;
  d.n = raw.n;
  d.item_agents = raw.item_agents;
  for (AgentId u = 0; u < raw.n; ++u)
    for (AgentId v : raw.adj[static_cast<std::size_t>(u)])
      if (v > u) d.edges.emplace_back(u, v);
  d.source = raw.source.items();
  d.target = raw.source.items();
  d.agent_names = raw.agent_names;
  d.item_names = raw.item_names;
  NormalizeResult nr = normalize(make_instance(std::move(d)));
  const Instance& inst = *nr.instance;

  const bool csv = opt.format == "csv";
  auto print_set = [&](const StableSet& s) {
    const auto items = join_names(item_names_of(inst, s.items), csv ? ';' : ' ');
    const auto agents = join_names(agent_names_of(inst, s.agents), csv ? ';' : ' ');
    if (csv)
      std::cout << "stable," << items << "\nagents," << agents << "\n";
    else
      std::cout << "stable " << items << "\nagents " << agents << "\n";
  };
  if (!item.empty()) {
    ItemId id = -1;
    for (ItemId j = 0; j < inst.n; ++j)
      if (inst.item_name(j) == item) id = j;
    if (id == -1) fail(Errc::ParseError, "unknown item '" + item + "'");
    print_set(min_stable_containing(inst, id));
    return kExitYes;
  }
  if (auto s = min_proper_stable(inst)) {
    print_set(*s);
  } else {
    std::cout << (csv ? "stable,none\n" : "none\n");
  }
  return kExitYes;
}

int run_reduce(const std::string& file, const std::string& out, bool verify, const Options& opt) {
  const PMRInstance p = parse_pmr_file(file);
  const Instance inst = reduce_pmr(p);
  if (!out.empty()) write_out(out, serialize_instance(inst));
  if (!verify) {
    if (out.empty()) write_out("", serialize_instance(inst));
    return kExitYes;
  }
  const PMRReachability pr = pmr_bfs_reachable(p, opt.budget);
  const OracleResult ir = bfs_reachable(inst, opt.budget);
  auto status_name = [](SearchStatus s) {
    switch (s) {
      case SearchStatus::Reachable: return "reachable";
      case SearchStatus::Unreachable: return "unreachable";
      case SearchStatus::Exhausted: break;
    }
    return "exhausted";
  };
  std::cout << "matchings " << status_name(pr.status) << " distance " << pr.distance << "\n";
  std::cout << "reduced " << status_name(ir.status) << " distance " << ir.distance << "\n";
  if (pr.status == SearchStatus::Exhausted || ir.status == SearchStatus::Exhausted)
    return kExitInconclusive;
  if (pr.status != ir.status || pr.distance != ir.distance)
    fail(Errc::Internal, "matching-space and reduced-instance searches disagree");
  std::cout << "agree\n";
  return pr.status == SearchStatus::Reachable ? kExitYes : kExitNo;
}

int run_gen(int n, const std::string& shape_str, double density, const std::string& out,
            const std::string& pmr_out, const Options& opt) {
  const auto shape = parse_shape(shape_str);
  if (!shape) fail(Errc::ParseError, "unknown shape '" + shape_str + "'");
  bool wrote = false;
  if (!pmr_out.empty()) {
    write_out(pmr_out, serialize_pmr(gen_pmr(n, opt.seed, density)));
    wrote = true;
  }
  if (!out.empty() || !wrote) {
    GenSpec spec{n, opt.seed, density, *shape};
    write_out(out, serialize_instance(gen_instance(spec)));
  }
  return kExitYes;
}

template <class T, class Parse>
std::vector<T> split_list(const std::string& csv, Parse parse) {
  std::vector<T> out;
  std::stringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(parse(tok));
  }
  if (out.empty()) fail(Errc::ParseError, "empty list '" + csv + "'");
  return out;
}

int run_bench_cmd(const std::string& sizes_str, const std::string& shapes_str,
                  const std::string& densities_str, const std::string& ops_str, int reps,
                  const Options& opt) {
  const auto sizes = split_list<int>(sizes_str, [](const std::string& t) { return std::stoi(t); });
  const auto densities =
      split_list<double>(densities_str, [](const std::string& t) { return std::stod(t); });
  const auto shapes = split_list<Shape>(shapes_str, [](const std::string& t) {
    const auto s = parse_shape(t);
    if (!s) fail(Errc::ParseError, "unknown shape '" + t + "'");
    return *s;
  });
  const auto ops = split_list<std::string>(ops_str, [](const std::string& t) { return t; });
  if (reps < 1) fail(Errc::ParseError, "reps must be positive");

  std::vector<BenchCase> suite;
  for (int rep = 0; rep < reps; ++rep)
    for (Shape shape : shapes)
      for (int n : sizes)
        for (double density : densities) {
          BenchCase c;
          c.spec = GenSpec{n, opt.seed + static_cast<std::uint64_t>(rep), density, shape};
          c.ops = ops;
          c.cap = opt.cap;
          c.budget = opt.budget;
          suite.push_back(std::move(c));
        }
  const auto rows = run_bench(suite);
  std::cout << (opt.format == "csv" ? bench_csv(rows) : bench_text(rows));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swap reachability on communication graphs: solver, witness, oracle, tools"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
  app.add_option("--cap", opt.cap, "Witness move cap")->capture_default_str();
  app.add_option("--budget", opt.budget, "Search node budget")->capture_default_str();

  std::string in_file, out_file, item_name, pmr_out;
  bool check = false, verify = false;
  int gen_n = 6, reps = 1;
  double density = 0.5;
  std::string shape = "tree";
  std::string sizes = "10,100,1000", shapes = "tree", densities = "0.5", ops = "solve";

  auto* validate = app.add_subcommand("validate", "Check an instance file, print canonical form");
  validate->add_option("file", in_file)->required();
  validate->add_option("-o,--output", out_file, "Write canonical form here instead of stdout");
  validate->fallthrough();

  auto* solve = app.add_subcommand("solve", "Decide reachability on a tree instance");
  solve->add_option("file", in_file)->required();
  solve->fallthrough();

  auto* witness = app.add_subcommand("witness", "Print a move sequence for a yes-instance");
  witness->add_option("file", in_file)->required();
  witness->add_flag("--check", check, "Independently replay before printing");
  witness->fallthrough();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive shortest-path search");
  oracle->add_option("file", in_file)->required();
  oracle->fallthrough();

  auto* stable = app.add_subcommand("stable", "Smallest proper stable set, or the one holding an item");
  stable->add_option("file", in_file)->required();
  stable->add_option("--item", item_name, "Report the smallest stable set containing this item");
  stable->fallthrough();

  auto* reduce = app.add_subcommand("reduce", "Turn a matching-reconfiguration input into an instance");
  reduce->add_option("file", in_file)->required();
  reduce->add_option("-o,--output", out_file, "Write the reduced instance here");
  reduce->add_flag("--verify", verify, "Run both searches and compare answers");
  reduce->fallthrough();

  auto* gen = app.add_subcommand("gen", "Generate a random instance deterministically");
  gen->add_option("-n,--agents", gen_n, "Agent count")->capture_default_str();
  gen->add_option("--shape", shape, "tree|path|star|complete|pmr-cycle")->capture_default_str();
  gen->add_option("--density", density, "Acceptability density in [0,1]")->capture_default_str();
  gen->add_option("-o,--output", out_file, "Write the instance here instead of stdout");
  gen->add_option("--pmr-out", pmr_out, "Also write a generated matching-reconfiguration input");
  gen->fallthrough();

  auto* bench = app.add_subcommand("bench", "Time solver operations on generated instances");
  bench->add_option("--sizes", sizes, "Comma-separated agent counts")->capture_default_str();
  bench->add_option("--shapes", shapes, "Comma-separated shapes")->capture_default_str();
  bench->add_option("--densities", densities, "Comma-separated densities")->capture_default_str();
  bench->add_option("--ops", ops, "Comma-separated: solve,witness,oracle")->capture_default_str();
  bench->add_option("--reps", reps, "Repetitions with stepped seeds")->capture_default_str();
  bench->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (validate->parsed()) return run_validate(in_file, out_file);
    if (solve->parsed()) return run_solve(in_file, opt);
    if (witness->parsed()) return run_witness(in_file, check, opt);
    if (oracle->parsed()) return run_oracle(in_file, opt);
    if (stable->parsed()) return run_stable(in_file, item_name, opt);
    if (reduce->parsed()) return run_reduce(in_file, out_file, verify, opt);
    if (gen->parsed()) return run_gen(gen_n, shape, density, out_file, pmr_out, opt);
    if (bench->parsed()) return run_bench_cmd(sizes, shapes, densities, ops, reps, opt);
  } catch (const swapreach::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::NotYesInstance: return kExitNo;
      case Errc::CapExceeded: return kExitInconclusive;
      default: return kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
