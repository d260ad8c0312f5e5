#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "compat/bounds.hpp"
#include "compat/constructive.hpp"
#include "compat/error.hpp"
#include "compat/generators.hpp"
#include "compat/solver.hpp"

namespace compat::cli {

namespace {

using json = nlohmann::json;

struct Flags {
  std::string instance;
  std::string matching;
  std::string algorithm = "exact";
  std::size_t n = 0;
  std::size_t l = 2;
  std::string kind;
  std::uint64_t seed = 0;
  std::string mode = "reduced";
  unsigned jobs = 1;
  std::string out;
  std::string shape;
  std::size_t k = 0;
  std::size_t max_rounds = 1000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Syntax, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json edges_json(const Matching& m) {
  json arr = json::array();
  for (const Edge& e : m.edges()) arr.push_back({e.a, e.b});
  return arr;
}

std::string solve_cmd(const Flags& f) {
  const Instance inst = parse_instance(read_file(f.instance));
  json out;
  out["algorithm"] = f.algorithm;
  auto put = [&](const Matching& m, bool optimal, std::uint64_t nodes) {
    out["size"] = m.size();
    out["matching"] = edges_json(m);
    out["optimal"] = optimal;
    out["nodes_explored"] = nodes;
  };
  if (f.algorithm == "exact") {
    const auto r = max_compatible_matching(inst);
    put(r.matching, r.optimal, r.nodes_explored);
  } else if (f.algorithm == "oracle") {
    const auto r = brute_force_max_matching(inst);
    put(r.matching, r.optimal, r.nodes_explored);
  } else if (f.algorithm == "greedy") {
    const auto r = greedy_maximal_matching(inst);
    put(r.matching, false, r.nodes_explored);
  } else if (f.algorithm == "blocks") {
    const std::size_t k = f.k ? f.k : lb_formulas(inst.n(), 2).non_nested;
    out["k"] = k;
    put(block_non_nested_matching(inst, k), false, 0);
  } else if (f.algorithm == "rball") {
    put(rball_matching(inst), false, 0);
  } else if (f.algorithm == "shape") {
    if (f.shape.empty()) {
      throw Error(ErrorKind::Precondition, "--algorithm shape needs --shape");
    }
    const Shape shape = Shape::parse(f.shape);
    out["shape"] = shape.to_string();
    put(same_shape_matching(inst, shape), false, 0);
  } else {
    throw Error(ErrorKind::Precondition, "unknown algorithm '" + f.algorithm + "'");
  }
  return out.dump() + "\n";
}

std::string generate_cmd(const Flags& f, std::ostream& err) {
  err << "seed=" << f.seed << "\n";
  if (f.kind == "five-block") return write_instance(five_block_permutation(f.n));
  if (f.kind == "bit-partition") return write_instance(bit_partition_family(f.n));
  if (f.kind == "random-convex") {
    return write_instance(random_convex_instance(f.n, f.l, f.seed));
  }
  if (f.kind == "random-planar") {
    return write_instance(random_planar_instance(f.n, f.l, f.seed));
  }
  throw Error(ErrorKind::Precondition, "unknown kind '" + f.kind + "'");
}

std::string ccm_cmd(const Flags& f) {
  const CcmMode mode = f.mode == "full" ? CcmMode::Full : CcmMode::Reduced;
  const auto start = std::chrono::steady_clock::now();
  const CcmRecord rec = ccm_search(f.n, mode, f.jobs);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::string witness;
  for (Label x : rec.witness) {
    if (!witness.empty()) witness += ' ';
    witness += std::to_string(x);
  }
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", elapsed.count());
  std::ostringstream csv;
  csv << "n,ccm,witness_permutation,labelings_examined,mode,seconds\n"
      << rec.n << ',' << rec.ccm << ',' << witness << ',' << rec.labelings_examined
      << ',' << f.mode << ',' << seconds << '\n';
  return csv.str();
}

std::string force_cmd(const Flags& f, std::ostream& err) {
  err << "seed=" << f.seed << "\n";
  const LabeledSet points = f.instance.empty()
                                ? LabeledSet(convex_polygon_points(f.n))
                                : parse_instance(read_file(f.instance)).set(0);
  const ForceSearchResult res = force_search_random(points, f.max_rounds, f.seed);
  json out;
  out["n"] = points.size();
  out["seed"] = f.seed;
  out["ell"] = res.ell;
  out["certified"] = true;
  if (points.size() >= 5) {
    const auto fb = force_bounds(points.size());
    out["bounds"] = {{"lower", fb.lower}, {"upper", fb.upper}};
  }
  out["family"] = json::parse(write_instance(Instance(points.size(), res.labelings)));
  return out.dump() + "\n";
}

std::string bounds_cmd(const Flags& f) {
  json out;
  out["n"] = f.n;
  out["l"] = f.l;
  const LowerBounds lb = lb_formulas(f.n, f.l);
  out["lower_bounds"] = {{"same_shape", lb.same_shape},
                         {"maximal", lb.maximal},
                         {"non_nested", lb.non_nested},
                         {"rball", lb.rball},
                         {"multi_set", lb.multi_set}};
  if (f.l >= 2) {
    const ProbThreshold t = prob_threshold(f.n, f.l);
    json ratio = nullptr;
    if (std::isfinite(t.log10_ratio)) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", t.log10_ratio);
      ratio = buf;
    }
    out["probabilistic"] = {{"k_convex", t.k_convex},
                            {"k_general", t.k_general},
                            {"vacuous", t.vacuous},
                            {"inequality_holds", t.inequality_holds},
                            {"log10_ratio", ratio}};
  }
  if (f.n >= 5) {
    const auto fb = force_bounds(f.n);
    const auto fc = force_bounds(f.n, {1, 1});
    out["force"] = {{"lower", fb.lower},
                    {"upper", fb.upper},
                    {"upper_convex", fc.upper}};
  }
  return out.dump() + "\n";
}

std::string verify_cmd(const Flags& f) {
  const Instance inst = parse_instance(read_file(f.instance));
  json out;
  if (!f.matching.empty()) {
    const Matching m = parse_matching(read_file(f.matching));
    const auto crossing = find_crossing(inst, m);
    out["compatible"] = !crossing.has_value();
    if (crossing) {
      out["crossing"] = {{"e", {crossing->e.a, crossing->e.b}},
                         {"f", {crossing->f.a, crossing->f.b}},
                         {"set", crossing->set_index + 1}};
    }
  } else {
    const ForceCheck check = verify_force_family(inst.sets());
    out["forces_single_edge"] = check.forces;
    if (check.compatible_pair) {
      const auto& [e, g] = *check.compatible_pair;
      out["compatible_pair"] = {{e.a, e.b}, {g.a, g.b}};
    }
  }
  return out.dump() + "\n";
}

std::string draw_cmd(const Flags& f) {
  const Instance inst = parse_instance(read_file(f.instance));
  std::optional<Matching> m;
  if (!f.matching.empty()) m = parse_matching(read_file(f.matching));
  return draw_svg(inst, m);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compatible matchings on labeled point sets", "compat"};
  app.require_subcommand(1);
  Flags f;

  auto* solve = app.add_subcommand("solve", "Compute a compatible matching");
  solve->add_option("--instance", f.instance, "Instance JSON")->required();
  solve->add_option("--algorithm", f.algorithm)
      ->check(CLI::IsMember({"exact", "greedy", "blocks", "rball", "shape", "oracle"}));
  solve->add_option("--shape", f.shape, "Chord list on positions 1..2k, e.g. 1-4,2-3");
  solve->add_option("--k", f.k, "Matching size for --algorithm blocks");

  auto* generate = app.add_subcommand("generate", "Emit an instance");
  generate->add_option("--kind", f.kind)
      ->required()
      ->check(CLI::IsMember({"five-block", "bit-partition", "random-convex", "random-planar"}));
  generate->add_option("--n", f.n)->required();
  generate->add_option("--seed", f.seed);
  generate->add_option("--l", f.l, "Number of sets for random kinds");

  auto* ccm = app.add_subcommand("ccm", "Exhaustive ccm(n) search");
  ccm->add_option("--n", f.n)->required();
  ccm->add_option("--mode", f.mode)->check(CLI::IsMember({"full", "reduced"}));
  ccm->add_option("--jobs", f.jobs)->check(CLI::PositiveNumber);

  auto* force = app.add_subcommand("force", "Randomized single-edge forcing family");
  force->add_option("--n", f.n, "Size of the convex point set");
  force->add_option("--instance", f.instance, "Use the first set's geometry");
  force->add_option("--seed", f.seed);
  force->add_option("--max-rounds", f.max_rounds);

  auto* bounds = app.add_subcommand("bounds", "Evaluate bound formulas");
  bounds->add_option("--n", f.n)->required();
  bounds->add_option("--l", f.l);

  auto* verify = app.add_subcommand("verify", "Check a matching or a forcing family");
  verify->add_option("--instance", f.instance)->required();
  verify->add_option("--matching", f.matching);

  auto* draw = app.add_subcommand("draw", "Render an instance as SVG");
  draw->add_option("--instance", f.instance)->required();
  draw->add_option("--matching", f.matching);

  for (auto* sub : {solve, generate, ccm, force, bounds, verify, draw}) {
    sub->add_option("--out", f.out, "Write primary output here");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  if (force->parsed() && f.instance.empty() && f.n == 0) {
    err << "force: one of --n or --instance is required\n";
    return 2;
  }

  try {
    std::string result;
    if (solve->parsed()) result = solve_cmd(f);
    else if (generate->parsed()) result = generate_cmd(f, err);
    else if (ccm->parsed()) result = ccm_cmd(f);
    else if (force->parsed()) result = force_cmd(f, err);
    else if (bounds->parsed()) result = bounds_cmd(f);
    else if (verify->parsed()) result = verify_cmd(f);
    else result = draw_cmd(f);

    if (f.out.empty()) {
      out << result;
    } else {
      std::ofstream file(f.out, std::ios::binary);
      if (!file) throw Error(ErrorKind::Syntax, "cannot write '" + f.out + "'");
      file << result;
    }
    return 0;
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump()
        << "\n";
    return 1;
  }
}

}  // namespace compat::cli
