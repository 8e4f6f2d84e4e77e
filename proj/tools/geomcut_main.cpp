// Command line front end: solve, validate, gen, steiner-dp, stats.
// Exit codes: 0 success, 1 invalid input, 2 infeasible request, 3 internal error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "geomcut/errors.hpp"
#include "geomcut/fence.hpp"
#include "geomcut/generators.hpp"
#include "geomcut/io.hpp"
#include "geomcut/steiner_dp.hpp"
#include "geomcut/visibility.hpp"

namespace {

using namespace geomcut;

// Drops colors no object uses and renumbers the rest, so auto mode never
// trips over a declared-but-empty color. Explicit isolation skips this and
// reports the empty color instead.
Instance compact_colors(Instance inst) {
  std::map<int, int> remap;
  for (const auto& obj : inst.objects) remap.emplace(obj.color, 0);
  int next = 0;
  for (auto& [from, to] : remap) to = next++;
  for (auto& obj : inst.objects) obj.color = remap[obj.color];
  inst.num_colors = std::max(1, next);
  return inst;
}

int cmd_solve(const std::string& input, const std::string& output, const std::string& svg,
              const std::string& method_name, std::uint64_t budget) {
  Method method = Method::Auto;
  if (method_name == "exact2") method = Method::Exact2;
  else if (method_name == "isolation") method = Method::Isolation;
  else if (method_name == "bruteforce") method = Method::BruteForce;

  Instance inst = parse_instance(read_file(input));
  {
    // Reject invalid input before compaction can renumber a bad color into
    // a legal one.
    ValidationReport rep = validate_instance(inst);
    if (!rep.ok()) {
      std::string all;
      for (const auto& e : rep.errors) {
        if (!all.empty()) all += "; ";
        all += e.message;
      }
      throw InputError(all);
    }
  }
  if (method != Method::Isolation) inst = compact_colors(std::move(inst));

  SolveResult result = solve_instance(std::move(inst), method, budget);
  if (!output.empty()) write_file(output, serialize_fence(result.fence));
  if (!svg.empty()) {
    Instance again = parse_instance(read_file(input));
    export_svg(again, &result.fence, svg);
  }
  std::printf("%.9f\n", result.fence.total_length);
  return 0;
}

int cmd_validate(const std::string& input, const std::string& fence_path) {
  Instance inst = parse_instance(read_file(input));
  ValidationReport rep = validate_instance(inst);
  for (const auto& w : rep.warnings) std::printf("warning: %s\n", w.message.c_str());
  if (!rep.ok()) {
    for (const auto& e : rep.errors) std::printf("error: %s\n", e.message.c_str());
    std::printf("instance: invalid\n");
    return 1;
  }
  std::printf("instance: valid\n");
  if (fence_path.empty()) return 0;

  Fence fence = parse_fence(read_file(fence_path));
  SeparationReport sep = validate_fence(inst, fence);
  for (const auto& n : sep.notes) std::printf("note: %s\n", n.c_str());
  if (sep.valid) {
    std::printf("separation: valid\n");
    return 0;
  }
  for (const auto& [a, b] : sep.violations)
    std::printf("violation: objects %d and %d (colors %d and %d) are not separated\n", a,
                b, inst.objects[a].color, inst.objects[b].color);
  std::printf("separation: invalid\n");
  return 1;
}

int cmd_stats(const std::string& input) {
  Instance inst = parse_instance(read_file(input));
  ValidationReport rep = validate_instance(inst);
  if (!rep.ok()) {
    for (const auto& e : rep.errors) std::printf("error: %s\n", e.message.c_str());
    return 1;
  }
  std::size_t with_multiplicity = 0;
  for (const auto& obj : inst.objects) with_multiplicity += obj.vertices.size();
  Pipeline p = build_pipeline(std::move(inst));
  std::printf("objects %zu\n", p.instance.objects.size());
  std::printf("colors %d\n", p.instance.num_colors);
  std::printf("corners %zu\n", with_multiplicity);
  std::printf("distinct_corners %zu\n", corners(p.instance).size());
  std::printf("free_segments %zu\n", p.segments.segments.size());
  std::printf("V %zu\n", p.arr.vertices.size());
  std::printf("E %zu\n", p.arr.edges.size());
  std::printf("F %zu\n", p.arr.faces.size());
  std::printf("C %d\n", p.arr.components);
  std::printf("dual_nodes %d\n", p.dual.num_nodes);
  std::printf("dual_edges %zu\n", p.dual.edges.size());
  return 0;
}

int cmd_steiner(const std::string& input) {
  WeightedTree tree = parse_tree(read_file(input));
  DuplicationResult r = min_duplication(tree);
  std::printf("cost %.9f\n", r.cost);
  std::printf("duplicated %zu:", r.duplicated.size());
  for (int e : r.duplicated) std::printf(" %d", e);
  std::printf("\n");
  return 0;
}

void emit_instance(const Instance& inst, const std::string& output) {
  std::string text = serialize_instance(inst);
  if (output.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_file(output, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-length fences separating colored polygons"};
  app.require_subcommand(1);

  std::string input, output, svg, fence_path;
  std::string method = "auto";
  std::uint64_t budget = 0;

  CLI::App* solve = app.add_subcommand("solve", "compute a separating fence");
  solve->add_option("input", input, "instance file")->required();
  solve->add_option("-o,--output", output, "write the fence file here");
  solve->add_option("--svg", svg, "write an SVG figure here");
  solve->add_option("--method", method, "auto | exact2 | isolation | bruteforce")
      ->check(CLI::IsMember({"auto", "exact2", "isolation", "bruteforce"}));
  solve->add_option("--oracle-budget", budget,
                    "labeling cap for bruteforce (default 2^25, or GEOMCUT_ORACLE_BUDGET)");

  CLI::App* validate = app.add_subcommand("validate", "check an instance and optionally a fence");
  validate->add_option("input", input, "instance file")->required();
  validate->add_option("fence", fence_path, "fence file to test for separation");

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  int grid_k = 1;
  double thickness = 0.01;
  CLI::App* lower = gen->add_subcommand("lower-bound", "triangle grid of thin strips");
  lower->add_option("--k", grid_k, "grid size")->required();
  lower->add_option("--thickness", thickness, "strip thickness, in [1e-6, 0.05]")->required();
  lower->add_option("-o,--output", output, "write the instance here (default stdout)");

  std::uint64_t seed = 1;
  int objects = 2, colors = 2, range = 10;
  CLI::App* random = gen->add_subcommand("random", "seeded random instance");
  random->add_option("--seed", seed, "rng seed");
  random->add_option("--objects", objects, "number of objects");
  random->add_option("--colors", colors, "number of colors");
  random->add_option("--range", range, "corners land in [0, range]^2");
  random->add_option("-o,--output", output, "write the instance here (default stdout)");

  CLI::App* steiner = app.add_subcommand(
      "steiner-dp", "minimum edge duplication on a full binary tree.\n"
                    "Tree grammar, whitespace separated: a subtree is LENGTH for a leaf\n"
                    "edge or LENGTH ( subtree subtree ) for an edge into a fork;\n"
                    "the whole input is the root leaf's single subtree, e.g. \"1 (1 1)\".\n"
                    "Edges are reported by child node id in parse preorder (root = 0).");
  steiner->add_option("input", input, "tree file")->required();

  CLI::App* stats = app.add_subcommand("stats", "pipeline size report for an instance");
  stats->add_option("input", input, "instance file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(input, output, svg, method, budget);
    if (validate->parsed()) return cmd_validate(input, fence_path);
    if (stats->parsed()) return cmd_stats(input);
    if (steiner->parsed()) return cmd_steiner(input);
    if (lower->parsed()) {
      emit_instance(gen_lower_bound(grid_k, thickness), output);
      return 0;
    }
    if (random->parsed()) {
      RandomParams params;
      params.seed = seed;
      params.num_objects = objects;
      params.num_colors = colors;
      params.coordinate_range = range;
      emit_instance(gen_random(params), output);
      return 0;
    }
    std::fprintf(stderr, "no subcommand\n");
    return 1;
  } catch (const TooLarge& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 2;
  } catch (const EmptyColorClass& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 2;
  } catch (const GenerationTimeout& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 2;
  } catch (const InternalError& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
