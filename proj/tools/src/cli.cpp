// Copyright 2026 The edgeguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeguard/cli/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgeguard/analysis.hpp"
#include "edgeguard/chromatic.hpp"
#include "edgeguard/cli/layout.hpp"
#include "edgeguard/cli/svg.hpp"
#include "edgeguard/corpus.hpp"
#include "edgeguard/errors.hpp"
#include "edgeguard/io.hpp"
#include "edgeguard/oracle.hpp"
#include "edgeguard/reductions.hpp"

namespace edgeguard::cli {
namespace {

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kTimeout:
    case ErrorCode::kLayoutFailed:
    case ErrorCode::kGenerationFailed:
      return kBudgetExhausted;
    case ErrorCode::kVerificationFailed:
    case ErrorCode::kStepNotFound:
    case ErrorCode::kInvariantViolated:
    case ErrorCode::kNoConfiguration:
    case ErrorCode::kUntriangulatableFace:
    case ErrorCode::kColoringMismatch:
    case ErrorCode::kSeedConflict:
    case ErrorCode::kInfeasible:
      return kVerificationFailed;
    default:
      return kUsageError;
  }
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    write_text_file(path, text);
  }
}

const std::vector<std::string> kAlgorithms = {"n3-degenerate", "2n5", "3n8",
                                              "chromatic", "3hop", "best"};

GuardSet run_algorithm(const PlaneGraph& g, const std::string& name) {
  if (name == "n3-degenerate") return guard_two_degenerate(g);
  if (name == "2n5") return guard_two_fifths(g);
  if (name == "3n8") return guard_three_eighths(g);
  if (name == "chromatic") return chromatic_guard(g);
  return three_hop_guard(g);
}

GuardSet best_of(const PlaneGraph& g, std::ostream& err) {
  std::vector<std::string> names;
  if (is_two_degenerate(g)) names.push_back("n3-degenerate");
  names.insert(names.end(), {"2n5", "3n8", "chromatic"});
  if (min_quad_hop_distance(g) >= 3) names.push_back("3hop");
  std::optional<GuardSet> best;
  for (const std::string& name : names) {
    try {
      GuardSet gs = run_algorithm(g, name);
      err << "  " << name << ": " << gs.size() << '\n';
      if (!best || gs.size() < best->size()) best = std::move(gs);
    } catch (const Error& e) {
      if (exit_code(e.code()) != kBudgetExhausted) throw;
      err << "  " << name << ": skipped (" << e.what() << ")\n";
    }
  }
  if (!best) throw Error(ErrorCode::kBudgetExceeded, "every algorithm ran out of budget");
  return *best;
}

std::string hop_text(int d) { return d == kUnreachable ? "inf" : std::to_string(d); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge guards for plane graphs"};
  app.set_version_flag("--version", "edgeguard 0.1.0");
  app.require_subcommand(1);
  std::function<int()> action;

  std::string input, output, guards_path, algorithm = "best";

  auto* guard = app.add_subcommand("guard", "Compute a guard set");
  guard->add_option("input", input, "Graph document")->required();
  guard->add_option("-a,--algorithm", algorithm)
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  guard->add_option("-o,--output", output, "Write the guard document here");
  guard->callback([&] {
    action = [&] {
      const PlaneGraph g = load_graph(input);
      const GuardSet gs = algorithm == "best" ? best_of(g, err) : run_algorithm(g, algorithm);
      if (!verify_guard_set(g, gs).guarded) {
        err << "result does not guard every face\n";
        return int{kVerificationFailed};
      }
      emit(out, output, write_guard_document(to_document(g, gs)));
      err << gs.algorithm << ": " << gs.size() << " edges, bound "
          << gs.bound.to_string() << '\n';
      return int{kOk};
    };
  });

  auto* verify = app.add_subcommand("verify", "Check a guard document against a graph");
  verify->add_option("input", input, "Graph document")->required();
  verify->add_option("guards", guards_path, "Guard document")->required();
  verify->callback([&] {
    action = [&] {
      const PlaneGraph g = load_graph(input);
      const auto edges =
          resolve_edges(g, parse_guard_document(read_text_file(guards_path)));
      const GuardReport rep = verify_guard_set(g, edges);
      if (rep.guarded) {
        out << "all " << g.face_count() << " faces guarded\n";
        return int{kOk};
      }
      out << rep.unguarded.size() << " of " << g.face_count() << " faces unguarded\n";
      for (FaceId f : rep.unguarded) {
        out << "  face " << f << ":";
        for (VertexId v : g.face_vertices(f)) out << ' ' << v;
        out << '\n';
      }
      return int{kVerificationFailed};
    };
  });

  int limit = OracleOptions{}.edge_budget;
  std::optional<int> at_most;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum guard set");
  oracle->add_option("input", input, "Graph document")->required();
  oracle->add_option("--limit", limit, "Refuse graphs with more edges")
      ->capture_default_str();
  oracle->add_option("--at-most", at_most, "Only decide whether K edges suffice");
  oracle->add_option("-o,--output", output, "Write the guard document here");
  oracle->callback([&] {
    action = [&] {
      const PlaneGraph g = load_graph(input);
      OracleOptions opts;
      opts.edge_budget = limit;
      if (at_most) {
        const bool ok = is_guardable_with(g, *at_most, opts);
        out << "guardable with " << *at_most << ": " << (ok ? "yes" : "no") << '\n';
        return int{kOk};
      }
      const GuardSet gs = minimum_guard_set(g, std::nullopt, opts);
      emit(out, output, write_guard_document(to_document(g, gs)));
      err << "minimum: " << gs.size() << '\n';
      return int{kOk};
    };
  });

  auto* stat = app.add_subcommand("stats", "Counts, 4-faces and their hop distances");
  stat->add_option("input", input, "Graph document")->required();
  stat->callback([&] {
    action = [&] {
      const PlaneGraph g = load_graph(input);
      const GraphStats s = stats(g);
      out << "n=" << s.n << "\nm=" << s.m << "\nf=" << s.f << "\nc=" << s.c
          << "\nalpha=" << s.alpha << "\nmin_degree=" << s.min_degree
          << "\nmax_degree=" << s.max_degree << "\nquad_hops=";
      const auto quads = quad_faces(g);
      bool first = true;
      for (std::size_t i = 0; i < quads.size(); ++i) {
        for (std::size_t j = i + 1; j < quads.size(); ++j) {
          out << (first ? "" : ",") << quads[i] << '-' << quads[j] << ':'
              << hop_text(face_hop_distance(g, quads[i], quads[j]));
          first = false;
        }
      }
      out << '\n';
      return int{kOk};
    };
  });

  GeneratorSpec spec;
  std::string family;
  bool low_degree = false;
  auto* gen = app.add_subcommand("gen", "Generate a corpus graph");
  std::vector<std::string> families;
  for (Family f : {Family::kDisjointTriangles, Family::kFanOuterplanar,
                   Family::kRandomTriangulation, Family::kRandomPlane,
                   Family::kPlatonic, Family::kFarQuads, Family::kFigureNgc}) {
    families.emplace_back(family_name(f));
  }
  gen->add_option("-f,--family", family)->required()->check(CLI::IsMember(families));
  gen->add_option("-n,--size", spec.size)->capture_default_str();
  gen->add_option("-s,--seed", spec.seed)->capture_default_str();
  gen->add_option("--deletion-probability", spec.deletion_probability)
      ->capture_default_str();
  gen->add_flag("--allow-low-degree", low_degree,
                "random_plane: let deletions drop degrees below three");
  gen->add_option("--separation", spec.quad_separation)->capture_default_str();
  gen->add_option("--grow-probability", spec.grow_probability)->capture_default_str();
  gen->add_option("--attempts", spec.attempts)->capture_default_str();
  gen->add_option("--solid", spec.solid)->capture_default_str();
  gen->add_option("-o,--output", output, "Write the graph document here");
  gen->callback([&] {
    action = [&] {
      spec.family = *parse_family(family);
      spec.keep_min_degree3 = !low_degree;
      const PlaneGraph g = generate(spec);
      emit(out, output, write_graph_document(g.serialize()));
      return int{kOk};
    };
  });

  int budget = GuardColoringOptions{}.vertex_budget;
  auto* check = app.add_subcommand("check-guard-coloring", "Search for a guard coloring");
  check->add_option("input", input, "Graph document")->required();
  check->add_option("--budget", budget, "Largest vertex count searched")
      ->capture_default_str();
  check->callback([&] {
    action = [&] {
      const PlaneGraph g = load_graph(input);
      GuardColoringOptions opts;
      opts.vertex_budget = budget;
      const auto tc = find_guard_coloring(g, opts);
      if (!tc) {
        out << "none\n";
        return int{kOk};
      }
      out << "found\n";
      for (std::size_t v = 0; v < tc->sides.size(); ++v) {
        out << (v ? " " : "") << tc->sides[v];
      }
      out << '\n';
      return int{kOk};
    };
  });

  auto* render = app.add_subcommand("render", "Draw a graph as SVG");
  render->add_option("input", input, "Graph document")->required();
  render->add_option("-g,--guards", guards_path, "Guard document to highlight");
  render->add_option("-o,--output", output, "SVG file")->required();
  render->callback([&] {
    action = [&] {
      const PlaneGraph g = load_graph(input);
      std::vector<EdgeId> edges;
      if (!guards_path.empty()) {
        edges = resolve_edges(g, parse_guard_document(read_text_file(guards_path)));
      }
      const Layout layout = compute_layout(g);
      write_text_file(output, render_svg(g, layout, edges));
      err << "wrote " << output << " (" << layout.method << " layout)\n";
      return int{kOk};
    };
  });

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsageError};
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace edgeguard::cli
