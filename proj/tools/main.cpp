// Command-line front end: validate / greedy / graph / extract / recolor /
// search subcommands over the colouring and set file formats, JSON reports.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "rado/io.hpp"
#include "rado/report.hpp"

namespace {

constexpr const char* kVersion = "rado 1.0.0 (schema rado-report-v1)";

int thread_count(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("RADO_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void write_report(const std::string& out_path, rado::Json j, double wall_ms) {
  j["wall_ms"] = wall_ms;
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write report to " + out_path);
    out << j.dump(2) << '\n';
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colouring arithmetic toolkit: monochromatic-solution-free colourings,"
               " difference graphs, extraction chains"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string eq_text, coloring_path, set_path, out_path, report_path, method;
  std::uint64_t seed = 0;
  std::uint64_t budget_nodes = 0;
  int colors = 1, threads_flag = 0, mis_cap = 200, depth = 1, girth_m = 2, ell = 3;
  std::int64_t range = 0, max_n = 0, anchor = 0;
  std::string analysis = "girth", format = "json";

  auto* validate_cmd = app.add_subcommand("validate", "check a colouring against an equation");
  validate_cmd->add_option("--eq", eq_text, "equation text")->required();
  validate_cmd->add_option("--coloring", coloring_path, "colouring file")->required();
  validate_cmd->add_option("--out", out_path, "report file (default stdout)");

  auto* greedy_cmd = app.add_subcommand("greedy", "interval colouring for a balanced equation");
  greedy_cmd->add_option("--eq", eq_text, "equation text")->required();
  greedy_cmd->add_option("--colors", colors, "number of colours")->required();
  greedy_cmd->add_option("--out", coloring_path, "colouring output file")->required();
  greedy_cmd->add_option("--report", report_path, "report file (default stdout)");

  auto* graph_cmd = app.add_subcommand("graph", "difference-graph analyses");
  graph_cmd->add_option("--set", set_path, "connection-set file")->required();
  graph_cmd->add_option("--range", range, "vertices are [1..range]")->required();
  graph_cmd->add_option("--analysis", analysis,
                        "girth | shearer1 | shearer2 | mis | candidates");
  graph_cmd->add_option("--m", girth_m, "depth parameter for shearer2");
  graph_cmd->add_option("--anchor", anchor, "anchor vertex for candidates");
  graph_cmd->add_option("--depth", depth, "candidate depth 1..3");
  graph_cmd->add_option("--mis-cap", mis_cap, "exact-solver vertex cap");
  graph_cmd->add_option("--format", format, "json (canonical) | csv (bound table)");
  graph_cmd->add_option("--out", out_path, "report file (default stdout)");

  auto* extract_cmd = app.add_subcommand("extract", "run an extraction procedure");
  extract_cmd->add_option("--method", method, "schur | thm3 (chain) | thm4 (pipeline)")
      ->required();
  extract_cmd->add_option("--coloring", coloring_path, "colouring file")->required();
  extract_cmd->add_option("--seed", seed, "seed for randomized phases");
  extract_cmd->add_option("--mis-cap", mis_cap, "exact-solver vertex cap");
  extract_cmd->add_option("--threads", threads_flag, "worker threads (default RADO_THREADS or 1)");
  extract_cmd->add_option("--out", out_path, "report file (default stdout)");

  auto* recolor_cmd = app.add_subcommand("recolor", "auxiliary-colour witness procedures");
  recolor_cmd->add_option("--method", method, "sum3 | imbalanced | coeff2")->required();
  recolor_cmd->add_option("--l", ell, "summand count for imbalanced");
  recolor_cmd->add_option("--coloring", coloring_path, "colouring file")->required();
  recolor_cmd->add_option("--out", out_path, "report file (default stdout)");

  auto* search_cmd = app.add_subcommand("search", "exact extremal N by backtracking");
  search_cmd->add_option("--eq", eq_text, "equation text")->required();
  search_cmd->add_option("--colors", colors, "number of colours")->required();
  search_cmd->add_option("--max-n", max_n, "search cap")->required();
  search_cmd->add_option("--budget-nodes", budget_nodes, "node budget (0 = unbounded)");
  search_cmd->add_option("--out", out_path, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Timer timer;
    if (*validate_cmd) {
      auto eq = rado::LinearEquation::parse(eq_text);
      auto coloring = rado::load_coloring(coloring_path);
      auto result = rado::validate(coloring, eq);
      rado::Json j = rado::report_header("validate");
      j["equation"] = eq.text();
      j["N"] = coloring.ground_size();
      j["colors"] = coloring.num_colors();
      j.update(rado::to_json(result));
      write_report(out_path, j, timer.ms());
      std::cerr << (result.ok ? "ok" : "monochromatic solution in colour " +
                                           std::to_string(result.color))
                << '\n';
    } else if (*greedy_cmd) {
      auto eq = rado::LinearEquation::parse(eq_text);
      auto coloring = rado::greedy_coloring(eq, colors);
      rado::save_coloring(coloring_path, coloring);
      rado::Json j = rado::report_header("greedy");
      j["equation"] = eq.text();
      j["colors"] = colors;
      j["N"] = coloring.ground_size();
      j["out"] = coloring_path;
      j["validated"] = true;  // construction re-checks itself
      write_report(report_path.empty() ? out_path : report_path, j, timer.ms());
    } else if (*graph_cmd) {
      auto conn = rado::load_set(set_path);
      if (range < 1) throw std::runtime_error("--range must be positive");
      std::vector<std::int64_t> verts(static_cast<std::size_t>(range));
      for (std::size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<std::int64_t>(i) + 1;
      auto g = rado::DifferenceGraph::build(verts, conn);
      rado::Json j = rado::report_header("graph");
      j["range"] = range;
      j["connection"] = g.connection();
      j["edges"] = g.edge_count();
      j["analysis"] = analysis;
      if (analysis == "girth") {
        auto cyc = rado::find_short_odd_cycle(g);
        j["cycle"] = cyc ? rado::Json(*cyc) : rado::Json(nullptr);
        if (cyc) {
          auto w = rado::cycle_to_solution(*cyc, g.connection());
          j["witness_12_9"] = rado::to_json(w);
        }
      } else if (analysis == "shearer1") {
        j["bound"] = rado::shearer_triangle_free_bound(g);
      } else if (analysis == "shearer2") {
        j["m"] = girth_m;
        j["bound"] = rado::shearer_girth_bound(g, girth_m);
      } else if (analysis == "mis") {
        auto mis = rado::max_independent_set_exact(g, static_cast<std::size_t>(mis_cap));
        j["size"] = mis.size();
        j["vertices"] = mis;
      } else if (analysis == "candidates") {
        if (anchor == 0) throw std::runtime_error("--anchor required for candidates");
        j["anchor"] = anchor;
        j["depth"] = depth;
        j.update(rado::to_json(rado::candidate_independent_sets(g, anchor, depth)));
      } else {
        throw std::runtime_error("unknown analysis \"" + analysis + "\"");
      }
      if (format == "csv") {
        // flat bound table; nested certificates stay JSON-only
        std::string csv = "metric,value\n";
        for (auto& [key, value] : j.items()) {
          if (!value.is_primitive() || value.is_null()) continue;
          csv += key + "," + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        }
        if (out_path.empty()) {
          std::cout << csv;
        } else {
          std::ofstream out(out_path);
          if (!out) throw std::runtime_error("cannot write report to " + out_path);
          out << csv;
        }
      } else if (format == "json") {
        write_report(out_path, j, timer.ms());
      } else {
        throw std::runtime_error("unknown format \"" + format + "\"");
      }
    } else if (*extract_cmd) {
      auto coloring = rado::load_coloring(coloring_path);
      rado::Json j = rado::report_header("extract");
      j["method"] = method;
      j["N"] = coloring.ground_size();
      j["colors"] = coloring.num_colors();
      if (method == "schur") {
        j.update(rado::to_json(rado::schur_extract(coloring)));
      } else if (method == "thm3" || method == "chain") {
        j.update(rado::to_json(
            rado::shearer_chain_extract(coloring, static_cast<std::size_t>(mis_cap))));
      } else if (method == "thm4" || method == "pipeline") {
        j["seed"] = seed;
        j.update(rado::to_json(rado::long_equation_pipeline(
            coloring, seed, static_cast<std::size_t>(mis_cap), thread_count(threads_flag))));
      } else {
        throw std::runtime_error("unknown extract method \"" + method + "\"");
      }
      write_report(out_path, j, timer.ms());
    } else if (*recolor_cmd) {
      auto coloring = rado::load_coloring(coloring_path);
      rado::Json j = rado::report_header("recolor");
      j["method"] = method;
      j["N"] = coloring.ground_size();
      j["colors"] = coloring.num_colors();
      if (method == "sum3") {
        j.update(rado::to_json(rado::find_witness_sum3(coloring)));
      } else if (method == "imbalanced") {
        j["l"] = ell;
        j.update(rado::to_json(rado::find_witness_imbalanced(coloring, ell)));
      } else if (method == "coeff2") {
        j.update(rado::to_json(rado::find_witness_coefficient2(coloring)));
      } else {
        throw std::runtime_error("unknown recolor method \"" + method + "\"");
      }
      write_report(out_path, j, timer.ms());
    } else if (*search_cmd) {
      auto eq = rado::LinearEquation::parse(eq_text);
      auto result = rado::exact_extremal_n(eq, colors, max_n, budget_nodes);
      rado::Json j = rado::report_header("search");
      j.update(rado::to_json(result));
      write_report(out_path, j, timer.ms());
      if (!result.complete) {
        std::cerr << "search stopped at the cap or budget; verdict \">= "
                  << result.largest_valid_n << "\"\n";
        return 2;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
