// Command-line front end: build Gaussian cluster states from graph files or
// named families, evaluate EE/LN across cuts, run width computations and
// parameter sweeps, and emit figure datasets as CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "entwidth/entwidth.hpp"

using namespace entwidth;
using nlohmann::json;

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> logspace(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(lo * std::pow(hi / lo, count == 1 ? 0.0 : i / double(count - 1)));
  return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t dots = item.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("bad range: " + item);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(std::stoi(item));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + spec);
  return out;
}

std::vector<double> parse_double_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty list: " + spec);
  return out;
}

struct GraphSource {
  std::string family;  // path | star | complete | grid | file
  int size = 0;        // n for wires, l for grids
  std::string graph_path;

  // Number of modes for a given build.
  int n_modes() const {
    if (family == "grid") return size * size;
    if (family == "file") return read_graph_file(graph_path).n_vertices();
    return size;
  }

  WeightedGraph build(double strength) const {
    if (family == "path") return path_graph(size, strength);
    if (family == "star") return star_graph(size, strength);
    if (family == "complete") return complete_graph(size, strength);
    if (family == "grid") return grid_graph(size, strength);
    if (family == "file") {
      WeightedGraph g = read_graph_file(graph_path);
      if (strength == 1.0) return g;
      WeightedGraph scaled(g.n_vertices());
      for (const WeightedEdge& e : g.edges())
        scaled.add_edge(e.a, e.b, e.strength * strength);
      return scaled;
    }
    throw std::invalid_argument("unknown family: " + family);
  }
};

// Lossless states use the canonical construction with the strengths absorbed
// into the bonds; lossy states require the physical construction (unit CZ on
// squeezed vacua) because squeezing does not commute with the loss channel.
GaussianState build_state(const GraphSource& src, double b, double eta) {
  if (eta < 1.0) {
    WeightedGraph unit = src.build(1.0);
    if (!unit.unit_strengths())
      throw std::invalid_argument(
          "loss requires a unit-strength graph (per-mode squeezing sets b)");
    return apply_loss(physical_cluster(unit, SqueezingParams::from_b(b)), eta);
  }
  return canonical_cluster(src.build(b));
}

Bipartition parse_cut(const std::string& spec, const GraphSource& src, int n_modes) {
  if (spec == "odd-even") {
    std::vector<int> side;
    for (int i = 1; i < n_modes; i += 2) side.push_back(i);
    return Bipartition(side, n_modes);
  }
  if (spec == "diagonal") {
    if (src.family != "grid")
      throw std::invalid_argument("cut \"diagonal\" needs --family grid");
    std::vector<int> side;
    for (int r = 0; r < src.size; ++r)
      for (int c = 0; c < src.size; ++c)
        if (r + c < src.size - 1) side.push_back(r * src.size + c);
    return Bipartition(side, n_modes);
  }
  if (spec.rfind("row:", 0) == 0) {
    if (src.family != "grid")
      throw std::invalid_argument("cut \"row:k\" needs --family grid");
    const int k = std::stoi(spec.substr(4));
    if (k < 0 || k >= src.size - 1)
      throw std::invalid_argument("row index must lie in [0, l-2]");
    std::vector<int> side;
    for (int r = 0; r <= k; ++r)
      for (int c = 0; c < src.size; ++c) side.push_back(r * src.size + c);
    return Bipartition(side, n_modes);
  }
  return Bipartition(parse_int_list(spec), n_modes);
}

struct MeasureOpts {
  GraphSource src;
  double b = 1.0;
  double eta = 1.0;
  std::string measure = "ee";
  std::string cut_spec;
  bool qubit = false;
  bool as_json = false;
};

int run_measure(const MeasureOpts& opt) {
  WeightedGraph graph = opt.src.build(opt.qubit || opt.eta < 1.0 ? 1.0 : opt.b);
  const int n = graph.n_vertices();
  Bipartition cut = parse_cut(opt.cut_spec, opt.src, n);

  double value = 0.0;
  std::string units;
  double purity_dev = 0.0;
  if (opt.qubit) {
    if (opt.measure == "ln")
      throw std::invalid_argument("--qubit supports the cut-rank (ee) measure only");
    if (opt.eta < 1.0) throw std::invalid_argument("--qubit has no loss model");
    value = qubit_cut_rank(QubitGraph::from_graph(graph), cut);
    units = "bits";
  } else {
    GaussianState state = build_state(opt.src, opt.b, opt.eta);
    SymplecticSpectrum spec = symplectic_eigenvalues(state.gamma);
    for (double v : spec) purity_dev = std::max(purity_dev, std::abs(v - 1.0));
    value = opt.measure == "ln" ? log_negativity(state, cut)
                                : entropic_entanglement(state, cut);
    units = "nats";
  }

  if (opt.as_json) {
    json out{{"value", value},
             {"units", units},
             {"measure", opt.qubit ? "rank" : opt.measure},
             {"modes", n},
             {"edges", graph.n_edges()},
             {"cut", cut.to_string()},
             {"b", opt.b},
             {"eta", opt.eta}};
    if (!opt.qubit) {
      out["purity_deviation"] = purity_dev;
      out["pure"] = purity_dev <= 1e-6;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "value: " << fmt12(value) << "\n"
              << "units: " << units << "\n"
              << "measure: " << (opt.qubit ? "rank" : opt.measure) << "\n"
              << "modes: " << n << "\n"
              << "edges: " << graph.n_edges() << "\n"
              << "cut: " << cut.to_string() << "\n";
    if (!opt.qubit)
      std::cout << "purity: " << (purity_dev <= 1e-6 ? "pure" : "mixed")
                << " (max deviation " << fmt12(purity_dev) << ")\n";
  }
  return 0;
}

struct WidthOpts {
  GraphSource src;
  double b = 1.0;
  double eta = 1.0;
  std::string measure = "ee";
  std::string mode = "exact";
  bool qubit = false;
  bool as_json = false;
  int threads = 1;
  int cap = 20;
};

CutFunction make_cut(const WidthOpts& opt, const WeightedGraph& graph) {
  if (opt.qubit) {
    if (opt.eta < 1.0) throw std::invalid_argument("--qubit has no loss model");
    return rank_cut(QubitGraph::from_graph(graph));
  }
  GaussianState state = build_state(opt.src, opt.b, opt.eta);
  if (opt.measure == "ln") return ln_cut(state);
  return ee_cut(state);
}

int run_width(const WidthOpts& opt) {
  WeightedGraph graph = opt.src.build(opt.qubit || opt.eta < 1.0 ? 1.0 : opt.b);
  const int n = graph.n_vertices();
  CutFunction cut = make_cut(opt, graph);
  const std::string units = opt.qubit ? "bits" : "nats";

  const auto start = std::chrono::steady_clock::now();
  double value = 0.0;
  Bipartition maximizing({0}, 2);
  std::uint64_t evaluations = 0;

  if (opt.mode == "exact" || opt.mode == "brute") {
    WidthResult result = opt.mode == "exact"
                             ? exact_width(n, cut, opt.threads, opt.cap)
                             : brute_force_width(n, cut);
    value = result.width;
    evaluations = result.cut_evaluations;
    CutCache cache(cut);
    maximizing = width_with_witness(result.witness, cache, opt.threads).maximizing;
  } else if (opt.mode == "diagonal" || opt.mode == "rectangular") {
    if (opt.src.family != "grid")
      throw std::invalid_argument("decomposition widths need --family grid");
    Decomposition d = opt.mode == "diagonal" ? diagonal_decomposition(opt.src.size)
                                             : rectangular_decomposition(opt.src.size);
    CutCache cache(cut);
    DecompositionWidth dw = width_with_witness(d, cache, opt.threads);
    value = dw.value;
    maximizing = dw.maximizing;
    evaluations = cache.evaluations();
  } else {
    throw std::invalid_argument("unknown width mode: " + opt.mode);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (opt.as_json) {
    json out{{"width", value},        {"units", units},
             {"mode", opt.mode},      {"modes", n},
             {"maximizing_cut", maximizing.to_string()},
             {"cut_evaluations", evaluations},
             {"seconds", seconds}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "width: " << fmt12(value) << "\n"
              << "units: " << units << "\n"
              << "mode: " << opt.mode << "\n"
              << "modes: " << n << "\n"
              << "maximizing-cut: " << maximizing.to_string() << "\n"
              << "cut-evaluations: " << evaluations << "\n"
              << "seconds: " << fmt12(seconds) << "\n";
  }
  return 0;
}

struct SweepOpts {
  GraphSource src;
  std::string sizes_spec;
  std::string b_spec = "1";
  std::string eta_spec = "1";
  std::string measure = "ee";
  std::string task = "cut";
  std::string cut_spec;
  std::string out_path;
  int threads = 1;
  int cap = 20;
};

int run_sweep(const SweepOpts& opt) {
  const std::vector<int> sizes =
      opt.src.family == "file" ? std::vector<int>{0} : parse_int_list(opt.sizes_spec);
  const std::vector<double> bs = parse_double_list(opt.b_spec);
  const std::vector<double> etas = parse_double_list(opt.eta_spec);
  for (double eta : etas)
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("eta outside [0, 1]");

  std::vector<std::string> tasks;
  if (opt.task == "decomposition-width")
    tasks = {"diagonal-width", "rectangular-width"};
  else if (opt.task == "cut" || opt.task == "diagonal-width" ||
           opt.task == "rectangular-width" || opt.task == "exact-width")
    tasks = {opt.task};
  else
    throw std::invalid_argument("unknown task: " + opt.task);
  if (opt.task == "cut" && opt.cut_spec.empty())
    throw std::invalid_argument("task \"cut\" needs --cut");
  if (opt.measure == "ee")
    for (double eta : etas)
      if (eta < 1.0)
        throw std::invalid_argument("ee is undefined for lossy states; use ln");

  struct Row {
    int size;
    double b, eta;
    std::string task;
    double value = 0.0;
    double seconds = 0.0;
  };
  std::vector<Row> rows;
  for (int size : sizes)
    for (double b : bs)
      for (double eta : etas)
        for (const std::string& task : tasks) rows.push_back({size, b, eta, task, 0, 0});

  parallel_for(rows.size(), opt.threads, [&](std::size_t i) {
    Row& row = rows[i];
    GraphSource src = opt.src;
    if (src.family != "file") src.size = row.size;
    const auto start = std::chrono::steady_clock::now();

    if (row.task == "cut") {
      GaussianState state = build_state(src, row.b, row.eta);
      Bipartition cut = parse_cut(opt.cut_spec, src, state.n_modes);
      row.value = opt.measure == "ln" ? log_negativity(state, cut)
                                      : entropic_entanglement(state, cut);
    } else {
      GaussianState state = build_state(src, row.b, row.eta);
      CutFunction cut = opt.measure == "ln" ? ln_cut(state) : ee_cut(state);
      if (row.task == "exact-width") {
        row.value = exact_width(state.n_modes, cut, 1, opt.cap).width;
      } else {
        if (src.family != "grid")
          throw std::invalid_argument("decomposition widths need --family grid");
        Decomposition d = row.task == "diagonal-width"
                              ? diagonal_decomposition(src.size)
                              : rectangular_decomposition(src.size);
        CutCache cache(cut);
        row.value = width(d, cache);
      }
    }
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  std::ofstream out(opt.out_path);
  if (!out) throw std::runtime_error("cannot write " + opt.out_path);
  out << "family,l_or_n,b,eta,measure,task,value,seconds\n";
  for (const Row& row : rows) {
    const int reported_size =
        opt.src.family == "file" ? opt.src.n_modes() : row.size;
    out << opt.src.family << "," << reported_size << "," << fmt12(row.b) << ","
        << fmt12(row.eta) << "," << opt.measure << "," << row.task << ","
        << fmt12(row.value) << "," << fmt12(row.seconds) << "\n";
  }
  std::cerr << "wrote " << rows.size() << " rows to " << opt.out_path << "\n";
  return 0;
}

struct ReproduceOpts {
  std::string figure;
  std::string out_dir = ".";
  int threads = 1;
  std::string b_spec;  // optional override
  int lmax = 15;
};

std::ofstream open_csv(const ReproduceOpts& opt, const std::string& name) {
  std::filesystem::create_directories(opt.out_dir);
  const std::string path = opt.out_dir + "/" + name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  std::cerr << "writing " << path << "\n";
  return out;
}

// EW + decomposition widths versus squeezing for one lossless grid.
void reproduce_fig4(const ReproduceOpts& opt, int l, const std::string& name) {
  const std::vector<double> bs =
      opt.b_spec.empty() ? logspace(0.25, 8.0, 25) : parse_double_list(opt.b_spec);
  std::ofstream out = open_csv(opt, name);
  out << "b,exact_ew,diagonal_width,rectangular_width\n";
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const double b = bs[i];
    GaussianState state = canonical_cluster(grid_graph(l, b));
    CutFunction cut = ee_cut(state);
    const double ew = exact_width(l * l, cut, opt.threads).width;
    CutCache cache(cut);
    const double dw = width(diagonal_decomposition(l), cache, opt.threads);
    const double rw = width(rectangular_decomposition(l), cache, opt.threads);
    out << fmt12(b) << "," << fmt12(ew) << "," << fmt12(dw) << "," << fmt12(rw) << "\n";
    std::cerr << name << ": " << (i + 1) << "/" << bs.size() << " (b=" << fmt12(b)
              << ", " << fmt12(std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count())
              << " s elapsed)\n";
  }
}

// Decomposition EE widths versus grid size for a fixed set of squeezings.
void reproduce_fig5(const ReproduceOpts& opt) {
  const std::vector<double> bs =
      opt.b_spec.empty() ? std::vector<double>{0.5, 1.0, 2.0, 4.0}
                         : parse_double_list(opt.b_spec);
  std::ofstream out = open_csv(opt, "fig5.csv");
  out << "l,b,diagonal_width,rectangular_width\n";
  for (int l = 2; l <= opt.lmax; ++l)
    for (double b : bs) {
      GaussianState state = canonical_cluster(grid_graph(l, b));
      CutFunction cut = ee_cut(state);
      CutCache cache(cut);
      const double dw = width(diagonal_decomposition(l), cache, opt.threads);
      const double rw = width(rectangular_decomposition(l), cache, opt.threads);
      out << l << "," << fmt12(b) << "," << fmt12(dw) << "," << fmt12(rw) << "\n";
      std::cerr << "fig5: l=" << l << " b=" << fmt12(b) << " done\n";
    }
}

// Exact LNW + decomposition LN widths versus squeezing under loss.
void reproduce_fig6(const ReproduceOpts& opt) {
  const std::vector<double> bs =
      opt.b_spec.empty() ? logspace(0.25, 8.0, 25) : parse_double_list(opt.b_spec);
  const std::vector<double> etas{1.0, 0.9, 0.5, 0.25};
  for (int l : {3, 4}) {
    const std::string name = "fig6_" + std::to_string(l) + "x" + std::to_string(l) + ".csv";
    std::ofstream out = open_csv(opt, name);
    out << "eta,b,exact_lnw,diagonal_width,rectangular_width\n";
    const std::size_t total = etas.size() * bs.size();
    std::size_t done = 0;
    const auto start = std::chrono::steady_clock::now();
    for (double eta : etas)
      for (double b : bs) {
        GaussianState pure = physical_cluster(grid_graph(l, 1.0),
                                              SqueezingParams::from_b(b));
        GaussianState state = apply_loss(pure, eta);
        CutFunction cut = ln_cut(state);
        const double lnw = exact_width(l * l, cut, opt.threads).width;
        CutCache cache(cut);
        const double dw = width(diagonal_decomposition(l), cache, opt.threads);
        const double rw = width(rectangular_decomposition(l), cache, opt.threads);
        out << fmt12(eta) << "," << fmt12(b) << "," << fmt12(lnw) << "," << fmt12(dw)
            << "," << fmt12(rw) << "\n";
        ++done;
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::cerr << name << ": " << done << "/" << total << " (eta=" << fmt12(eta)
                  << " b=" << fmt12(b) << ", " << fmt12(elapsed) << " s elapsed, ~"
                  << fmt12(elapsed / done * (total - done)) << " s remaining)\n";
      }
  }
}

// Decomposition LN widths versus grid size under loss, fixed squeezing.
void reproduce_fig7(const ReproduceOpts& opt) {
  const std::vector<double> bs =
      opt.b_spec.empty() ? std::vector<double>{2.0} : parse_double_list(opt.b_spec);
  const std::vector<double> etas{1.0, 0.9, 0.5};
  std::ofstream out = open_csv(opt, "fig7.csv");
  out << "eta,b,l,diagonal_width,rectangular_width\n";
  const auto start = std::chrono::steady_clock::now();
  for (double eta : etas)
    for (double b : bs)
      for (int l = 3; l <= opt.lmax; ++l) {
        GaussianState state = apply_loss(
            physical_cluster(grid_graph(l, 1.0), SqueezingParams::from_b(b)), eta);
        CutFunction cut = ln_cut(state);
        CutCache cache(cut);
        const double dw = width(diagonal_decomposition(l), cache, opt.threads);
        const double rw = width(rectangular_decomposition(l), cache, opt.threads);
        out << fmt12(eta) << "," << fmt12(b) << "," << l << "," << fmt12(dw) << ","
            << fmt12(rw) << "\n";
        std::cerr << "fig7: eta=" << fmt12(eta) << " b=" << fmt12(b) << " l=" << l
                  << " ("
                  << fmt12(std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count())
                  << " s elapsed)\n";
      }
}

int run_reproduce(const ReproduceOpts& opt) {
  if (opt.figure == "fig4a")
    reproduce_fig4(opt, 3, "fig4a.csv");
  else if (opt.figure == "fig4b")
    reproduce_fig4(opt, 4, "fig4b.csv");
  else if (opt.figure == "fig5")
    reproduce_fig5(opt);
  else if (opt.figure == "fig6")
    reproduce_fig6(opt);
  else if (opt.figure == "fig7")
    reproduce_fig7(opt);
  else
    throw std::invalid_argument("unknown figure: " + opt.figure);
  return 0;
}

void add_graph_options(CLI::App* cmd, GraphSource& src, bool with_size = true) {
  cmd->add_option("--family", src.family, "path | star | complete | grid | file")
      ->default_val("path");
  if (with_size)
    cmd->add_option("--size", src.size, "modes for wires, side length for grids");
  cmd->add_option("--graph", src.graph_path, "edge-list graph file (family=file)");
}

void validate_graph_source(GraphSource& src) {
  if (src.family == "file") {
    if (src.graph_path.empty())
      throw std::invalid_argument("--family file needs --graph");
  } else if (src.size < 2) {
    throw std::invalid_argument("--size must be at least 2");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite entanglement and entanglement width of Gaussian cluster states"};
  app.require_subcommand(1);

  MeasureOpts measure_opts;
  CLI::App* measure = app.add_subcommand("measure", "evaluate one cut of one state");
  add_graph_options(measure, measure_opts.src);
  measure->add_option("--b", measure_opts.b, "bond/squeezing parameter")->default_val(1.0);
  measure->add_option("--eta", measure_opts.eta, "loss transmissivity")->default_val(1.0);
  measure->add_option("--measure", measure_opts.measure)
      ->check(CLI::IsMember({"ee", "ln"}))
      ->default_val("ee");
  measure->add_option("--cut", measure_opts.cut_spec,
                      "mode list \"0,2,5\" or odd-even | diagonal | row:k")
      ->required();
  measure->add_flag("--qubit", measure_opts.qubit, "GF(2) cut rank instead of phase space");
  measure->add_flag("--json", measure_opts.as_json);

  WidthOpts width_opts;
  CLI::App* width_cmd = app.add_subcommand("width", "width of a state");
  add_graph_options(width_cmd, width_opts.src);
  width_cmd->add_option("--b", width_opts.b)->default_val(1.0);
  width_cmd->add_option("--eta", width_opts.eta)->default_val(1.0);
  width_cmd->add_option("--measure", width_opts.measure)
      ->check(CLI::IsMember({"ee", "ln"}))
      ->default_val("ee");
  width_cmd->add_option("--mode", width_opts.mode)
      ->check(CLI::IsMember({"exact", "diagonal", "rectangular", "brute"}))
      ->default_val("exact");
  width_cmd->add_flag("--qubit", width_opts.qubit);
  width_cmd->add_flag("--json", width_opts.as_json);
  width_cmd->add_option("--threads", width_opts.threads)->default_val(1);
  width_cmd->add_option("--cap", width_opts.cap, "exact-width mode cap")->default_val(20);

  SweepOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "grid of measurements to CSV");
  add_graph_options(sweep, sweep_opts.src, /*with_size=*/false);
  sweep->add_option("--size", sweep_opts.sizes_spec,
                    "size list, e.g. \"3,4\" or \"2..15\"");
  sweep->add_option("--b", sweep_opts.b_spec, "b list")->default_val("1");
  sweep->add_option("--eta", sweep_opts.eta_spec, "eta list")->default_val("1");
  sweep->add_option("--measure", sweep_opts.measure)
      ->check(CLI::IsMember({"ee", "ln"}))
      ->default_val("ee");
  sweep->add_option("--task", sweep_opts.task,
                    "cut | decomposition-width | diagonal-width | rectangular-width | "
                    "exact-width")
      ->default_val("cut");
  sweep->add_option("--cut", sweep_opts.cut_spec);
  sweep->add_option("--out", sweep_opts.out_path, "CSV output path")->required();
  sweep->add_option("--threads", sweep_opts.threads)->default_val(1);
  sweep->add_option("--cap", sweep_opts.cap)->default_val(20);

  ReproduceOpts repro_opts;
  CLI::App* repro = app.add_subcommand("reproduce", "emit a named figure dataset");
  repro->add_option("figure", repro_opts.figure, "fig4a | fig4b | fig5 | fig6 | fig7")
      ->required();
  repro->add_option("--out", repro_opts.out_dir, "output directory")->default_val(".");
  repro->add_option("--threads", repro_opts.threads)->default_val(1);
  repro->add_option("--b", repro_opts.b_spec, "override the default b grid");
  repro->add_option("--lmax", repro_opts.lmax, "largest grid side for fig5/fig7")
      ->default_val(15);

  try {
    app.parse(argc, argv);
    if (measure->parsed()) {
      validate_graph_source(measure_opts.src);
      return run_measure(measure_opts);
    }
    if (width_cmd->parsed()) {
      validate_graph_source(width_opts.src);
      return run_width(width_opts);
    }
    if (sweep->parsed()) {
      if (sweep_opts.src.family != "file" && sweep_opts.sizes_spec.empty())
        throw std::invalid_argument("sweep needs --size (or --family file)");
      if (sweep_opts.src.family == "file" && sweep_opts.src.graph_path.empty())
        throw std::invalid_argument("--family file needs --graph");
      return run_sweep(sweep_opts);
    }
    if (repro->parsed()) return run_reproduce(repro_opts);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const resource_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
