#include "sfc_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sfc/clustering.hpp"
#include "sfc/experiments.hpp"
#include "sfc/theory.hpp"
#include "sfc_cli/verify.hpp"

namespace sfc::cli {

using nlohmann::json;

namespace {

// Validation failure reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Coord> parse_list(const std::string& text, const std::string& what) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not a number");
    }
  }
  return out;
}

CurveKind parse_curve(const std::string& name) {
  const auto kind = parse_curve_kind(name);
  if (!kind) throw UsageError("unknown curve '" + name + "'");
  return *kind;
}

Universe make_universe(int dim, Coord side) {
  try {
    return Universe(dim, side);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Curve make_curve(CurveKind kind, Coord side) {
  const Universe u = make_universe(curve_dimension(kind), side);
  const std::string err = support_error(kind, u);
  if (!err.empty()) throw UsageError(err);
  return Curve(kind, u);
}

std::string decimal(const Rational& r) { return to_decimal(r, 6); }

json rational_json(const Rational& r) { return {{"value", r.to_double()}, {"exact", r.str()}}; }

json formula_json(const FormulaValue& f) {
  return {{"value", rational_json(f.value)},
          {"slack", rational_json(f.slack)},
          {"kind", std::string(to_string(f.kind))},
          {"case", f.label},
          {"swapped", f.swapped}};
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string padded(const Extent& e, const Cell* c, int dim) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    out += ',';
    if (i < dim) out += std::to_string(c ? (*c)[i] : e[i]);
  }
  return out;
}

std::string cell_text(const Cell& c) { return to_string(c); }

Cell parse_cell(const std::string& text, int dim) {
  const auto v = parse_list(text, "cell");
  if (static_cast<int>(v.size()) != dim)
    throw UsageError("cell needs " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  return Cell::from(v);
}

// A single value stands for a cube.
Extent parse_extent(const std::string& text, int dim) {
  const auto v = parse_list(text, "lengths");
  if (v.size() == 1) return Extent::filled(dim, v[0]);
  if (static_cast<int>(v.size()) != dim)
    throw UsageError("lengths need 1 or " + std::to_string(dim) + " values, got " + std::to_string(v.size()));
  return Extent::from(v);
}

std::vector<Ratio> parse_ratios(const std::string& text) {
  if (text.empty() || text == "paper") return published_ratios();
  std::vector<Ratio> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Ratio r;
    const auto slash = item.find('/');
    try {
      r.num = std::stoll(item.substr(0, slash));
      r.den = slash == std::string::npos ? 1 : std::stoll(item.substr(slash + 1));
    } catch (const std::exception&) {
      throw UsageError("ratio '" + item + "' is not of the form a or a/b");
    }
    if (r.num <= 0 || r.den <= 0) throw UsageError("ratio '" + item + "' must be positive");
    out.push_back(r);
  }
  return out;
}

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream;

  Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw UsageError("cannot open '" + path + "' for writing");
    stream = file.get();
  }
  std::ostream& get() { return *stream; }
};

// ---- map -----------------------------------------------------------------

struct MapArgs {
  std::string curve;
  Coord side = 0;
  std::string cell;
  std::optional<Rank> rank;
};

void cmd_map(const MapArgs& a, std::ostream& out) {
  const Curve curve = make_curve(parse_curve(a.curve), a.side);
  const Universe& u = curve.universe();
  if (!a.cell.empty() == a.rank.has_value()) throw UsageError("give exactly one of --cell or --rank");
  if (a.rank) {
    if (*a.rank < 0 || *a.rank >= u.cells())
      throw UsageError("rank " + std::to_string(*a.rank) + " outside [0, " + std::to_string(u.cells()) + ")");
    out << cell_text(curve.cell_at(*a.rank)) << '\n';
    return;
  }
  const Cell c = parse_cell(a.cell, u.dim());
  if (!u.contains(c)) throw UsageError("cell " + to_string(c) + " outside [0, " + std::to_string(u.side()) + ")");
  out << curve.index(c) << '\n';
}

// ---- trace ---------------------------------------------------------------

struct TraceArgs {
  std::string curve;
  Coord side = 0;
  Rank from = 0;
  std::optional<Count> count;
};

void cmd_trace(const TraceArgs& a, std::ostream& out) {
  const Curve curve = make_curve(parse_curve(a.curve), a.side);
  const Count n = curve.universe().cells();
  if (a.from < 0 || a.from >= n) throw UsageError("--from outside [0, " + std::to_string(n) + ")");
  const Count last = a.count ? std::min(n, a.from + std::max<Count>(*a.count, 0)) : n;
  out << (curve.universe().dim() == 2 ? "rank,x,y\n" : "rank,x,y,z\n");
  for (Rank r = a.from; r < last; ++r) out << r << ',' << cell_text(curve.cell_at(r)) << '\n';
}

// ---- cluster -------------------------------------------------------------

struct ClusterArgs {
  std::string curve;
  Coord side = 0;
  std::string origin;
  std::string lengths;
  std::string format = "json";
  std::string method = "auto";
};

void cmd_cluster(const ClusterArgs& a, std::ostream& out) {
  const Curve curve = make_curve(parse_curve(a.curve), a.side);
  const Universe& u = curve.universe();
  const Cell origin = parse_cell(a.origin, u.dim());
  const Extent lengths = parse_extent(a.lengths, u.dim());
  std::optional<RectQuery> q;
  try {
    q.emplace(u, origin, lengths);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.method == "boundary" || (a.method == "auto" && u.dim() == 3 && q->volume() > kNaiveVolumeLimit3d)) {
    if (!curve.sparse_breaks()) throw UsageError("boundary method needs a curve with sparse breaks");
    const Count count = count_clusters(curve, *q);
    if (a.format == "csv")
      out << "count\n" << count << '\n';
    else
      out << json{{"schema_version", kSchemaVersion}, {"curve", curve.name()}, {"side", u.side()}, {"count", count}}.dump(2)
          << '\n';
    return;
  }
  if (a.method != "auto" && a.method != "sort") throw UsageError("unknown method '" + a.method + "'");
  const IntervalDecomposition dec = clusters_of_query(curve, *q);
  if (a.format == "csv") {
    out << "lo,hi\n";
    for (const auto& iv : dec.intervals) out << iv.lo << ',' << iv.hi << '\n';
    return;
  }
  json intervals = json::array();
  for (const auto& iv : dec.intervals) intervals.push_back({iv.lo, iv.hi});
  std::vector<Coord> o(origin.v.begin(), origin.v.begin() + u.dim()), l(lengths.v.begin(), lengths.v.begin() + u.dim());
  out << json{{"schema_version", kSchemaVersion},
              {"curve", curve.name()},
              {"dim", u.dim()},
              {"side", u.side()},
              {"origin", o},
              {"lengths", l},
              {"count", dec.count()},
              {"intervals", intervals}}
             .dump(2)
      << '\n';
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string scope = "all";
  Coord max_side = 16;
  std::string sides = "8,16,32";
  std::string format = "text";
  std::string output;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (std::find(verify_scopes().begin(), verify_scopes().end(), a.scope) == verify_scopes().end())
    throw UsageError("unknown scope '" + a.scope + "'");
  VerifyOptions opts;
  opts.max_side = a.max_side;
  opts.sides = parse_list(a.sides, "sides");
  for (Coord s : opts.sides)
    if (s < 2 || s % 2) throw UsageError("sides must be even and at least 2");
  opts.workers = a.workers ? a.workers : default_workers();
  const VerifyReport report = run_verify(a.scope, opts);

  json checks = json::array();
  for (const Check& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", rational_json(c.measured)},
                      {"relation", std::string(to_string(c.relation))},
                      {"bound", rational_json(c.bound)},
                      {"detail", c.detail}});
  const json doc{{"schema_version", kSchemaVersion}, {"scope", report.scope}, {"passed", report.passed()}, {"checks", checks}};

  if (!a.output.empty()) {
    Output file(a.output, out);
    file.get() << doc.dump(2) << '\n';
  }
  if (a.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    for (const Check& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << decimal(c.measured);
      if (c.relation != Relation::info) out << ' ' << to_string(c.relation) << ' ' << decimal(c.bound);
      out << " (" << c.detail << ")\n";
    }
    out << (report.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

// ---- bounds --------------------------------------------------------------

struct BoundsArgs {
  int dim = 2;
  Coord side = 0;
  std::string lengths;
  std::optional<double> mu;
  std::string phi;
  std::string psi;
  std::string format = "text";
};

void cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const Universe u = make_universe(a.dim, a.side);
  const Extent l = parse_extent(a.lengths, a.dim);
  for (int i = 0; i < a.dim; ++i)
    if (l[i] < 1 || l[i] > u.side())
      throw UsageError("length " + std::to_string(l[i]) + " outside [1, " + std::to_string(u.side()) + "]");

  std::vector<std::pair<std::string, FormulaValue>> rows;
  if (a.dim == 2) {
    rows.emplace_back("thm1_onion2d", thm1_onion2d(l[0], l[1], u.side()));
    rows.emplace_back("lb2d_continuous", lb2d_continuous(l[0], l[1], u.side()));
    rows.emplace_back("lb2d_general", lb2d_general(l[0], l[1], u.side()));
  } else if (l[0] == l[1] && l[1] == l[2]) {
    rows.emplace_back("thm4_onion3d", thm4_onion3d(l[0], u.side()));
    rows.emplace_back("lb3d_continuous", lb3d_continuous(l[0], u.side()));
    rows.emplace_back("lb3d_general", lb3d_general(l[0], u.side()));
  }
  if (u.cells() <= (Count{1} << 24)) {
    const TranslationQuerySet qs(u, l);
    rows.emplace_back("lb_exact_continuous", lb_exact_continuous(qs));
    rows.emplace_back("lb_exact_general", lb_exact_general(qs));
  }

  NearCubeParams params;
  params.mu = a.mu.value_or(1.0);
  if (!a.phi.empty()) {
    params.phi = parse_doubles(a.phi, "phi");
  } else {
    const double scale = std::pow(static_cast<double>(u.side()), params.mu);
    for (int i = 0; i < a.dim; ++i) params.phi.push_back(static_cast<double>(l[i]) / scale);
  }
  if (!a.psi.empty()) params.psi = parse_doubles(a.psi, "psi");
  std::optional<CaseLabel> label;
  std::string case_error;
  try {
    label = near_cube_case(params, a.dim, u.side());
  } catch (const std::invalid_argument& e) {
    case_error = e.what();
  }

  if (a.format == "json") {
    json formulas = json::object();
    for (const auto& [name, f] : rows) formulas[name] = formula_json(f);
    json nc;
    if (label) {
      nc = {{"case", label->name},
            {"mu", label->mu},
            {"phi", label->phi},
            {"near_cube", label->near_cube},
            {"eta_upper_bound", label->bound ? json(*label->bound) : json(nullptr)}};
    } else {
      nc = {{"case", nullptr}, {"reason", case_error}};
    }
    std::vector<Coord> lv(l.v.begin(), l.v.begin() + a.dim);
    out << json{{"schema_version", kSchemaVersion}, {"dim", a.dim}, {"side", u.side()}, {"lengths", lv},
                {"formulas", formulas}, {"near_cube", nc}}
               .dump(2)
        << '\n';
    return;
  }
  out << "name,value,exact,slack,kind,case\n";
  for (const auto& [name, f] : rows)
    out << name << ',' << decimal(f.value) << ',' << f.value.str() << ',' << decimal(f.slack) << ','
        << to_string(f.kind) << ',' << f.label << '\n';
  if (label)
    out << "near_cube_case," << label->name << ",eta upper bound "
        << (label->bound ? fmt_double(*label->bound) : std::string("unknown")) << '\n';
  else
    out << "near_cube_case,none," << case_error << '\n';
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  std::string experiment = "random-cubes";
  int dim = 2;
  Coord side = 0;
  std::string curves;
  std::string sizes;
  std::optional<Count> count;
  std::string rho_list = "paper";
  Coord step = 0;
  Count samples = 20;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string output;
  std::string stats;
  std::string format = "csv";
  bool full_scale = false;
};

void cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig c;
  const auto exp = parse_experiment(a.experiment);
  if (!exp) throw UsageError("unknown experiment '" + a.experiment + "'");
  c.experiment = *exp;
  c.dim = a.dim;
  if (a.dim != 2 && a.dim != 3) throw UsageError("dimension must be 2 or 3");
  c.side = a.side ? a.side : (a.full_scale ? (a.dim == 2 ? 1024 : 512) : (a.dim == 2 ? 256 : 64));
  const Universe u = make_universe(c.dim, c.side);
  if (a.curves.empty()) {
    c.curves = a.dim == 2 ? std::vector<CurveKind>{CurveKind::onion2d, CurveKind::hilbert2d}
                          : std::vector<CurveKind>{CurveKind::onion3d, CurveKind::hilbert3d};
  } else if (a.curves != "none") {
    std::stringstream ss(a.curves);
    std::string item;
    while (std::getline(ss, item, ',')) c.curves.push_back(parse_curve(item));
  }
  for (CurveKind k : c.curves) {
    const std::string err = support_error(k, u);
    if (!err.empty()) throw UsageError(std::string(to_string(k)) + ": " + err);
  }
  if (!a.sizes.empty()) c.sizes = parse_list(a.sizes, "sizes");
  for (Coord l : c.sizes)
    if (l < 1 || l > c.side) throw UsageError("size " + std::to_string(l) + " outside [1, " + std::to_string(c.side) + "]");
  c.count = a.count.value_or(c.experiment == Experiment::random_corners ? 1000 : (a.dim == 2 ? 1000 : 500));
  if (c.count < 1) throw UsageError("count must be at least 1");
  c.ratios = parse_ratios(a.rho_list);
  if (a.step < 0) throw UsageError("step must be positive");
  c.step = a.step;
  c.samples_per_size = a.samples;
  c.seed = a.seed;
  c.workers = a.workers ? a.workers : default_workers();

  const BenchResult result = run_benchmark(c);

  if (a.format == "json") {
    json rows = json::array();
    for (const auto& r : result.rows) {
      std::vector<Coord> o(r.query.origin().v.begin(), r.query.origin().v.begin() + c.dim);
      std::vector<Coord> l(r.query.lengths().v.begin(), r.query.lengths().v.begin() + c.dim);
      rows.push_back({{"curve", to_string(r.curve)}, {"lengths", l}, {"origin", o}, {"clusters", r.clusters}});
    }
    json stats = json::array();
    for (const auto& s : result.stats) {
      json l = nullptr;
      if (s.lengths) l = std::vector<Coord>(s.lengths->v.begin(), s.lengths->v.begin() + c.dim);
      stats.push_back({{"curve", to_string(s.curve)}, {"lengths", l}, {"min", s.stats.min}, {"q1", s.stats.q1},
                       {"median", s.stats.median}, {"q3", s.stats.q3}, {"max", s.stats.max}, {"mean", s.stats.mean},
                       {"count", s.stats.count}});
    }
    Output o(a.output, out);
    o.get() << json{{"schema_version", kSchemaVersion}, {"experiment", a.experiment}, {"dim", c.dim},
                    {"side", c.side}, {"seed", c.seed}, {"rows", rows}, {"stats", stats}}
                   .dump(2)
            << '\n';
    return;
  }

  {
    Output o(a.output, out);
    std::ostream& s = o.get();
    s << "curve,d,side,l1,l2,l3,ox,oy,oz,clusters\n";
    for (const auto& r : result.rows)
      s << to_string(r.curve) << ',' << c.dim << ',' << c.side << padded(r.query.lengths(), nullptr, c.dim)
        << padded(r.query.lengths(), &r.query.origin(), c.dim) << ',' << r.clusters << '\n';
  }
  std::string stats_path = a.stats;
  if (stats_path.empty() && !a.output.empty() && a.output != "-") stats_path = a.output + ".stats.csv";
  if (stats_path.empty()) return;
  Output o(stats_path, out);
  std::ostream& s = o.get();
  s << "curve,d,side,l1,l2,l3,min,q1,median,q3,max,mean,count\n";
  for (const auto& r : result.stats) {
    s << to_string(r.curve) << ',' << c.dim << ',' << c.side;
    if (r.lengths)
      s << padded(*r.lengths, nullptr, c.dim);
    else
      s << ",,,";
    s << ',' << fmt_double(r.stats.min) << ',' << fmt_double(r.stats.q1) << ',' << fmt_double(r.stats.median) << ','
      << fmt_double(r.stats.q3) << ',' << fmt_double(r.stats.max) << ',' << fmt_double(r.stats.mean) << ','
      << r.stats.count << '\n';
  }
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("SFC_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Space-filling curves: onion, Hilbert, Z-order, Gray-code, row/column-major"};
  app.name("sfc");
  app.require_subcommand(1);

  std::string curve_help = "curve:";
  for (CurveKind k : all_curve_kinds()) curve_help += " " + std::string(to_string(k));

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Map a cell to its rank or a rank to its cell");
  map->add_option("--curve", map_args.curve, curve_help)->required();
  map->add_option("-s,--side", map_args.side, "Grid side length")->required();
  map->add_option("--cell", map_args.cell, "Cell as x,y[,z]");
  map->add_option("--rank", map_args.rank, "Rank");

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("trace", "List cells in curve order as CSV");
  trace->add_option("--curve", trace_args.curve, curve_help)->required();
  trace->add_option("-s,--side", trace_args.side, "Grid side length")->required();
  trace->add_option("--from", trace_args.from, "First rank");
  trace->add_option("--count", trace_args.count, "Number of ranks");

  ClusterArgs cluster_args;
  auto* cluster = app.add_subcommand("cluster", "Decompose a query into rank intervals");
  cluster->add_option("--curve", cluster_args.curve, curve_help)->required();
  cluster->add_option("-s,--side", cluster_args.side, "Grid side length")->required();
  cluster->add_option("--origin", cluster_args.origin, "Lower corner x,y[,z]")->required();
  cluster->add_option("--lengths,-l", cluster_args.lengths, "Side lengths l1,l2[,l3]")->required();
  cluster->add_option("--format", cluster_args.format)->check(CLI::IsMember({"json", "csv"}));
  cluster->add_option("--method", cluster_args.method)->check(CLI::IsMember({"auto", "sort", "boundary"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run invariant sweeps against brute-force oracles");
  verify->add_option("--scope", verify_args.scope)->check(CLI::IsMember(verify_scopes()));
  verify->add_option("--max-side", verify_args.max_side, "Largest side for lemma1/lemma2/soundness sweeps");
  verify->add_option("--sides", verify_args.sides, "Sides for the thm1 sweep, comma separated");
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output,-o", verify_args.output, "Also write the JSON report here");
  verify->add_option("--workers", verify_args.workers, "Worker threads (default SFC_WORKERS or all cores)");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Evaluate closed forms, lower bounds and the near-cube case");
  bounds->add_option("-d,--dim", bounds_args.dim)->check(CLI::IsMember({2, 3}));
  bounds->add_option("-s,--side", bounds_args.side)->required();
  bounds->add_option("--lengths,-l", bounds_args.lengths, "l1,l2[,l3]")->required();
  bounds->add_option("--mu", bounds_args.mu, "Growth exponent (default 1)");
  bounds->add_option("--phi", bounds_args.phi, "phi_i, comma separated (default l_i / s^mu)");
  bounds->add_option("--psi", bounds_args.psi, "psi_i, comma separated (default 0)");
  bounds->add_option("--format", bounds_args.format)->check(CLI::IsMember({"text", "json"}));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a query experiment and write per-query rows and box statistics");
  bench->add_option("--experiment", bench_args.experiment)
      ->check(CLI::IsMember({"random-cubes", "fixed-ratio", "random-corners"}));
  bench->add_option("-d,--dim,--d", bench_args.dim)->check(CLI::IsMember({2, 3}));
  bench->add_option("-s,--side,--s", bench_args.side, "Side (default 256 in 2D, 64 in 3D)");
  bench->add_option("--curves", bench_args.curves, "Comma separated curves, or none (default onion and hilbert)");
  bench->add_option("--sizes", bench_args.sizes, "Cube sides for random-cubes (default: the scaled published schedule)");
  bench->add_option("--count", bench_args.count, "Queries per size (random-cubes) or in total (random-corners)");
  bench->add_option("--rho-list", bench_args.rho_list, "paper (the published list), or ratios like 1/4,1,4");
  bench->add_option("--step", bench_args.step, "l2 decrement for fixed-ratio (default 50 s / 1024)");
  bench->add_option("--samples", bench_args.samples, "Placements per fixed-ratio size");
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--workers", bench_args.workers, "Worker threads (default SFC_WORKERS or all cores)");
  bench->add_option("--output,-o", bench_args.output, "Row output path (default stdout)");
  bench->add_option("--stats", bench_args.stats, "Box statistics path (default <output>.stats.csv)");
  bench->add_option("--format", bench_args.format)->check(CLI::IsMember({"csv", "json"}));
  bench->add_flag("--full-scale", bench_args.full_scale, "Use s = 1024 (2D) or 512 (3D)");

  std::vector<std::string> argv_store{"sfc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*map) cmd_map(map_args, out);
    if (*trace) cmd_trace(trace_args, out);
    if (*cluster) cmd_cluster(cluster_args, out);
    if (*verify) return cmd_verify(verify_args, out);
    if (*bounds) cmd_bounds(bounds_args, out);
    if (*bench) cmd_bench(bench_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sfc::cli
