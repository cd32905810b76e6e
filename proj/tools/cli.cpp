#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hsaw/bounds.hpp"
#include "hsaw/enumeration.hpp"
#include "hsaw/errors.hpp"
#include "hsaw/io.hpp"
#include "hsaw/planar_map.hpp"
#include "hsaw/sap_geometry.hpp"
#include "hsaw/transfer.hpp"

namespace hsaw::cli {

namespace {

struct RunConfig {
  std::string subcommand;
  int d = 0;
  int k = 0;
  int n = -1;
  int radius = -1;  // -1: derive from n
  double epsilon = 0.2;
  std::string format = "table";
  std::string output;
  std::string kind = "walks";
  std::string system;
  int param_d = 7;
  std::string d_range = "7:100";
  int workers = 1;
  std::uint64_t budget = 5'000'000;
  bool force = false;

  std::string canonical() const {
    std::ostringstream os;
    os << subcommand << " d=" << d << " k=" << k << " n=" << n
       << " radius=" << radius << " epsilon=" << format_sig(epsilon, 12)
       << " format=" << format << " kind=" << kind << " system=" << system
       << " param_d=" << param_d << " d_range=" << d_range
       << " budget=" << budget;
    // Worker count is deliberately excluded: it never changes any output.
    return os.str();
  }
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("--output: cannot open '" + cfg.output + "'");
  f << text;
}

ReportMeta meta_for(const RunConfig& cfg, int radius = -1) {
  ReportMeta meta;
  meta.d = cfg.d;
  meta.k = cfg.k;
  meta.radius = radius;
  meta.config = cfg.canonical();
  return meta;
}

TessellationParams params_of(const RunConfig& cfg) {
  TessellationParams p{cfg.d, cfg.k};
  if (!p.is_hyperbolic())
    throw UsageError("-d/-k: (" + std::to_string(cfg.d) + "," +
                     std::to_string(cfg.k) +
                     ") is not hyperbolic: require (d-2)(k-2) > 4");
  return p;
}

void require_n(const RunConfig& cfg) {
  if (cfg.n < 0) throw UsageError("-n: a length bound is required");
}

PlanarMap build_map(const RunConfig& cfg, int radius) {
  BuildOptions opt;
  opt.vertex_budget = cfg.budget;
  return PlanarMap::build_ball(params_of(cfg), radius, opt);
}

// Desk-scale enumeration horizon: searches visit roughly d(d-1)^(n-1)
// states. Deeper runs need an explicit opt-in, with the cost spelled out.
void guard_horizon(const RunConfig& cfg, std::ostream& err) {
  int horizon = cfg.d == 3 ? 24 : (cfg.d == 4 ? 16 : 12);
  double states = cfg.d * std::pow(cfg.d - 1.0, cfg.n - 1) * 1.2;
  if (cfg.n <= horizon) return;
  std::ostringstream note;
  note << "roughly " << format_sig(states, 3) << " walk extensions, about "
       << format_sig(states / 5e7, 2) << " s";
  if (!cfg.force)
    throw UsageError("-n: " + std::to_string(cfg.n) +
                     " exceeds the default horizon of " +
                     std::to_string(horizon) + " for d=" + std::to_string(cfg.d) +
                     " (" + note.str() + "); pass --force to proceed");
  err << "deep enumeration: " << note.str() << "\n";
}

int run_bounds(const RunConfig& cfg, std::ostream& out) {
  auto rep = bounds_report(params_of(cfg));
  if (cfg.format == "json")
    emit(cfg, out, bounds_json(rep, meta_for(cfg)));
  else if (cfg.format == "csv")
    emit(cfg, out, bounds_csv(rep));
  else
    emit(cfg, out, bounds_table(rep));
  return 0;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg);
  int radius = cfg.radius >= 0 ? cfg.radius : cfg.n;
  auto map = build_map(cfg, radius);
  guard_horizon(cfg, err);
  CountTable table = cfg.kind == "polygons"
                         ? count_saps(map, cfg.n, cfg.workers)
                         : count_saws(map, cfg.n, cfg.workers);
  if (cfg.format == "json")
    emit(cfg, out, counts_json(table, meta_for(cfg, radius)));
  else
    emit(cfg, out, counts_csv(table));
  return 0;
}

int run_geometry(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg);
  int radius = cfg.radius >= 0 ? cfg.radius : cfg.n;
  auto map = build_map(cfg, radius);
  guard_horizon(cfg, err);
  std::vector<GeometryRow> rows;
  enumerate_saps(map, cfg.n, [&](const Sap& sap) {
    rows.push_back(geometry_row(analyze_sap(map, sap), map.params()));
  });

  long long residual_failures = 0, min_margin = 0;
  bool first = true;
  for (const auto& r : rows) {
    if (r.edges_enum_residual != 0) ++residual_failures;
    if (first || r.main_lemma_margin < min_margin) min_margin = r.main_lemma_margin;
    first = false;
  }

  if (cfg.format == "csv")
    emit(cfg, out, geometry_csv(rows));
  else if (cfg.format == "json")
    emit(cfg, out, geometry_summary_json(rows, meta_for(cfg, radius)));
  else {
    std::ostringstream os;
    os << "polygons through origin up to length " << cfg.n << ": " << rows.size()
       << "\nedge-count residual failures: " << residual_failures
       << "\nminimum isoperimetric margin: " << (rows.empty() ? 0 : min_margin)
       << "\n";
    emit(cfg, out, os.str());
  }
  if (residual_failures != 0 || (!rows.empty() && min_margin < 0)) {
    err << "geometry: isoperimetric check failed (residual failures "
        << residual_failures << ", min margin " << min_margin << ")\n";
    return 3;
  }
  return 0;
}

int run_displacement(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_n(cfg);
  int radius = cfg.radius >= 0 ? cfg.radius : cfg.n;
  auto map = build_map(cfg, radius);
  guard_horizon(cfg, err);
  auto hist = displacement_distribution(map, cfg.n, cfg.workers);
  if (cfg.format == "json")
    emit(cfg, out, histogram_json(hist, cfg.epsilon, meta_for(cfg, radius)));
  else if (cfg.format == "csv")
    emit(cfg, out, histogram_csv(hist));
  else {
    std::ostringstream os;
    os << "displacement of SAWs of length " << hist.n << " (total "
       << hist.total.str() << ")\n";
    for (std::size_t r = 0; r < hist.by_distance.size(); ++r)
      if (!hist.by_distance[r].is_zero())
        os << "  r=" << r << "  " << hist.by_distance[r].str() << "\n";
    os << "P(displacement >= " << format_sig(cfg.epsilon, 6)
       << " n) = " << format_sig(hist.prob_at_least(cfg.epsilon), 6) << "\n";
    emit(cfg, out, os.str());
  }
  return 0;
}

int run_eigen(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::pair<std::string, PerronResult>> rows;
  auto add = [&](const RecurrenceSystem& sys) {
    rows.emplace_back(sys.name, perron_root(sys));
  };
  if (cfg.system.empty()) {
    for (const auto& name : builtin_system_names()) add(builtin_system(name));
  } else if (cfg.system == "param") {
    add(parametric_system(cfg.param_d));
  } else {
    add(builtin_system(cfg.system));
  }
  if (cfg.format == "json")
    emit(cfg, out, eigen_json(rows, meta_for(cfg)));
  else if (cfg.format == "csv")
    emit(cfg, out, eigen_csv(rows));
  else {
    std::ostringstream os;
    for (const auto& [name, r] : rows)
      os << name << ": lambda = " << format_sig(r.lambda, 6) << "  (residual "
         << format_sig(r.residual, 3) << ", " << r.iterations << " iterations)\n";
    emit(cfg, out, os.str());
  }
  return 0;
}

int run_asymptotics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto colon = cfg.d_range.find(':');
  if (colon == std::string::npos)
    throw UsageError("--d-range: expected lo:hi, got '" + cfg.d_range + "'");
  long long lo = 0, hi = 0;
  try {
    lo = std::stoll(cfg.d_range.substr(0, colon));
    hi = std::stoll(cfg.d_range.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--d-range: expected lo:hi, got '" + cfg.d_range + "'");
  }
  auto rows = asymptotic_check(lo, hi);
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.bracket_ok;

  if (cfg.format == "json")
    emit(cfg, out, brackets_json(rows, meta_for(cfg)));
  else if (cfg.format == "csv")
    emit(cfg, out, brackets_csv(rows));
  else {
    std::ostringstream os;
    os << "root bracket (d-1-7/d, d-1) for d in [" << lo << "," << hi
       << "]: " << (all_ok ? "all certified" : "FAILURES PRESENT") << "\n";
    emit(cfg, out, os.str());
  }
  if (!all_ok) {
    err << "asymptotics: bracket failed for some d\n";
    return 3;
  }
  return 0;
}

int run_dump_map(const RunConfig& cfg, std::ostream& out) {
  int radius = cfg.radius >= 0 ? cfg.radius : 2;
  auto map = build_map(cfg, radius);
  emit(cfg, out, dump_map_json(map));
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact self-avoiding walk and polygon machinery on hyperbolic "
               "tessellations H(d,k)"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("-d", cfg.d, "vertex degree")->required();
    sub->add_option("-k", cfg.k, "face degree")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("-o,--output", cfg.output, "write to file instead of stdout");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "vertex budget for map builds");
    sub->add_option("--radius", cfg.radius, "override the map build radius");
    sub->add_flag("--force", cfg.force, "allow enumeration beyond the default horizon");
  };

  auto* bounds = app.add_subcommand("bounds", "connective constant bounds");
  add_params(bounds);
  add_common(bounds);

  auto* enumerate = app.add_subcommand("enumerate", "exact SAW/SAP counts");
  add_params(enumerate);
  add_common(enumerate);
  add_budget(enumerate);
  enumerate->add_option("-n", cfg.n, "maximum length")->required();
  enumerate->add_option("--kind", cfg.kind, "walks or polygons")
      ->check(CLI::IsMember({"walks", "polygons"}));

  auto* geometry = app.add_subcommand("geometry", "per-polygon interior checks");
  add_params(geometry);
  add_common(geometry);
  add_budget(geometry);
  geometry->add_option("-n", cfg.n, "maximum polygon length")->required();

  auto* displacement =
      app.add_subcommand("displacement", "endpoint distance distribution");
  add_params(displacement);
  add_common(displacement);
  add_budget(displacement);
  displacement->add_option("-n", cfg.n, "walk length")->required();
  displacement->add_option("--epsilon", cfg.epsilon, "displacement fraction");

  auto* eigen = app.add_subcommand("eigen", "recurrence system eigenvalues");
  add_common(eigen);
  eigen->add_option("--system", cfg.system, "h73, h45, h37, h38 or param");
  eigen->add_option("--param-d", cfg.param_d, "degree for --system param");

  auto* asym = app.add_subcommand("asymptotics", "root brackets of the "
                                  "degree-parametric characteristic polynomial");
  add_common(asym);
  asym->add_option("--d-range", cfg.d_range, "lo:hi (lo >= 7)");

  auto* dump = app.add_subcommand("dump-map", "JSON dump of a built map");
  add_params(dump);
  add_common(dump);
  add_budget(dump);

  try {
    // CLI11's vector overload consumes arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "bounds") return run_bounds(cfg, out);
    if (cfg.subcommand == "enumerate") return run_enumerate(cfg, out, err);
    if (cfg.subcommand == "geometry") return run_geometry(cfg, out, err);
    if (cfg.subcommand == "displacement") return run_displacement(cfg, out, err);
    if (cfg.subcommand == "eigen") return run_eigen(cfg, out);
    if (cfg.subcommand == "asymptotics") return run_asymptotics(cfg, out, err);
    if (cfg.subcommand == "dump-map") return run_dump_map(cfg, out);
    err << "usage error: unknown subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hsaw::cli
