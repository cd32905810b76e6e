#include "hsaw/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hsaw {

using ordered_json = nlohmann::ordered_json;

double round_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::uint64_t fnv1a_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

constexpr int kJsonDigits = 12;
constexpr int kTableDigits = 6;

ordered_json meta_json(const ReportMeta& meta) {
  ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["d"] = meta.d;
  j["k"] = meta.k;
  if (meta.radius >= 0)
    j["radius"] = meta.radius;
  else
    j["radius"] = nullptr;
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a_hash(meta.config)));
  j["config_hash"] = hash;
  return j;
}

double sig(double v) { return round_sig(v, kJsonDigits); }

const char* kind_name(CountTable::Kind kind) {
  switch (kind) {
    case CountTable::Kind::saw: return "walks";
    case CountTable::Kind::sap: return "polygons";
    case CountTable::Kind::saw_to_vertex: return "walks_to_vertex";
  }
  return "?";
}

}  // namespace

std::string bounds_json(const BoundsReport& rep, const ReportMeta& meta) {
  ordered_json j = meta_json(meta);
  j["h"] = sig(rep.h);
  j["R_upper"] = sig(rep.R_upper);
  if (rep.mu_p2_upper)
    j["mu_p2_upper"] = sig(*rep.mu_p2_upper);
  else
    j["mu_p2_upper"] = nullptr;
  j["mu_p_upper_mixed"] = {{"value", sig(rep.mu_p_upper_mixed.value)},
                           {"p_star", sig(rep.mu_p_upper_mixed.p_star)}};
  if (rep.mu_p_upper_deg3)
    j["mu_p_upper_deg3"] = sig(*rep.mu_p_upper_deg3);
  else
    j["mu_p_upper_deg3"] = nullptr;
  j["mu_p_lower"] = {{"num", rep.mu_p_lower.num},
                     {"den", rep.mu_p_lower.den},
                     {"value", sig(rep.mu_p_lower.value())}};
  if (rep.mu_w_lower_closed.value)
    j["mu_w_lower_closed"] = {{"value", sig(*rep.mu_w_lower_closed.value)},
                              {"rule", rep.mu_w_lower_closed.rule}};
  else
    j["mu_w_lower_closed"] = {{"value", nullptr},
                              {"rule", rep.mu_w_lower_closed.rule}};
  if (rep.mu_w_lower_eigen)
    j["mu_w_lower_eigen"] = sig(*rep.mu_w_lower_eigen);
  else
    j["mu_w_lower_eigen"] = nullptr;
  j["mu_w_upper"] = sig(rep.mu_w_upper);
  j["verdicts"] = {{"mu_p_lt_mu_w", rep.verdict_mu_p_lt_mu_w},
                   {"exponent_condition", rep.verdict_exponent_condition}};
  return j.dump(2) + "\n";
}

namespace {

std::string opt_str(const std::optional<double>& v, int digits) {
  return v ? format_sig(*v, digits) : std::string("");
}

}  // namespace

std::string bounds_csv(const BoundsReport& rep) {
  std::ostringstream os;
  os << "d,k,h,R_upper,mu_p2_upper,mu_p_upper_mixed,p_star,mu_p_upper_deg3,"
        "mu_p_lower,mu_w_lower_closed,closed_rule,mu_w_lower_eigen,mu_w_upper,"
        "mu_p_lt_mu_w,exponent_condition\n";
  os << rep.params.d << ',' << rep.params.k << ','
     << format_sig(rep.h, kJsonDigits) << ','
     << format_sig(rep.R_upper, kJsonDigits) << ','
     << opt_str(rep.mu_p2_upper, kJsonDigits) << ','
     << format_sig(rep.mu_p_upper_mixed.value, kJsonDigits) << ','
     << format_sig(rep.mu_p_upper_mixed.p_star, kJsonDigits) << ','
     << opt_str(rep.mu_p_upper_deg3, kJsonDigits) << ','
     << format_sig(rep.mu_p_lower.value(), kJsonDigits) << ','
     << opt_str(rep.mu_w_lower_closed.value, kJsonDigits) << ','
     << rep.mu_w_lower_closed.rule << ','
     << opt_str(rep.mu_w_lower_eigen, kJsonDigits) << ','
     << format_sig(rep.mu_w_upper, kJsonDigits) << ','
     << (rep.verdict_mu_p_lt_mu_w ? "true" : "false") << ','
     << (rep.verdict_exponent_condition ? "true" : "false") << '\n';
  return os.str();
}

std::string bounds_table(const BoundsReport& rep) {
  std::ostringstream os;
  auto line = [&](const char* name, const std::string& v) {
    os << "  " << name;
    for (std::size_t i = std::string(name).size(); i < 24; ++i) os << ' ';
    os << v << '\n';
  };
  os << "bounds for H(" << rep.params.d << "," << rep.params.k << ")\n";
  line("cheeger h", format_sig(rep.h, kTableDigits));
  line("R upper", format_sig(rep.R_upper, kTableDigits));
  line("mu_p2 upper", opt_str(rep.mu_p2_upper, kTableDigits));
  line("mu_p upper (mixed)", format_sig(rep.mu_p_upper_mixed.value, kTableDigits) +
                                 "  at p* = " +
                                 format_sig(rep.mu_p_upper_mixed.p_star, kTableDigits));
  if (rep.mu_p_upper_deg3)
    line("mu_p upper (deg 3)", format_sig(*rep.mu_p_upper_deg3, kTableDigits));
  line("mu_p lower", std::to_string(rep.mu_p_lower.num) + "/" +
                         std::to_string(rep.mu_p_lower.den) + " = " +
                         format_sig(rep.mu_p_lower.value(), kTableDigits));
  if (rep.mu_w_lower_closed.value)
    line("mu_w lower (closed)", format_sig(*rep.mu_w_lower_closed.value, kTableDigits) +
                                    "  [" + rep.mu_w_lower_closed.rule + "]");
  else
    line("mu_w lower (closed)", "n/a [" + rep.mu_w_lower_closed.rule + "]");
  line("mu_w lower (eigen)", opt_str(rep.mu_w_lower_eigen, kTableDigits));
  line("mu_w upper", format_sig(rep.mu_w_upper, kTableDigits));
  line("mu_p < mu_w", rep.verdict_mu_p_lt_mu_w ? "certified" : "not certified");
  line("exponent condition", rep.verdict_exponent_condition ? "certified"
                                                            : "not certified");
  return os.str();
}

std::string counts_csv(const CountTable& table) {
  std::ostringstream os;
  os << "n," << (table.kind == CountTable::Kind::sap ? "p_n" : "c_n") << '\n';
  for (int n = 0; n <= table.n_max(); ++n)
    os << n << ',' << table.values[n].str() << '\n';
  return os.str();
}

std::string counts_json(const CountTable& table, const ReportMeta& meta) {
  ordered_json j = meta_json(meta);
  j["kind"] = kind_name(table.kind);
  ordered_json counts = ordered_json::array();
  for (int n = 0; n <= table.n_max(); ++n)
    counts.push_back({{"n", n}, {"count", table.values[n].str()}});
  j["counts"] = counts;
  return j.dump(2) + "\n";
}

std::string histogram_csv(const DisplacementHistogram& hist) {
  std::ostringstream os;
  os << "n,r,count\n";
  for (std::size_t r = 0; r < hist.by_distance.size(); ++r)
    os << hist.n << ',' << r << ',' << hist.by_distance[r].str() << '\n';
  return os.str();
}

std::string histogram_json(const DisplacementHistogram& hist, double epsilon,
                           const ReportMeta& meta) {
  ordered_json j = meta_json(meta);
  j["n"] = hist.n;
  j["epsilon"] = sig(epsilon);
  j["total"] = hist.total.str();
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < hist.by_distance.size(); ++r)
    if (!hist.by_distance[r].is_zero())
      rows.push_back({{"r", r}, {"count", hist.by_distance[r].str()}});
  j["histogram"] = rows;
  j["prob_displacement_ge_eps_n"] = sig(hist.prob_at_least(epsilon));
  return j.dump(2) + "\n";
}

GeometryRow geometry_row(const SapGeometry& geom, TessellationParams params) {
  GeometryRow row;
  row.length = geom.length();
  row.interior = static_cast<long long>(geom.interior_vertices.size());
  row.chords = static_cast<long long>(geom.chords.size());
  row.boundary = static_cast<long long>(geom.inner_boundary.size());
  row.m = geom.directed_interior_edges_from_p;
  row.edges_enum_residual = check_edges_enum(geom, params);
  row.main_lemma_margin = check_main_lemma(geom, params);
  return row;
}

std::string geometry_csv(const std::vector<GeometryRow>& rows) {
  std::ostringstream os;
  os << "length,interior,chords,inner_boundary,m,edges_enum_residual,"
        "main_lemma_margin\n";
  for (const auto& r : rows)
    os << r.length << ',' << r.interior << ',' << r.chords << ','
       << r.boundary << ',' << r.m << ',' << r.edges_enum_residual << ','
       << r.main_lemma_margin << '\n';
  return os.str();
}

std::string geometry_summary_json(const std::vector<GeometryRow>& rows,
                                  const ReportMeta& meta) {
  ordered_json j = meta_json(meta);
  std::map<int, long long> min_margin;
  std::map<int, long long> count;
  long long residual_failures = 0;
  for (const auto& r : rows) {
    auto [it, fresh] = min_margin.try_emplace(r.length, r.main_lemma_margin);
    if (!fresh) it->second = std::min(it->second, r.main_lemma_margin);
    ++count[r.length];
    if (r.edges_enum_residual != 0) ++residual_failures;
  }
  j["polygons"] = rows.size();
  j["edges_enum_residual_failures"] = residual_failures;
  ordered_json per_length = ordered_json::array();
  for (auto [len, margin] : min_margin)
    per_length.push_back(
        {{"length", len}, {"count", count[len]}, {"min_margin", margin}});
  j["per_length"] = per_length;
  return j.dump(2) + "\n";
}

std::string eigen_csv(
    const std::vector<std::pair<std::string, PerronResult>>& rows) {
  std::ostringstream os;
  os << "system,lambda,residual,iterations\n";
  for (const auto& [name, r] : rows)
    os << name << ',' << format_sig(r.lambda, kJsonDigits) << ','
       << format_sig(r.residual, 3) << ',' << r.iterations << '\n';
  return os.str();
}

std::string eigen_json(
    const std::vector<std::pair<std::string, PerronResult>>& rows,
    const ReportMeta& meta) {
  ordered_json j = meta_json(meta);
  ordered_json arr = ordered_json::array();
  for (const auto& [name, r] : rows)
    arr.push_back({{"system", name},
                   {"lambda", sig(r.lambda)},
                   {"residual", sig(r.residual)},
                   {"iterations", r.iterations}});
  j["systems"] = arr;
  return j.dump(2) + "\n";
}

std::string brackets_csv(const std::vector<BracketRow>& rows) {
  std::ostringstream os;
  os << "d,sign_low,sign_high,bracket_ok\n";
  for (const auto& r : rows)
    os << r.d << ',' << r.sign_low << ',' << r.sign_high << ','
       << (r.bracket_ok ? "true" : "false") << '\n';
  return os.str();
}

std::string brackets_json(const std::vector<BracketRow>& rows,
                          const ReportMeta& meta) {
  ordered_json j = meta_json(meta);
  ordered_json arr = ordered_json::array();
  bool all_ok = true;
  for (const auto& r : rows) {
    all_ok = all_ok && r.bracket_ok;
    arr.push_back({{"d", r.d},
                   {"sign_low", r.sign_low},
                   {"sign_high", r.sign_high},
                   {"bracket_ok", r.bracket_ok}});
  }
  j["all_ok"] = all_ok;
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

std::string dump_map_json(const PlanarMap& map) {
  ordered_json j;
  j["d"] = map.degree();
  j["k"] = map.face_degree();
  j["radius"] = map.radius();
  ordered_json verts = ordered_json::array();
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    ordered_json rot = ordered_json::array();
    for (VertexId w : map.rotation(v)) rot.push_back(w);
    verts.push_back({{"id", v}, {"layer", map.layer(v)}, {"rotation", rot}});
  }
  j["vertices"] = verts;
  ordered_json faces = ordered_json::array();
  for (FaceId f = 0; f < map.face_count(); ++f) {
    ordered_json fv = ordered_json::array();
    for (VertexId v : map.face_vertices(f)) fv.push_back(v);
    faces.push_back(fv);
  }
  j["faces"] = faces;
  return j.dump() + "\n";
}

}  // namespace hsaw
