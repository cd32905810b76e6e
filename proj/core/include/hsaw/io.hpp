#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hsaw/bounds.hpp"
#include "hsaw/enumeration.hpp"
#include "hsaw/planar_map.hpp"
#include "hsaw/sap_geometry.hpp"
#include "hsaw/transfer.hpp"

namespace hsaw {

inline constexpr std::string_view kToolName = "hsaw";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Stable float policy: reports carry 12 significant digits, tables display 6.
double round_sig(double v, int digits);
std::string format_sig(double v, int digits);

std::uint64_t fnv1a_hash(std::string_view s);

// Reproducibility header embedded in every report.
struct ReportMeta {
  int d = 0;
  int k = 0;
  int radius = -1;  // -1 when no map is involved
  std::string config;  // canonical flag string; hashed into the report
};

std::string bounds_json(const BoundsReport& rep, const ReportMeta& meta);
std::string bounds_csv(const BoundsReport& rep);
std::string bounds_table(const BoundsReport& rep);

std::string counts_csv(const CountTable& table);
std::string counts_json(const CountTable& table, const ReportMeta& meta);

std::string histogram_csv(const DisplacementHistogram& hist);
std::string histogram_json(const DisplacementHistogram& hist, double epsilon,
                           const ReportMeta& meta);

struct GeometryRow {
  int length = 0;
  long long interior = 0;
  long long chords = 0;
  long long boundary = 0;
  long long m = 0;
  long long edges_enum_residual = 0;
  long long main_lemma_margin = 0;
};

GeometryRow geometry_row(const SapGeometry& geom, TessellationParams params);
std::string geometry_csv(const std::vector<GeometryRow>& rows);
// Summary with per-length minimum margins and residual failure count.
std::string geometry_summary_json(const std::vector<GeometryRow>& rows,
                                  const ReportMeta& meta);

std::string eigen_csv(const std::vector<std::pair<std::string, PerronResult>>& rows);
std::string eigen_json(const std::vector<std::pair<std::string, PerronResult>>& rows,
                       const ReportMeta& meta);

std::string brackets_csv(const std::vector<BracketRow>& rows);
std::string brackets_json(const std::vector<BracketRow>& rows,
                          const ReportMeta& meta);

// Whole-map dump: {d, k, radius, vertices:[{id, layer, rotation:[ids]}],
// faces:[[ids]]}.
std::string dump_map_json(const PlanarMap& map);

}  // namespace hsaw
