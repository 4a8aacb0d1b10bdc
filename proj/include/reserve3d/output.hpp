#pragma once

#include "reserve3d/chain_ladder.hpp"
#include "reserve3d/grid.hpp"
#include "reserve3d/monte_carlo.hpp"
#include "reserve3d/simulation.hpp"
#include "reserve3d/triangle.hpp"

#include <filesystem>
#include <optional>
#include <span>

namespace reserve3d {

// File formats. All numbers are written in shortest round-trip form.
//
//   distribution CSV   rank,value           rank is 1-based over the sorted sample
//   triangle CSV       origin,dev_0,...     unknown cells are empty fields
//   mean claim size    lag,k_0,...          empty where no claim is active
//   path CSV           year,lag,runoff,active,payments,paid   one line per cell
//   severities CSV     year,lag,runoff,amount                 one line per payment
//   comparison CSV     replicate,estimator,target,estimate,truth,error,status

void write_distribution_csv(const std::filesystem::path& path, const EmpiricalDistribution& dist);
void write_triangle_csv(const std::filesystem::path& path, const Triangle& tri);
void write_mean_claim_size_csv(const std::filesystem::path& path, const Grid2<std::optional<double>>& mcs);
void write_path_csv(const std::filesystem::path& path, const SimulationPath& sim);
void write_severities_csv(const std::filesystem::path& path, const SimulationPath& sim);
void write_summary_json(const std::filesystem::path& path, std::span<const RiskReport> reports,
                        std::uint64_t master_seed, std::size_t replicates);
void write_comparison_csv(const std::filesystem::path& path, const ComparisonTable& table);
void write_comparison_summary_csv(const std::filesystem::path& path, const ComparisonTable& table);

// Rebuilds a path from the files above. The severities file is optional.
SimulationPath read_path_csv(const std::filesystem::path& path_csv,
                             const std::optional<std::filesystem::path>& severities_csv, const ModelParams& params);

} // namespace reserve3d
