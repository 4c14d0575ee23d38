#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "percolation/engines.hpp"
#include "percolation/graph.hpp"
#include "percolation/harness.hpp"

namespace percolation {

/// One line per community: "k<TAB>community_id<TAB>labels", labels space
/// separated and lexicographically sorted. Byte-identical for identical
/// covers and label maps.
void write_cover(std::ostream& out, const Cover& cover, const Graph& g);

struct StatsRow {
    std::string network;
    std::int32_t k = 0;
    std::string algorithm;
    RunStats stats;
};

inline constexpr const char* kStatsCsvHeader =
    "network,k,algorithm,cliques,components,successful_tests,failed_tests,"
    "candidate_pairs,elapsed_ms,internal_probes,leaf_tests,bloom_bits_total";

void write_stats_csv(std::ostream& out, std::span<const StatsRow> rows);

/// "size,count" per line, ascending size.
void write_histogram_csv(std::ostream& out,
                         const std::map<std::int32_t, std::uint64_t>& histogram);

/// Stats rows of a sweep in the stats CSV schema.
void write_sweep_csv(std::ostream& out, const std::string& network,
                     const SweepReport& report);

/// JSON summary: generator/network name, k range, per-run stats and any
/// mismatch witnesses (as external labels).
void write_sweep_json(std::ostream& out, const std::string& network,
                      const SweepReport& report, const Graph& g);

}  // namespace percolation
