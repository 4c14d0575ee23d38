#include "percolation/io.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <vector>

#include <json.hpp>

namespace percolation {

void write_cover(std::ostream& out, const Cover& cover, const Graph& g) {
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < cover.node_sets.size(); ++c) {
        labels.clear();
        for (NodeId v : cover.node_sets[c]) labels.push_back(g.label(v));
        std::sort(labels.begin(), labels.end());
        out << cover.k << '\t' << c << '\t';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i > 0) out << ' ';
            out << labels[i];
        }
        out << '\n';
    }
}

namespace {

void write_stats_row(std::ostream& out, const StatsRow& row) {
    out << row.network << ',' << row.k << ',' << row.algorithm << ','
        << row.stats.assigned_cliques << ',' << row.stats.components << ','
        << row.stats.successful_tests << ',' << row.stats.failed_tests << ','
        << row.stats.candidate_pairs << ',' << std::fixed << std::setprecision(3)
        << row.stats.elapsed_ms << std::defaultfloat << ','
        << row.stats.internal_probes << ',' << row.stats.leaf_tests << ','
        << row.stats.bloom_bits_total << '\n';
}

}  // namespace

void write_stats_csv(std::ostream& out, std::span<const StatsRow> rows) {
    out << kStatsCsvHeader << '\n';
    for (const auto& row : rows) write_stats_row(out, row);
}

void write_histogram_csv(std::ostream& out,
                         const std::map<std::int32_t, std::uint64_t>& histogram) {
    out << "size,count\n";
    for (const auto& [size, count] : histogram)
        out << size << ',' << count << '\n';
}

void write_sweep_csv(std::ostream& out, const std::string& network,
                     const SweepReport& report) {
    out << kStatsCsvHeader << '\n';
    for (const auto& row : report.rows)
        write_stats_row(out, {network, row.k, row.algorithm, row.stats});
}

void write_sweep_json(std::ostream& out, const std::string& network,
                      const SweepReport& report, const Graph& g) {
    nlohmann::json doc;
    doc["network"] = network;
    doc["k_min"] = report.k_min;
    doc["k_max"] = report.k_max;
    doc["ok"] = report.ok();

    auto labelled = [&g](const std::vector<std::vector<NodeId>>& families) {
        std::vector<std::vector<std::string>> out_families;
        for (const auto& family : families) {
            std::vector<std::string> labels;
            for (NodeId v : family) labels.push_back(g.label(v));
            std::sort(labels.begin(), labels.end());
            out_families.push_back(std::move(labels));
        }
        return out_families;
    };

    doc["runs"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        doc["runs"].push_back({
            {"k", row.k},
            {"algorithm", row.algorithm},
            {"cliques", row.stats.assigned_cliques},
            {"components", row.stats.components},
            {"successful_tests", row.stats.successful_tests},
            {"failed_tests", row.stats.failed_tests},
            {"candidate_pairs", row.stats.candidate_pairs},
            {"internal_probes", row.stats.internal_probes},
            {"leaf_tests", row.stats.leaf_tests},
            {"elapsed_ms", row.stats.elapsed_ms},
        });
    }
    doc["mismatches"] = nlohmann::json::array();
    for (const auto& mismatch : report.mismatches) {
        doc["mismatches"].push_back({
            {"k", mismatch.k},
            {"algorithm_a", mismatch.algorithm_a},
            {"algorithm_b", mismatch.algorithm_b},
            {"only_in_a", labelled(mismatch.only_in_a)},
            {"only_in_b", labelled(mismatch.only_in_b)},
        });
    }
    out << doc.dump(2) << '\n';
}

}  // namespace percolation
