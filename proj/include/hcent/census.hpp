#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hcent/gaussian.hpp"
#include "hcent/graph.hpp"

namespace hcent {

/// Largest vertex count the census enumerator handles (subsets are 64-bit masks).
inline constexpr int kMaxCensusVertices = 64;
/// Exhaustive censuses above this many partitions must use sampling.
inline constexpr std::uint64_t kMaxExhaustivePartitions = 20'000'000;

// --- equal bipartition enumeration -------------------------------------------
//
// An equal bipartition of 0..n-1 is identified by its side A: a size-n/2 subset
// containing vertex 0. These subsets are ordered lexicographically as sorted
// index lists and numbered 0..C(n-1, n/2-1)-1.

/// C(n-1, n/2-1); throws ArgumentError for odd or non-positive n.
std::uint64_t equal_bipartition_count(int n);

/// Side A of the bipartition with lexicographic rank `rank`.
std::vector<int> unrank_equal_bipartition(int n, std::uint64_t rank);

/// Inverse of unrank_equal_bipartition.
std::uint64_t rank_equal_bipartition(int n, std::span<const int> side_a);

/// Advances `side_a` to its lexicographic successor; false after the last one.
bool next_equal_bipartition(int n, std::vector<int>& side_a);

/// Streams every equal bipartition's side A in lexicographic order.
void for_each_equal_bipartition(int n, const std::function<void(std::span<const int>)>& visit);

/// Materialized form of for_each_equal_bipartition.
std::vector<Bipartition> equal_bipartitions(int n);

// --- census ------------------------------------------------------------------

struct CensusOptions {
    double tolerance = 1e-9;
    LogBase log_base = LogBase::two;
    int threads = 1;
    std::size_t representative_cap = 16;
    /// 0 = exhaustive; otherwise draw this many bipartitions uniformly (with replacement).
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 20240229;
};

struct CensusClass {
    double entropy = 0.0;  // mean over members
    std::uint64_t multiplicity = 0;
    std::vector<std::vector<int>> representatives;  // side A, lexicographically smallest first
};

struct CensusReport {
    int n = 0;
    double g = 0.0;
    LogBase log_base = LogBase::two;
    double tolerance = 0.0;
    std::uint64_t total_partitions = 0;
    std::uint64_t evaluated_partitions = 0;  // == total_partitions unless sampled
    bool sampled = false;
    std::vector<CensusClass> classes;  // entropy descending
    std::size_t max_class = 0;
    std::size_t min_class = 0;
    std::vector<std::string> warnings;
};

/// Entropy of one equal bipartition together with its lexicographic rank.
struct RankedEntropy {
    double entropy = 0.0;
    std::uint64_t rank = 0;
};

/// Sorts descending and splits wherever consecutive entropies differ by more
/// than the tolerance. Gaps within a factor of 10 of the tolerance are flagged.
CensusReport group_into_classes(int n, std::vector<RankedEntropy> values, const CensusOptions& options);

/// Parallel census: contiguous rank ranges are evaluated by OpenMP workers
/// and merged by rank, so the report does not depend on `options.threads`.
CensusReport entropy_census(const Graph& graph, double g, const CensusOptions& options = {});

/// Serial reference census: plain lexicographic walk through the free-function oracle.
CensusReport entropy_census_reference(const Graph& graph, double g, const CensusOptions& options = {});

struct ExtremalPartitions {
    std::vector<std::vector<int>> min;
    std::vector<std::vector<int>> max;
};

ExtremalPartitions extremal_partitions(const CensusReport& report);

// --- serialization -----------------------------------------------------------

/// "%.12g" rendering used by every text and CSV output.
std::string format_real(double x);
/// x rounded to 12 significant digits, for JSON output.
double round_significant(double x);

std::string log_base_name(LogBase base);

nlohmann::json to_json(const CensusReport& report);
/// One row per class: index,entropy,multiplicity,representatives.
void write_csv(const CensusReport& report, std::ostream& out);

}  // namespace hcent
