#include "hcent/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hcent/errors.hpp"

namespace hcent {

namespace {

std::uint64_t choose(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

void require_even(int n) {
    if (n < 2 || n % 2 != 0) {
        throw ArgumentError("equal bipartitions need an even vertex count >= 2, got " + std::to_string(n));
    }
    if (n > kMaxCensusVertices) {
        throw SizeError("census supports at most " + std::to_string(kMaxCensusVertices) + " vertices");
    }
}

}  // namespace

std::uint64_t equal_bipartition_count(int n) {
    require_even(n);
    return choose(n - 1, n / 2 - 1);
}

std::vector<int> unrank_equal_bipartition(int n, std::uint64_t rank) {
    const std::uint64_t total = equal_bipartition_count(n);
    if (rank >= total) throw ArgumentError("bipartition rank out of range");
    const int k = n / 2;
    std::vector<int> side{0};
    side.reserve(static_cast<std::size_t>(k));
    int next = 1;
    for (int slot = 1; slot < k; ++slot) {
        // Combinations whose current slot holds `next`: choose the rest from (next, n).
        for (;; ++next) {
            const std::uint64_t block = choose(n - 1 - next, k - 1 - slot);
            if (rank < block) break;
            rank -= block;
        }
        side.push_back(next++);
    }
    return side;
}

std::uint64_t rank_equal_bipartition(int n, std::span<const int> side_a) {
    require_even(n);
    const int k = n / 2;
    if (static_cast<int>(side_a.size()) != k || side_a.front() != 0 ||
        !std::is_sorted(side_a.begin(), side_a.end()) || side_a.back() >= n ||
        std::adjacent_find(side_a.begin(), side_a.end()) != side_a.end()) {
        throw ArgumentError("side A must be a sorted size-n/2 subset containing vertex 0");
    }
    std::uint64_t rank = 0;
    int next = 1;
    for (int slot = 1; slot < k; ++slot) {
        for (; next < side_a[static_cast<std::size_t>(slot)]; ++next) {
            rank += choose(n - 1 - next, k - 1 - slot);
        }
        ++next;
    }
    return rank;
}

bool next_equal_bipartition(int n, std::vector<int>& side_a) {
    const int k = static_cast<int>(side_a.size());
    // Slot i may hold at most n - k + i.
    int i = k - 1;
    while (i >= 1 && side_a[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 1) return false;
    ++side_a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
        side_a[static_cast<std::size_t>(j)] = side_a[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

void for_each_equal_bipartition(int n, const std::function<void(std::span<const int>)>& visit) {
    require_even(n);
    std::vector<int> side(static_cast<std::size_t>(n / 2));
    std::iota(side.begin(), side.end(), 0);
    do {
        visit(side);
    } while (next_equal_bipartition(n, side));
}

std::vector<Bipartition> equal_bipartitions(int n) {
    std::vector<Bipartition> out;
    out.reserve(static_cast<std::size_t>(equal_bipartition_count(n)));
    for_each_equal_bipartition(n, [&](std::span<const int> side) {
        out.push_back(Bipartition::from_side(n, {side.begin(), side.end()}));
    });
    return out;
}

CensusReport group_into_classes(int n, std::vector<RankedEntropy> values, const CensusOptions& options) {
    if (!(options.tolerance > 0.0)) throw ArgumentError("census tolerance must be positive");
    if (values.empty()) throw ArgumentError("census has no partitions");
    std::sort(values.begin(), values.end(), [](const RankedEntropy& a, const RankedEntropy& b) {
        if (a.entropy != b.entropy) return a.entropy > b.entropy;
        return a.rank < b.rank;
    });

    CensusReport report;
    report.n = n;
    report.log_base = options.log_base;
    report.tolerance = options.tolerance;
    report.total_partitions = equal_bipartition_count(n);
    report.evaluated_partitions = values.size();
    report.sampled = options.sample_size > 0;

    const double tol = options.tolerance;
    std::size_t begin = 0;
    auto close_class = [&](std::size_t end) {
        CensusClass cls;
        std::vector<std::uint64_t> ranks;
        ranks.reserve(end - begin);
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            sum += values[i].entropy;
            ranks.push_back(values[i].rank);
        }
        std::sort(ranks.begin(), ranks.end());
        ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
        cls.entropy = sum / static_cast<double>(end - begin);
        cls.multiplicity = end - begin;
        for (std::size_t r = 0; r < ranks.size() && r < options.representative_cap; ++r) {
            cls.representatives.push_back(unrank_equal_bipartition(n, ranks[r]));
        }
        report.classes.push_back(std::move(cls));
        begin = end;
    };

    constexpr std::size_t kMaxWarnings = 10;
    std::size_t ambiguous = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double gap = values[i - 1].entropy - values[i].entropy;
        if (gap > tol / 10.0 && gap <= tol * 10.0) {
            if (++ambiguous <= kMaxWarnings) {
                report.warnings.push_back("ambiguous class boundary: gap " + format_real(gap) +
                                          " between entropies " + format_real(values[i - 1].entropy) +
                                          " and " + format_real(values[i].entropy) +
                                          " is within a factor 10 of tolerance " + format_real(tol));
            }
        }
        if (gap > tol) close_class(i);
    }
    close_class(values.size());
    if (ambiguous > kMaxWarnings) {
        report.warnings.push_back(std::to_string(ambiguous - kMaxWarnings) +
                                  " further ambiguous boundaries not listed");
    }
    report.max_class = 0;
    report.min_class = report.classes.size() - 1;
    return report;
}

namespace {

std::vector<std::uint64_t> draw_sample(int n, const CensusOptions& options) {
    std::mt19937_64 rng(options.seed);
    const int k = n / 2;
    std::vector<int> pool(static_cast<std::size_t>(n - 1));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::uint64_t> ranks;
    ranks.reserve(options.sample_size);
    for (std::uint64_t s = 0; s < options.sample_size; ++s) {
        // Partial Fisher-Yates over 1..n-1.
        for (int i = 0; i < k - 1; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 2);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
        }
        std::vector<int> side{0};
        side.insert(side.end(), pool.begin(), pool.begin() + (k - 1));
        std::sort(side.begin(), side.end());
        ranks.push_back(rank_equal_bipartition(n, side));
    }
    return ranks;
}

void require_census_input(const Graph& graph, double g, const CensusOptions& options) {
    require_even(graph.vertex_count());
    if (!(g >= 0.0)) throw ArgumentError("census coupling g must be non-negative");
    if (!(options.tolerance > 0.0)) throw ArgumentError("census tolerance must be positive");
    if (options.threads < 1) throw ArgumentError("thread count must be positive");
    if (options.sample_size == 0 && equal_bipartition_count(graph.vertex_count()) > kMaxExhaustivePartitions) {
        throw SizeError("exhaustive census over " +
                        std::to_string(equal_bipartition_count(graph.vertex_count())) +
                        " partitions is too large; use sampling");
    }
}

}  // namespace

CensusReport entropy_census(const Graph& graph, double g, const CensusOptions& options) {
    require_census_input(graph, g, options);
    const int n = graph.vertex_count();
    const GaussianGroundState state(potential_matrix(graph, g).matrix());

    std::vector<RankedEntropy> values;
    if (options.sample_size > 0) {
        const std::vector<std::uint64_t> ranks = draw_sample(n, options);
        values.resize(ranks.size());
        const auto count = static_cast<std::int64_t>(ranks.size());
#pragma omp parallel for schedule(static) num_threads(options.threads)
        for (std::int64_t i = 0; i < count; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const std::vector<int> side = unrank_equal_bipartition(n, ranks[idx]);
            values[idx] = {state.entropy(side, options.log_base), ranks[idx]};
        }
    } else {
        const std::uint64_t total = equal_bipartition_count(n);
        values.resize(total);
        // Fixed chunking keeps the work split independent of the thread count.
        constexpr std::uint64_t kChunk = 256;
        const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(dynamic) num_threads(options.threads)
        for (std::int64_t c = 0; c < chunks; ++c) {
            const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk;
            const std::uint64_t last = std::min(total, first + kChunk);
            std::vector<int> side = unrank_equal_bipartition(n, first);
            for (std::uint64_t r = first; r < last; ++r) {
                values[r] = {state.entropy(side, options.log_base), r};
                next_equal_bipartition(n, side);
            }
        }
    }
    CensusReport report = group_into_classes(n, std::move(values), options);
    report.g = g;
    return report;
}

CensusReport entropy_census_reference(const Graph& graph, double g, const CensusOptions& options) {
    require_census_input(graph, g, options);
    const int n = graph.vertex_count();
    const Matrix v = potential_matrix(graph, g).matrix();

    std::vector<RankedEntropy> values;
    if (options.sample_size > 0) {
        for (std::uint64_t rank : draw_sample(n, options)) {
            const std::vector<int> side = unrank_equal_bipartition(n, rank);
            values.push_back({entropy_oracle_symplectic(v, side, options.log_base), rank});
        }
    } else {
        std::uint64_t rank = 0;
        for_each_equal_bipartition(n, [&](std::span<const int> side) {
            values.push_back({entropy_oracle_symplectic(v, side, options.log_base), rank++});
        });
    }
    CensusReport report = group_into_classes(n, std::move(values), options);
    report.g = g;
    return report;
}

ExtremalPartitions extremal_partitions(const CensusReport& report) {
    if (report.classes.empty()) throw ArgumentError("census report is empty");
    return {report.classes.at(report.min_class).representatives,
            report.classes.at(report.max_class).representatives};
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round_significant(double x) { return std::stod(format_real(x)); }

std::string log_base_name(LogBase base) { return base == LogBase::two ? "2" : "e"; }

nlohmann::json to_json(const CensusReport& report) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : report.classes) {
        classes.push_back({{"entropy", round_significant(cls.entropy)},
                           {"multiplicity", cls.multiplicity},
                           {"representatives", cls.representatives}});
    }
    nlohmann::json j = {
        {"n", report.n},
        {"g", round_significant(report.g)},
        {"logBase", log_base_name(report.log_base)},
        {"tolerance", round_significant(report.tolerance)},
        {"totalPartitions", report.total_partitions},
        {"classes", std::move(classes)},
        {"minClass", report.min_class},
        {"maxClass", report.max_class},
        {"warnings", report.warnings},
    };
    if (report.sampled) {
        j["sampled"] = true;
        j["evaluatedPartitions"] = report.evaluated_partitions;
    }
    return j;
}

void write_csv(const CensusReport& report, std::ostream& out) {
    out << "class,entropy,multiplicity,representatives\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const auto& cls = report.classes[i];
        out << i << ',' << format_real(cls.entropy) << ',' << cls.multiplicity << ",\"";
        for (std::size_t r = 0; r < cls.representatives.size(); ++r) {
            if (r) out << ';';
            const auto& side = cls.representatives[r];
            for (std::size_t v = 0; v < side.size(); ++v) out << (v ? " " : "") << side[v];
        }
        out << "\"\n";
    }
}

}  // namespace hcent
