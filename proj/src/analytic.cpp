#include "hcent/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcent/errors.hpp"
#include "hcent/linalg.hpp"
#include "hcent/stratify.hpp"

namespace hcent {

namespace {

void require_positive_coupling(double g) {
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw ArgumentError("coupling g must be positive and finite, got " + std::to_string(g));
    }
}

void require_dimension(int d) {
    if (d < 1 || d > kMaxHypercubeDim) {
        throw SizeError("hypercube dimension " + std::to_string(d) + " out of range");
    }
}

}  // namespace

QPolynomialSequence::QPolynomialSequence(int d_block, int max_degree) : d_block_(d_block) {
    if (d_block < 1) throw ArgumentError("d_block must be positive");
    if (max_degree < 0) throw ArgumentError("polynomial degree must be non-negative");
    coefficients_.push_back({1});
    if (max_degree >= 1) coefficients_.push_back({0, 1});
    for (int n = 2; n <= max_degree; ++n) {
        const auto& prev = coefficients_[static_cast<std::size_t>(n - 1)];
        const auto& prev2 = coefficients_[static_cast<std::size_t>(n - 2)];
        std::vector<std::int64_t> next(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t k = 0; k < prev.size(); ++k) next[k + 1] += prev[k];
        const std::int64_t w = omega(n - 1);
        for (std::size_t k = 0; k < prev2.size(); ++k) next[k] -= w * prev2[k];
        coefficients_.push_back(std::move(next));
    }
}

std::int64_t QPolynomialSequence::omega(int i) const {
    return static_cast<std::int64_t>(i) * (d_block_ - i + 1);
}

const std::vector<std::int64_t>& QPolynomialSequence::coefficients(int n) const {
    if (n < 0 || n > max_degree()) throw ArgumentError("polynomial degree out of range");
    return coefficients_[static_cast<std::size_t>(n)];
}

double QPolynomialSequence::evaluate(int n, double x) const {
    const auto& c = coefficients(n);
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

double q_polynomial(int n, double x, int d_block) {
    if (n < 0) throw ArgumentError("polynomial degree must be non-negative");
    if (d_block < 1) throw ArgumentError("d_block must be positive");
    double q_prev = 1.0;  // Q_0
    if (n == 0) return q_prev;
    double q = x;         // Q_1
    for (int k = 2; k <= n; ++k) {
        const double w = static_cast<double>(k - 1) * (d_block - (k - 1) + 1);
        const double next = x * q - w * q_prev;
        q_prev = q;
        q = next;
    }
    return q;
}

ModeSpectrum gamma_half_strata(int d, double g, LogBase base) {
    require_dimension(d);
    if (d % 2 == 0) throw SchemeError("half-strata cut needs odd d, got d = " + std::to_string(d));
    require_positive_coupling(g);
    const double x = d + 1.0 / (2.0 * g);

    ModeSpectrum spectrum;
    spectrum.log_base = base;
    for (const auto& block : block_table(d)) {
        const int d_block = block.dim - 1;
        const int n = block.dim / 2;
        const double denom = q_polynomial(n, x, d_block);
        if (denom == 0.0) throw SingularityError("Q_n(x) vanished in half-strata recursion");
        spectrum.add(n * q_polynomial(n - 1, x, d_block) / denom, block.degeneracy);
    }
    return spectrum;
}

ModeSpectrum gamma_identity_cut(int d, double g, LogBase base) {
    require_dimension(d);
    require_positive_coupling(g);
    ModeSpectrum spectrum;
    spectrum.log_base = base;
    // Eigenvalues of the H(d-1,2) halves: K_1(i) = (d-1) - 2i with multiplicity C(d-1, i).
    for (int i = 0; i <= d - 1; ++i) {
        const double lambda = (d - 1) - 2.0 * i;
        spectrum.add(2.0 * g / (1.0 + 2.0 * g * (d - lambda)), binomial(d - 1, i));
    }
    return spectrum;
}

std::vector<double> parity_block_singular_values(int dim, int first_stratum) {
    const Matrix block = spin_x_block(dim);
    std::vector<int> even, odd;
    for (int p = 0; p < dim; ++p) ((first_stratum + p) % 2 == 0 ? even : odd).push_back(p);
    std::vector<double> out;
    if (!even.empty() && !odd.empty()) {
        Eigen::JacobiSVD<Matrix> svd(linalg::submatrix(block, even, odd));
        for (double s : svd.singularValues()) out.push_back(s);
    }
    return out;
}

ModeSpectrum gamma_parity_cut(int d, double g, LogBase base) {
    require_dimension(d);
    require_positive_coupling(g);
    const double scale = 2.0 * g / (1.0 + 2.0 * g * d);

    ModeSpectrum spectrum;
    spectrum.log_base = base;
    const BlockTable table = block_table(d);
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& block = table[k];
        const int first = static_cast<int>(k);
        int even_count = 0;
        for (int p = 0; p < block.dim; ++p) even_count += (first + p) % 2 == 0 ? 1 : 0;
        const std::vector<double> sigma = parity_block_singular_values(block.dim, first);
        for (double s : sigma) spectrum.add(scale * s, block.degeneracy);
        for (int z = static_cast<int>(sigma.size()); z < even_count; ++z) spectrum.add(0.0, block.degeneracy);
    }
    return spectrum;
}

ModeSpectrum analytic_modes(AnalyticScheme scheme, int d, double g, LogBase base) {
    switch (scheme) {
        case AnalyticScheme::half_strata: return gamma_half_strata(d, g, base);
        case AnalyticScheme::identity_cut: return gamma_identity_cut(d, g, base);
        case AnalyticScheme::parity_cut: return gamma_parity_cut(d, g, base);
    }
    throw ArgumentError("unknown analytic scheme");
}

double analytic_entropy(AnalyticScheme scheme, int d, double g, LogBase base) {
    require_dimension(d);
    if (scheme == AnalyticScheme::half_strata && d % 2 == 0) {
        throw SchemeError("half-strata cut needs odd d, got d = " + std::to_string(d));
    }
    if (g < 0.0) throw ArgumentError("coupling g must be non-negative");
    if (g == 0.0) return 0.0;
    return analytic_modes(scheme, d, g, base).total_entropy();
}

NamedCut named_cut_for(AnalyticScheme scheme) {
    switch (scheme) {
        case AnalyticScheme::half_strata: return {CutScheme::half_strata, 0};
        case AnalyticScheme::identity_cut: return {CutScheme::coordinate, 0};
        case AnalyticScheme::parity_cut: return {CutScheme::parity, 0};
    }
    throw ArgumentError("unknown analytic scheme");
}

}  // namespace hcent
