#include "hcent/stratify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcent/errors.hpp"
#include "hcent/graph.hpp"

namespace hcent {

namespace {

void require_dimension(int d) {
    if (d < 1 || d > kMaxHypercubeDim) {
        throw SizeError("hypercube dimension " + std::to_string(d) + " outside [1, " +
                        std::to_string(kMaxHypercubeDim) + "]");
    }
}

}  // namespace

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    // r * (n - k + i) is divisible by i after each step.
    for (int i = 1; i <= k; ++i) r = static_cast<std::int64_t>(static_cast<__int128>(r) * (n - k + i) / i);
    return r;
}

Matrix spin_x_block(int dim) {
    if (dim < 1) throw ArgumentError("block dimension must be positive");
    linalg::require_dense_dim(dim);
    const int m = dim - 1;
    Matrix b = Matrix::Zero(dim, dim);
    for (int k = 1; k <= m; ++k) {
        const double c = std::sqrt(static_cast<double>(k) * (m - k + 1));
        b(k - 1, k) = c;
        b(k, k - 1) = c;
    }
    return b;
}

BlockTable block_table(int d) {
    require_dimension(d);
    BlockTable table;
    for (int k = 0; k <= d / 2; ++k) {
        const int dim = d + 1 - 2 * k;
        if (dim <= 0) break;
        table.push_back({dim, binomial(d, k) - binomial(d, k - 1)});
    }
    return table;
}

Matrix stratified_adjacency(int d) {
    require_dimension(d);
    const long n = 1L << d;
    linalg::require_dense_dim(n);
    Matrix a = Matrix::Zero(n, n);
    long offset = 0;
    for (const auto& entry : block_table(d)) {
        const Matrix block = spin_x_block(entry.dim);
        for (std::int64_t copy = 0; copy < entry.degeneracy; ++copy) {
            a.block(offset, offset, entry.dim, entry.dim) = block;
            offset += entry.dim;
        }
    }
    return a;
}

std::int64_t krawtchouk(int l, int x, int d) {
    if (d < 1) throw ArgumentError("krawtchouk: d must be positive");
    if (l < 0 || l > d) throw ArgumentError("krawtchouk: degree l outside [0, d]");
    if (x < 0 || x > d) throw ArgumentError("krawtchouk: point x outside [0, d]");
    std::int64_t sum = 0;
    for (int i = 0; i <= l; ++i) {
        const std::int64_t term = binomial(x, i) * binomial(d - x, l - i);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

SpectrumTable hypercube_spectrum(int d) {
    require_dimension(d);
    SpectrumTable table;
    for (int i = 0; i <= d; ++i) {
        table.push_back({static_cast<double>(krawtchouk(1, i, d)), binomial(d, i)});
    }
    return table;
}

}  // namespace hcent
