#pragma once

#include <cstdint>
#include <vector>

#include "hcent/linalg.hpp"

namespace hcent {

/// Exact binomial coefficient; zero when k < 0 or k > n.
std::int64_t binomial(int n, int k);

/// One angular-momentum block of the stratified adjacency matrix.
struct BlockEntry {
    int dim = 0;
    std::int64_t degeneracy = 0;

    bool operator==(const BlockEntry&) const = default;
};

using BlockTable = std::vector<BlockEntry>;

struct SpectrumEntry {
    double eigenvalue = 0.0;
    std::int64_t multiplicity = 0;

    bool operator==(const SpectrumEntry&) const = default;
};

using SpectrumTable = std::vector<SpectrumEntry>;

/// Spin-x matrix for spin m/2 with m = dim - 1: zero diagonal,
/// off-diagonals sqrt(k (m - k + 1)), k = 1..m.
Matrix spin_x_block(int dim);

/// Blocks (d + 1 - 2k, C(d,k) - C(d,k-1)) for k = 0..floor(d/2), largest first.
BlockTable block_table(int d);

/// Block-diagonal 2^d x 2^d adjacency in the stratification basis,
/// blocks ordered by decreasing dimension with degenerate copies adjacent.
Matrix stratified_adjacency(int d);

/// K_l(x) = sum_i C(x,i) C(d-x,l-i) (-1)^i in exact integer arithmetic.
std::int64_t krawtchouk(int l, int x, int d);

/// Adjacency eigenvalues d - 2i with multiplicity C(d,i), descending.
SpectrumTable hypercube_spectrum(int d);

}  // namespace hcent
