#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hcent/errors.hpp"
#include "hcent/gaussian.hpp"
#include "hcent/graph.hpp"
#include "oracles.hpp"

using namespace hcent;

namespace {

// S(2/sqrt(3)) in bits, from 50-digit evaluation.
constexpr double kTwoNodeBits = 0.40141354608572873;

Matrix two_node() {
    Matrix v(2, 2);
    v << 2, -1, -1, 2;
    return v;
}

}  // namespace

TEST_CASE("high-precision oracle reproduces the frozen two-node entropy") {
    using oracle::Real;
    const Real nu = 2 / boost::multiprecision::sqrt(Real(3));
    CHECK(oracle::entropy_bits(nu) == doctest::Approx(kTwoNodeBits).epsilon(1e-15));
}

TEST_CASE("nu from gamma") {
    CHECK(nu_from_gamma(0.0) == 1.0);
    CHECK(nu_from_gamma(0.6) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(nu_from_gamma(-0.6) == nu_from_gamma(0.6));
    CHECK(nu_from_gamma(0.5) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(nu_from_gamma(1.0), SingularityError);
    CHECK_THROWS_AS(nu_from_gamma(1.0 - 1e-13), SingularityError);
    CHECK_NOTHROW(nu_from_gamma(1.0 - 1e-11));
}

TEST_CASE("entropy from nu") {
    CHECK(entropy_from_nu(1.0) == 0.0);
    CHECK(entropy_from_nu(3.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(entropy_from_nu(2.0 / std::sqrt(3.0)) == doctest::Approx(kTwoNodeBits).epsilon(1e-14));
    CHECK(entropy_from_nu(3.0, LogBase::e) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
    CHECK(entropy_from_nu(1.0 - 5e-11) == 0.0);
    CHECK_THROWS_AS(entropy_from_nu(1.0 - 1e-9), DomainError);
    CHECK_THROWS_AS(entropy_from_nu(0.5), DomainError);
}

TEST_CASE("entropy is strictly increasing in nu") {
    double prev = 0.0;
    for (double nu = 1.001; nu < 50.0; nu *= 1.05) {
        const double s = entropy_from_nu(nu);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("schmidt spectrum") {
    const auto pure = schmidt_spectrum(1.0, 10);
    CHECK(pure.probabilities[0] == 1.0);
    for (int n = 1; n <= 10; ++n) CHECK(pure.probabilities[static_cast<std::size_t>(n)] == 0.0);
    CHECK(pure.tail_mass == 0.0);

    const auto s3 = schmidt_spectrum(3.0, 20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(s3.probabilities[static_cast<std::size_t>(n)] == doctest::Approx(0.5 * std::pow(0.5, n)).epsilon(1e-15));
        CHECK(s3.lambdas[static_cast<std::size_t>(n)] ==
              doctest::Approx(std::sqrt(s3.probabilities[static_cast<std::size_t>(n)])));
    }
    CHECK(s3.tail_mass == doctest::Approx(std::pow(0.5, 21)));
    CHECK(std::is_sorted(s3.lambdas.rbegin(), s3.lambdas.rend()));

    // Direct summation oracle for <n>.
    const auto s125 = schmidt_spectrum(1.25, 50);
    double mean = 0.0;
    for (int n = 0; n <= 50; ++n) {
        mean += n * (2.0 / 2.25) * std::pow(0.25 / 2.25, n);
    }
    CHECK(s125.mean_occupation() == doctest::Approx(mean).epsilon(1e-14));
    CHECK(std::abs(s125.mean_occupation() - 0.125) <= 1e-12);
    CHECK_THROWS_AS(schmidt_spectrum(0.5, 10), DomainError);
    CHECK_THROWS_AS(schmidt_spectrum(2.0, 0), ArgumentError);
}

TEST_CASE("schmidt spectrum consistency") {
    for (double nu : {1.1, 1.5, 3.0}) {
        const auto s = schmidt_spectrum(nu, 200);
        CHECK(std::abs(s.total_probability() - 1.0) <= 1e-12);
        CHECK(std::abs(s.mean_occupation() - (nu - 1.0) / 2.0) <= 1e-10);
        // -sum p log p reproduces the closed-form entropy.
        double h = 0.0;
        for (double p : s.probabilities) h -= p > 0.0 ? p * std::log2(p) : 0.0;
        CHECK(h == doctest::Approx(entropy_from_nu(nu)).epsilon(1e-10));
    }
}

TEST_CASE("schur elimination") {
    SUBCASE("decoupled block is left in place") {
        Matrix v(3, 3);
        v << 2, 0, 0, 0, 3, -1, 0, -1, 4;
        const std::vector<int> block{0};
        CHECK(schur_eliminate(v, block) == v);
    }
    SUBCASE("scalar Schur complement") {
        const double a = 3.0, b = -0.7, c = 1.3;
        Matrix v(3, 3);
        v << a, b, 0, b, a, c, 0, c, a;
        const std::vector<int> block{2};
        const Matrix r = schur_eliminate(v, block);
        CHECK(r(1, 1) == doctest::Approx(a - c * c / a));
        CHECK(r(0, 1) == b);
        CHECK(r(1, 2) == 0.0);
        CHECK(r(2, 1) == 0.0);
        CHECK(r(2, 2) == a);
    }
    SUBCASE("top stratum of the H(3,2) half-strata chain") {
        const double g = 0.37;
        const double diag = 1.0 + 6.0 * g;
        Matrix v = Matrix::Zero(4, 4);
        v.diagonal().setConstant(diag);
        v(0, 1) = v(1, 0) = -2.0 * g * std::sqrt(3.0);
        v(1, 2) = v(2, 1) = -2.0 * g * 2.0;
        v(2, 3) = v(3, 2) = -2.0 * g * std::sqrt(3.0);
        const std::vector<int> block{0};
        const Matrix r = schur_eliminate(v, block);
        CHECK(r(1, 1) == doctest::Approx(diag - 12.0 * g * g / diag).epsilon(1e-14));
        CHECK(r(0, 1) == 0.0);
    }
    SUBCASE("singular block") {
        Matrix v(3, 3);
        v << 0, 1, 0, 1, 2, 0, 0, 0, 1;
        const std::vector<int> block{0};
        CHECK_THROWS_AS(schur_eliminate(v, block), EliminationError);
    }
}

TEST_CASE("local elimination leaves the cut entropy unchanged") {
    std::mt19937_64 rng(11);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(4, 12)(rng);
        const auto edges = oracle::random_graph(n, 0.25, rng);
        const double g = std::uniform_real_distribution<double>(0.05, 2.0)(rng);
        const Graph graph = Graph::from_edges(n, edges);
        const Matrix v = potential_matrix(graph, g).matrix();
        const auto side = oracle::random_subset(n, rng);
        const Bipartition cut = Bipartition::from_side(n, side);

        // Vertices of side A whose neighbours all lie in side A.
        std::vector<char> in_a(static_cast<std::size_t>(n), 0);
        for (int a : cut.side_a()) in_a[static_cast<std::size_t>(a)] = 1;
        std::vector<int> interior;
        for (int a : cut.side_a()) {
            bool inside = true;
            for (int b : graph.neighbors(a)) inside = inside && in_a[static_cast<std::size_t>(b)];
            if (inside) interior.push_back(a);
        }
        if (interior.empty()) continue;
        ++tested;
        const Matrix reduced = schur_eliminate(v, interior);
        CHECK(std::abs(entropy_of_bipartition(reduced, cut) - entropy_of_bipartition(v, cut)) <= 1e-9);
    }
    CHECK(tested >= 20);
}

TEST_CASE("gamma spectrum") {
    SUBCASE("product state") {
        Matrix v = Matrix::Identity(4, 4) * 2.0;
        v(0, 1) = v(1, 0) = -0.5;
        const auto s = gamma_spectrum(v, Bipartition::from_side(4, {0, 1}));
        for (const auto& m : s.modes) CHECK(m.gamma == doctest::Approx(0.0).scale(1.0));
        CHECK(s.total_entropy() == 0.0);
    }
    SUBCASE("two nodes") {
        const auto s = gamma_spectrum(two_node(), Bipartition::from_side(2, {0}));
        REQUIRE(s.modes.size() == 1);
        CHECK(s.modes[0].gamma == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("H(2,2) parity cut") {
        const double g = 0.25;
        const Matrix v = potential_matrix(hypercube_graph(2), g).matrix();
        const auto s = gamma_spectrum(v, named_bipartition(2, {CutScheme::parity}));
        const auto gammas = s.expanded_gammas();
        REQUIRE(gammas.size() == 2);
        CHECK(gammas[0] == doctest::Approx(4 * g / (1 + 4 * g)).epsilon(1e-14));
        CHECK(std::abs(gammas[1]) <= 1e-12);
    }
    SUBCASE("indefinite matrix is rejected") {
        Matrix v(2, 2);
        v << 1, -2, -2, 1;
        CHECK_THROWS_AS(gamma_spectrum(v, Bipartition::from_side(2, {0})), DefinitenessError);
    }
    SUBCASE("mismatched sizes") {
        CHECK_THROWS_AS(gamma_spectrum(two_node(), Bipartition::from_side(3, {0})), ArgumentError);
    }
}

TEST_CASE("entropy of bipartition on named cuts") {
    CHECK(entropy_of_bipartition(Matrix::Identity(8, 8), named_bipartition(3, {CutScheme::parity})) == 0.0);
    CHECK(entropy_of_bipartition(two_node(), Bipartition::from_side(2, {0})) ==
          doctest::Approx(kTwoNodeBits).epsilon(1e-14));

    // Per-block reduction of the H(3,2) parity cut.
    const double g = 0.5;
    using oracle::Real;
    const Real rg(g);
    const double expected = 3 * oracle::entropy_bits_from_gamma(2 * rg / (1 + 6 * rg)) +
                            oracle::entropy_bits_from_gamma(6 * rg / (1 + 6 * rg));
    const Matrix v = potential_matrix(hypercube_graph(3), g).matrix();
    CHECK(entropy_of_bipartition(v, named_bipartition(3, {CutScheme::parity})) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("symplectic oracle") {
    const std::vector<int> first{0};
    CHECK(entropy_oracle_symplectic(two_node(), first) == doctest::Approx(kTwoNodeBits).epsilon(1e-14));
    const GaussianGroundState state(two_node());
    CHECK(state.symplectic_eigenvalues(first)(0) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));

    const Matrix id = Matrix::Identity(6, 6);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        CHECK(entropy_oracle_symplectic(id, oracle::random_subset(6, rng)) == 0.0);
    }

    const std::vector<int> empty;
    const std::vector<int> all{0, 1};
    const std::vector<int> bad{0, 5};
    CHECK_THROWS_AS(entropy_oracle_symplectic(two_node(), empty), ArgumentError);
    CHECK_THROWS_AS(entropy_oracle_symplectic(two_node(), all), ArgumentError);
    CHECK_THROWS_AS(entropy_oracle_symplectic(two_node(), bad), ArgumentError);
}

TEST_CASE("hamiltonian kernel gives the exact oscillator ground state") {
    // V has eigenvalues 1 and 3, so 4 X_A P_A = (1 + 1/sqrt3)(1 + sqrt3)/4.
    const Matrix k = hamiltonian_kernel(two_node());
    CHECK((k * k).isApprox(two_node(), 1e-14));
    const double nu = std::sqrt((1.0 + 1.0 / std::sqrt(3.0)) * (1.0 + std::sqrt(3.0)) / 4.0);
    const std::vector<int> first{0};
    CHECK(GaussianGroundState(k).symplectic_eigenvalues(first)(0) == doctest::Approx(nu).epsilon(1e-14));
}

TEST_CASE("engine equivalence, purity symmetry and sign invariance on random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        const double g = std::uniform_real_distribution<double>(1e-3, 2.0)(rng);
        const auto edges = oracle::random_graph(n, 0.3, rng);
        const Matrix v = Matrix::Identity(n, n) + 2.0 * g * oracle::laplacian(n, edges);
        const Bipartition cut = Bipartition::from_side(n, oracle::random_subset(n, rng));

        const double svd = entropy_of_bipartition(v, cut);
        const double sym_a = entropy_oracle_symplectic(v, cut.side_a());
        const double sym_b = entropy_oracle_symplectic(v, cut.side_b());
        CHECK(std::abs(svd - sym_a) <= 1e-9);
        CHECK(std::abs(sym_a - sym_b) <= 1e-9);
        CHECK(std::abs(entropy_of_bipartition(v, cut.swapped()) - svd) <= 1e-9);

        Matrix flipped = v;
        for (int a : cut.side_a()) {
            for (int b : cut.side_b()) {
                flipped(a, b) = -flipped(a, b);
                flipped(b, a) = -flipped(b, a);
            }
        }
        CHECK(std::abs(entropy_of_bipartition(flipped, cut) - svd) <= 1e-9);
    }
}
