#include <gtest/gtest.h>

#include "support.hpp"

namespace si = spectral_indep;
using si::ComplexMatrix;
using si::Field;
using si::Graph;

namespace {

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (si::Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<si::Vertex> stack{s};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

si::SearchConfig config(std::size_t restarts, std::uint64_t seed, Field field = Field::real_symmetric) {
    si::SearchConfig c;
    c.restarts = restarts;
    c.seed = seed;
    c.field = field;
    return c;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = {normal(rng), normal(rng)};
    return (h + h.adjoint().eval()) / 2;
}

}  // namespace

// weightings

TEST(RandomWeighting, DeterministicPerSeed) {
    Graph g = si::catalog("petersen");
    for (auto field : {Field::real_symmetric, Field::hermitian}) {
        auto a = si::random_weighting(g, 5, field), b = si::random_weighting(g, 5, field);
        EXPECT_EQ(a.matrix, b.matrix);
        EXPECT_NE(a.matrix, si::random_weighting(g, 6, field).matrix);
        EXPECT_NO_THROW(si::check_pattern(g, a));
    }
}

TEST(RandomWeighting, EmptyGraphIsZero) {
    EXPECT_EQ(si::random_weighting(si::catalog("empty:5"), 1).matrix, ComplexMatrix::Zero(5, 5));
}

TEST(RandomWeighting, GenericRankOnK33) {
    Graph g = si::catalog("complete_bipartite:3,3");
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto w = si::random_weighting(g, seed);
        Eigen::FullPivLU<Eigen::MatrixXd> ambient(w.real_part());
        EXPECT_EQ(ambient.rank(), 6);
        Eigen::FullPivLU<Eigen::MatrixXd> block(w.real_part().topRightCorner(3, 3));
        EXPECT_EQ(block.rank(), 3);
    }
}

TEST(WeightedInertia, Examples) {
    Graph p = si::catalog("petersen");
    EXPECT_EQ(si::weighted_inertia_bound(p, si::unit_weighting(p)).value, 4.0);
    for (const auto& g : testing_support::random_corpus(30, 1, 9, 163))
        EXPECT_EQ(si::weighted_inertia_bound(g, si::unit_weighting(g)).value, si::inertia_bound(g).value);
    Graph k33 = si::catalog("complete_bipartite:3,3");
    auto r = si::weighted_inertia_bound(k33, si::random_weighting(k33, 3));
    EXPECT_EQ(r.value, 3.0);
    EXPECT_EQ(*r.inertia, (si::Inertia{3, 0, 3}));
    EXPECT_EQ(si::exact_rounded_bound(si::random_weighting(k33, 3), 10000), 3u);
}

TEST(WeightedInertia, PatternErrors) {
    Graph g = si::catalog("path:3");
    auto w = si::unit_weighting(g);
    w.matrix(0, 2) = w.matrix(2, 0) = 1.0;
    EXPECT_THROW(si::weighted_inertia_bound(g, w), si::PatternError);
    w = si::unit_weighting(g);
    w.matrix(1, 1) = 1.0;
    EXPECT_THROW(si::weighted_inertia_bound(g, w), si::PatternError);
    w = si::unit_weighting(g);
    w.matrix(0, 1) = w.matrix(1, 0) = std::complex<double>(0, 1);  // not Hermitian
    EXPECT_THROW(si::weighted_inertia_bound(g, w), si::ContractError);
    w = si::unit_weighting(g);
    w.matrix(0, 1) = std::complex<double>(1, 1);
    w.matrix(1, 0) = std::complex<double>(1, -1);
    EXPECT_THROW(si::weighted_inertia_bound(g, w), si::PatternError);  // imaginary part in the real field
    w.field = Field::hermitian;
    EXPECT_NO_THROW(si::weighted_inertia_bound(g, w));
    EXPECT_THROW(si::weighted_inertia_bound(si::catalog("path:4"), si::unit_weighting(g)), si::PatternError);
}

TEST(WeightedInertia, HadamardKeepsPattern) {
    std::mt19937_64 rng(167);
    for (const auto& g : testing_support::random_corpus(30, 1, 9, 173)) {
        auto w = si::hadamard(g, random_hermitian(g.order(), rng));
        EXPECT_NO_THROW(si::check_pattern(g, w));
    }
}

TEST(WeightedInertia, SoundOnRandomWeightings) {
    std::mt19937_64 rng(179);
    for (const auto& g : testing_support::random_corpus(80, 1, 9, 181)) {
        const std::size_t alpha = si::alpha_exact(g).size;
        for (auto field : {Field::real_symmetric, Field::hermitian}) {
            auto w = si::random_weighting(g, rng(), field);
            EXPECT_LE(alpha, si::weighted_inertia_bound(g, w).value);
            EXPECT_LE(alpha, si::exact_rounded_bound(w, 10000));
        }
    }
}

// search

TEST(Search, K33TightWithFiveRestarts) {
    auto r = si::search_tight_weights(si::catalog("complete_bipartite:3,3"), config(5, 7));
    EXPECT_TRUE(r.tight);
    EXPECT_EQ(r.best_bound, 3u);
    EXPECT_EQ(r.target, 3u);
    EXPECT_EQ(si::exact_rounded_bound(r.best_weights, 10000), 3u);
    EXPECT_NO_THROW(si::check_pattern(si::catalog("complete_bipartite:3,3"), r.best_weights));
}

TEST(Search, Cycle5TightUnweighted) {
    auto r = si::search_tight_weights(si::catalog("cycle:5"), config(5, 1));
    EXPECT_TRUE(r.tight);
    ASSERT_TRUE(r.tight_restart);
    EXPECT_EQ(*r.tight_restart, 0u);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_EQ(r.best_weights.matrix, si::unit_weighting(si::catalog("cycle:5")).matrix);
}

TEST(Search, EmptyGraphTightImmediately) {
    auto r = si::search_tight_weights(si::catalog("empty:4"), config(3, 1));
    EXPECT_TRUE(r.tight);
    EXPECT_EQ(r.best_bound, 4u);
}

TEST(Search, Paley17RealNeverTightOnShortBudget) {
    auto cfg = config(4, 3);
    cfg.iterations = 400;
    auto r = si::search_tight_weights(si::catalog("paley:17"), cfg);
    EXPECT_FALSE(r.tight);
    EXPECT_EQ(r.target, 3u);
    EXPECT_GE(r.best_bound, 4u);
    EXPECT_GE(r.min_visited_bound, 4u);
    EXPECT_EQ(r.restarts_run, 4u);
}

TEST(Search, SoundAndMonotoneBookkeeping) {
    std::mt19937_64 rng(191);
    for (const auto& g : testing_support::random_corpus(25, 3, 8, 193)) {
        auto cfg = config(3, rng());
        cfg.iterations = 200;
        auto r = si::search_tight_weights(g, cfg);
        EXPECT_GE(r.min_visited_bound, r.target) << si::write_graph6(g);
        EXPECT_GE(r.best_bound, r.target);
        EXPECT_LE(r.min_visited_bound, r.best_bound);
        EXPECT_EQ(r.tight, r.best_bound == r.target);
        if (r.tight) {
            EXPECT_EQ(si::exact_rounded_bound(r.best_weights, cfg.grid_denominator), r.target);
        }
        EXPECT_GE(si::weighted_inertia_bound(g, r.best_weights).value, static_cast<double>(r.target));
    }
}

TEST(Search, BipartiteGraphsReachTightness) {
    std::mt19937_64 rng(197);
    std::size_t checked = 0;
    for (const auto& g : testing_support::random_corpus(200, 2, 8, 199)) {
        if (!is_bipartite(g) || si::component_count(g) != 1) continue;
        ++checked;
        auto r = si::search_tight_weights(g, config(20, rng()));
        EXPECT_TRUE(r.tight) << si::write_graph6(g);
    }
    EXPECT_GT(checked, 5u);
}

TEST(Search, HermitianFieldK33) {
    auto r = si::search_tight_weights(si::catalog("complete_bipartite:3,3"), config(5, 11, Field::hermitian));
    EXPECT_TRUE(r.tight);
    EXPECT_EQ(r.best_weights.field, Field::hermitian);
    EXPECT_EQ(si::exact_rounded_bound(r.best_weights, 10000), 3u);
}

TEST(Search, DeterministicAcrossThreadCounts) {
    for (const char* id : {"complete_bipartite:3,3", "paley:13", "hypercube:3", "cuboctahedron"}) {
        auto cfg = config(6, 42);
        cfg.iterations = 300;
        auto a = si::search_tight_weights(si::catalog(id), cfg);
        cfg.threads = 4;
        auto b = si::search_tight_weights(si::catalog(id), cfg);
        EXPECT_EQ(si::to_json(a).dump(), si::to_json(b).dump()) << id;
        EXPECT_EQ(si::to_json(a).dump(), si::to_json(si::search_tight_weights(si::catalog(id), cfg)).dump()) << id;
    }
}

TEST(Search, OracleBudgetPropagates) {
    auto cfg = config(1, 1);
    cfg.oracle_budget = 5;
    EXPECT_THROW(si::search_tight_weights(si::catalog("petersen"), cfg), si::BudgetError);
}

TEST(SearchConfig, JsonOverlay) {
    auto c = si::search_config_from_json(si::json::parse(R"({"restarts": 5, "seed": 7, "field": "hermitian"})"));
    EXPECT_EQ(c.restarts, 5u);
    EXPECT_EQ(c.seed, 7u);
    EXPECT_EQ(c.field, Field::hermitian);
    EXPECT_EQ(c.iterations, si::SearchConfig{}.iterations);
    EXPECT_THROW(si::search_config_from_json(si::json::parse(R"({"restart": 5})")), si::ParseError);
    EXPECT_THROW(si::search_config_from_json(si::json::parse(R"({"field": "quaternion"})")), si::ParseError);
    EXPECT_THROW(si::search_config_from_json(si::json::parse("[]")), si::ParseError);
}

// Hadamard zero pattern

TEST(ZeroPattern, LinearPolynomialHoldsTrivially) {
    std::mt19937_64 rng(211);
    for (const auto& g : testing_support::random_corpus(30, 2, 8, 223)) {
        auto r = si::hadamard_zero_pattern_check(g, si::hadamard(g, random_hermitian(g.order(), rng)),
                                                 si::Polynomial::monomial(1));
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.zeros_checked, g.order() * (g.order() - 1) - 2 * g.size());
        EXPECT_EQ(r.max_residual, 0.0);
    }
}

TEST(ZeroPattern, CubeOnRandomGraphs) {
    std::mt19937_64 rng(227);
    std::size_t zeros = 0;
    for (const auto& g : testing_support::random_corpus(200, 2, 8, 229)) {
        auto r = si::hadamard_zero_pattern_check(g, si::hadamard(g, random_hermitian(g.order(), rng)),
                                                 si::Polynomial::monomial(3));
        EXPECT_TRUE(r.holds) << si::write_graph6(g) << " residual " << r.max_residual;
        zeros += r.zeros_checked;
    }
    EXPECT_GT(zeros, 100u);
}

TEST(ZeroPattern, PetersenSquarePlusLinear) {
    // A^2 + A has no zero off the diagonal on Petersen (diameter 2); the
    // check is then vacuous, so also try x^2 alone, whose zeros are the edges
    Graph g = si::catalog("petersen");
    std::mt19937_64 rng(233);
    auto h = si::hadamard(g, random_hermitian(10, rng));
    auto r = si::hadamard_zero_pattern_check(g, h, si::Polynomial({0, 1, 1}));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.zeros_checked, 0u);
    auto s = si::hadamard_zero_pattern_check(g, h, si::Polynomial::monomial(2));
    EXPECT_TRUE(s.holds);
    EXPECT_EQ(s.zeros_checked, 30u);
}

TEST(ZeroPattern, CancellationZerosAreNotStructural) {
    // On C4, A^3 = 4A, so x^3 - 4x annihilates A while p(H o A) does not vanish
    Graph g = si::catalog("cycle:4");
    std::mt19937_64 rng(239);
    auto h = si::hadamard(g, random_hermitian(4, rng));
    si::Polynomial p({0, -4, 0, 1});
    const auto a = g.adjacency_matrix();
    EXPECT_EQ(p.apply(a), Eigen::MatrixXd::Zero(4, 4));
    EXPECT_GT(p.apply(h.matrix).cwiseAbs().maxCoeff(), 1e-3);
    auto r = si::hadamard_zero_pattern_check(g, h, p);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.zeros_checked, 4u);  // the two diagonals of the square, both orders
}
