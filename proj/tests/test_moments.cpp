#include <doctest.h>

#include <cmath>
#include <vector>

#include "smorder/enumerate.hpp"
#include "smorder/families.hpp"
#include "smorder/moments.hpp"
#include "smorder/tree.hpp"

#ifdef SMORDER_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace smorder;

namespace {

Tree path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return tree_from_edges(n, e);
}

Tree star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return tree_from_edges(n, e);
}

MomentSequence from_ints(std::initializer_list<long long> vals) {
    MomentSequence m;
    for (long long v : vals) m.values.emplace_back(v);
    return m;
}

}  // namespace

TEST_CASE("small closed-walk counts") {
    CHECK(walk_moments(path(2)) == from_ints({2, 0}));
    CHECK(walk_moments(path(4)) == from_ints({4, 0, 6, 0}));
    CHECK(walk_moments(star(4)) == from_ints({4, 0, 6, 0}));
    CHECK(walk_moments(path(1)) == from_ints({1}));
    // the order-4 pair separates one power later
    CHECK(walk_moments(path(4), 4).values[4] == 14);
    CHECK(walk_moments(star(4), 4).values[4] == 18);
}

TEST_CASE("structural facts hold for every tree") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& t : free_trees(n)) {
            auto m = walk_moments(t);
            REQUIRE(m.values.size() == static_cast<std::size_t>(n));
            CHECK(m.values[0] == n);
            if (n >= 2) CHECK(m.values[1] == 0);
            if (n >= 3) CHECK(m.values[2] == 2 * (n - 1));
            for (std::size_t k = 1; k < m.values.size(); k += 2) CHECK(m.values[k] == 0);
            for (std::size_t k = 2; k < m.values.size(); k += 2) CHECK(m.values[k] > 0);
        }
}

TEST_CASE("degree-sum formulas match the walk counts") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& t : free_trees(n)) {
            auto m = walk_moments(t, 6);
            CHECK(m.values[4] == s4_formula(t));
            CHECK(m.values[5] == 0);
            CHECK(s5_formula(t) == 0);
            CHECK(m.values[6] == s6_formula(t));
        }
}

TEST_CASE("pattern counts on known trees") {
    Tree k14 = star(5);
    CHECK(count_p2(k14) == 4);
    CHECK(count_p3(k14) == 6);
    CHECK(count_p4(k14) == 0);
    CHECK(count_k13(k14) == 4);

    Tree ds44 = double_star(4, 4);
    auto c = subgraph_counts(ds44);
    CHECK(c.p2 == 7);
    CHECK(c.p3 == 12);
    CHECK(c.p4 == 9);
    CHECK(c.k13 == 8);
    CHECK(s4_formula(ds44) == 62);

    CHECK(walk_moments(double_star(4, 6), 4).values[4] == 102);
}

TEST_CASE("brute-force subgraph search agrees with the closed forms") {
    Tree p3 = path(3), p4 = path(4), k13 = star(4);
    CHECK(count_subgraph_bruteforce(star(5), k13) == 4);
    for (int n = 2; n <= 8; ++n)
        for (const auto& t : free_trees(n)) {
            CHECK(count_subgraph_bruteforce(t, path(2)) == count_p2(t));
            CHECK(count_subgraph_bruteforce(t, p3) == count_p3(t));
            CHECK(count_subgraph_bruteforce(t, p4) == count_p4(t));
            CHECK(count_subgraph_bruteforce(t, k13) == count_k13(t));
        }
}

TEST_CASE("high powers stay exact past 64-bit range") {
    // K_{1,17}: nonzero eigenvalues are +-sqrt(17), so S_{2j} = 2 * 17^j
    Tree t = star(18);
    auto m = walk_moments(t, 60);
    REQUIRE(m.values.size() == 61);
    CHECK(m.values[0] == 18);
    BigInt power = 1;
    for (int j = 1; j <= 30; ++j) {
        power *= 17;
        CHECK(m.values[2 * j] == 2 * power);
        CHECK(m.values[2 * j - 1] == 0);
    }
    CHECK(m.values[60] > BigInt("1000000000000000000000000000000"));
}

#ifdef SMORDER_HAVE_EIGEN
TEST_CASE("eigenvalue power sums confirm the walk counts") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& t : free_trees(n)) {
            Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
            for (auto [u, v] : t.edges()) a(u, v) = a(v, u) = 1.0;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
            REQUIRE(solver.info() == Eigen::Success);
            auto m = walk_moments(t);
            for (int k = 0; k < n; ++k) {
                double sum = 0;
                for (int i = 0; i < n; ++i) sum += std::pow(solver.eigenvalues()[i], k);
                double exact = m.values[k].convert_to<double>();
                CHECK(std::abs(sum - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
            }
        }
}
#endif
