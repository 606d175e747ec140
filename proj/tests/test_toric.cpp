#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/parser.hpp"
#include "crn/toric.hpp"

#include <random>

using namespace crn;

namespace {

// The four tree-constant polynomials of the Square, written out term by
// term over the variables (k12, k14, k21, k23, k32, k34, k41, k43).
std::vector<MultivariatePolynomial> expected_square_tree_constants() {
    const std::vector<std::string> vars = {"k12", "k14", "k21", "k23", "k32", "k34", "k41", "k43"};
    auto v = [&](const char* name) {
        auto it = std::find(vars.begin(), vars.end(), name);
        return MultivariatePolynomial::variable(vars, static_cast<int>(it - vars.begin()));
    };
    std::vector<MultivariatePolynomial> k;
    k.push_back(v("k23") * v("k34") * v("k41") + v("k21") * v("k34") * v("k41") +
                v("k21") * v("k32") * v("k41") + v("k21") * v("k32") * v("k43"));
    k.push_back(v("k14") * v("k32") * v("k43") + v("k12") * v("k34") * v("k41") +
                v("k12") * v("k32") * v("k41") + v("k12") * v("k32") * v("k43"));
    k.push_back(v("k14") * v("k23") * v("k43") + v("k14") * v("k21") * v("k43") +
                v("k12") * v("k23") * v("k41") + v("k12") * v("k23") * v("k43"));
    k.push_back(v("k14") * v("k23") * v("k34") + v("k14") * v("k21") * v("k34") +
                v("k14") * v("k21") * v("k32") + v("k12") * v("k23") * v("k34"));
    return k;
}

SquareParams random_positive_params(std::mt19937& rng, const std::vector<Edge>& support) {
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 4);
    SquareParams params;
    for (const Edge& e : support) params.at(e.first, e.second) = Rational(num(rng), den(rng));
    return params;
}

}  // namespace

TEST_CASE("symbolic tree constants of the Square match the printed polynomials") {
    auto computed = matrix_tree_symbolic(square_network());
    auto expected = expected_square_tree_constants();
    REQUIRE(computed.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(computed[i] == expected[i]);
        CHECK(computed[i].term_count() == 4);
        CHECK(computed[i].homogeneous_degree() == 3);  // n - 1
    }
}

TEST_CASE("tree constants of a single reversible reaction") {
    ParsedNetwork parsed = parse_network("A <-> B @ 3, 5");
    auto k = matrix_tree(parsed.network, parsed.rates);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == Rational(5));  // k21
    CHECK(k[1] == Rational(3));  // k12
}

TEST_CASE("disconnected support has vanishing whole-graph constants") {
    SquareParams params;
    params.k14 = Rational(2);
    params.k41 = Rational(3);
    params.k23 = Rational(5);
    params.k32 = Rational(7);
    auto k = matrix_tree(square_complex_network(), to_rate_assignment(params));
    for (const auto& value : k) CHECK(value.is_zero());

    auto per_class = matrix_tree_per_class(square_complex_network(), to_rate_assignment(params));
    CHECK(per_class[0] == Rational(3));  // toward c1^3 within {1,4}: k41
    CHECK(per_class[1] == Rational(7));  // toward c1 c2^2 within {2,3}: k32
    CHECK(per_class[2] == Rational(5));  // k23
    CHECK(per_class[3] == Rational(2));  // k14
}

TEST_CASE("per-class constants agree with the whole-graph ones when connected") {
    std::mt19937 rng(4242);
    auto support = SquareParams::admissible_edges();
    for (int trial = 0; trial < 20; ++trial) {
        SquareParams params = random_positive_params(rng, support);
        auto rates = to_rate_assignment(params);
        CHECK(matrix_tree(square_complex_network(), rates) ==
              matrix_tree_per_class(square_complex_network(), rates));
    }
}

TEST_CASE("arborescence enumeration equals Laplacian cofactors on random digraphs") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coin(0, 1);
    int tested = 0;
    while (tested < 100) {
        std::vector<Edge> support;
        for (const Edge& e : SquareParams::admissible_edges())
            if (coin(rng)) support.push_back(e);
        std::vector<Edge> zero_based;
        for (const Edge& e : support) zero_based.push_back({e.first - 1, e.second - 1});
        if (!strongly_connected(4, zero_based)) continue;
        ++tested;
        SquareParams params = random_positive_params(rng, support);
        auto rates = to_rate_assignment(params);
        auto direct = matrix_tree(square_complex_network(), rates);
        auto cofactor = matrix_tree_cofactor(square_complex_network(), rates);
        REQUIRE(direct.size() == cofactor.size());
        for (size_t i = 0; i < direct.size(); ++i) CHECK(direct[i] == cofactor[i]);
        for (const auto& value : direct) CHECK(value.sign() > 0);
    }
}

TEST_CASE("size cap on tree-constant enumeration") {
    Eigen::MatrixXi y(9, 1);
    for (int i = 0; i < 9; ++i) y(i, 0) = i + 1;
    Network big({"A"}, y, {{0, 1}});
    CHECK_THROWS_AS(matrix_tree(big, RateAssignment{}), std::domain_error);
}

TEST_CASE("twisted cubic minors") {
    CHECK(twisted_cubic_minors({Rational(8), Rational(18), Rational(27), Rational(12)}) ==
          std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)});  // Psi((2,3))
    CHECK(twisted_cubic_minors({Rational(1), Rational(1), Rational(1), Rational(1)}) ==
          std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)});
    CHECK(twisted_cubic_minors({Rational(1), Rational(2), Rational(3), Rational(4)}) ==
          std::array<Rational, 3>{Rational(-5), Rational(-14), Rational(-8)});
}

TEST_CASE("monomial vectors lie on the twisted cubic") {
    std::mt19937 rng(8888);
    std::uniform_int_distribution<long> num(1, 12);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        Rational c1(num(rng), den(rng)), c2(num(rng), den(rng));
        std::array<Rational, 4> psi_exact = {c1 * c1 * c1, c1 * c2 * c2, c2 * c2 * c2, c1 * c1 * c2};
        auto minors = twisted_cubic_minors(psi_exact);
        CHECK(minors[0].is_zero());
        CHECK(minors[1].is_zero());
        CHECK(minors[2].is_zero());
    }
}

TEST_CASE("toric check on the full Square") {
    // symmetric unit rates: all tree constants equal, so the minors vanish
    SquareParams symmetric;
    for (const Edge& e : {Edge{1, 2}, Edge{2, 1}, Edge{2, 3}, Edge{3, 2}, Edge{3, 4}, Edge{4, 3},
                          Edge{4, 1}, Edge{1, 4}})
        symmetric.at(e.first, e.second) = Rational(1);
    CHECK(is_toric_square(symmetric));

    // detailed balance with respect to c = (2, 1)
    SquareParams balanced;
    balanced.k12 = Rational(1);
    balanced.k21 = Rational(4);
    balanced.k23 = Rational(1);
    balanced.k32 = Rational(2);
    balanced.k34 = Rational(1);
    balanced.k43 = Rational(1, 4);
    balanced.k41 = Rational(1);
    balanced.k14 = Rational(1, 2);
    CHECK(is_toric_square(balanced));
    CHECK(classify(balanced).steady_state_count == 1);

    // three steady states cannot be complex balanced
    SquareParams example;
    example.k12 = Rational(1, 4);
    example.k14 = Rational(1, 2);
    example.k21 = Rational(1);
    example.k23 = Rational(13);
    example.k32 = Rational(2);
    example.k34 = Rational(2);
    example.k41 = Rational(8);
    example.k43 = Rational(1);
    CHECK_FALSE(is_toric_square(example));

    SquareParams disconnected;
    disconnected.k14 = disconnected.k41 = disconnected.k23 = disconnected.k32 = Rational(1);
    CHECK_THROWS_AS(is_toric_square(disconnected), std::domain_error);
}

TEST_CASE("subnetwork1 binomial conditions") {
    auto params_for = [](long k12, long k14, long k21, long k23, long k32, long k41) {
        SquareParams p;
        p.k12 = Rational(k12);
        p.k14 = Rational(k14);
        p.k21 = Rational(k21);
        p.k23 = Rational(k23);
        p.k32 = Rational(k32);
        p.k41 = Rational(k41);
        return p;
    };
    CHECK(subnetwork1_toric(params_for(1, 1, 1, 1, 1, 1)));
    CHECK_FALSE(subnetwork1_toric(params_for(1, 2, 1, 1, 1, 1)));
    CHECK_FALSE(subnetwork1_toric(params_for(2, 1, 1, 2, 1, 1)));

    SquareParams wrong_support;
    wrong_support.k12 = Rational(1);
    CHECK_THROWS_AS(subnetwork1_toric(wrong_support), std::domain_error);
}

TEST_CASE("the four published binomials vanish iff the reduced pair does") {
    std::mt19937 rng(600613);
    std::uniform_int_distribution<long> num(1, 8);
    std::uniform_int_distribution<long> den(1, 3);
    static const std::vector<Edge> support = {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}, {4, 1}};

    int on_variety = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        SquareParams params;
        if (trial % 4 == 0) {
            // construct a point on the variety: k32 and k12 from the pair
            Rational k14(num(rng), den(rng)), k21(num(rng), den(rng)), k23(num(rng), den(rng)),
                k41(num(rng), den(rng));
            params.k14 = k14;
            params.k21 = k21;
            params.k23 = k23;
            params.k41 = k41;
            params.k32 = k23 * k41 / k14;
            params.k12 = k14 * k14 * k21 / (k41 * k41);
        } else {
            params = random_positive_params(rng, support);
        }
        auto binomials = subnetwork1_binomials(params);
        bool all_four = true;
        for (const auto& b : binomials) all_four = all_four && b.is_zero();
        bool reduced_pair = binomials[0].is_zero() && binomials[1].is_zero();
        CHECK(all_four == reduced_pair);
        if (all_four) {
            ++on_variety;
            CHECK(subnetwork1_toric(params));
            CHECK(classify(params).steady_state_count == 1);
        }
    }
    CHECK(on_variety >= 250);
}

TEST_CASE("segre condition") {
    auto vertical = [](const Rational& k14, const Rational& k23, const Rational& k32,
                       const Rational& k41) {
        SquareParams p;
        p.k14 = k14;
        p.k23 = k23;
        p.k32 = k32;
        p.k41 = k41;
        return p;
    };
    CHECK(segre_toric(vertical(Rational(1), Rational(1), Rational(1), Rational(1))));
    CHECK_FALSE(segre_toric(vertical(Rational(1), Rational(2), Rational(1), Rational(1))));
    CHECK(segre_toric(vertical(Rational(2), Rational(3), Rational(6), Rational(4))));

    SquareParams full;
    for (const Edge& e : SquareParams::admissible_edges()) full.at(e.first, e.second) = Rational(1);
    CHECK_THROWS_AS(segre_toric(full), std::domain_error);
}

TEST_CASE("points on the Segre variety classify to a unique steady state") {
    std::mt19937 rng(112358);
    std::uniform_int_distribution<long> num(1, 10);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        SquareParams params;
        params.k14 = Rational(num(rng), den(rng));
        params.k32 = Rational(num(rng), den(rng));
        params.k41 = Rational(num(rng), den(rng));
        params.k23 = params.k14 * params.k32 / params.k41;
        REQUIRE(segre_toric(params));
        Classification c = classify(params);
        CHECK(c.steady_state_count == 1);
        CHECK(c.stable_count == 1);
    }
}
