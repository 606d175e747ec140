#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/dynamics.hpp"
#include "crn/parser.hpp"
#include "crn/square.hpp"

#include <fstream>
#include <sstream>

using namespace crn;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(CRN_FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SquareParams example_params() {
    return parse_square_params(fixture("bistable.params"));
}

}  // namespace

TEST_CASE("rhs of the introductory reversible reaction") {
    ParsedNetwork parsed = parse_network("A + B <-> 3 A + C @ 2, 1");
    Eigen::VectorXd c(3);
    c << 1, 1, 1;
    Eigen::VectorXd dc = mass_action_rhs(parsed.network, parsed.rates, c);
    CHECK(dc[0] == doctest::Approx(2.0));   // 2k cA cB - 2k' cA^3 cC
    CHECK(dc[1] == doctest::Approx(-1.0));  // -k cA cB + k' cA^3 cC
    CHECK(dc[2] == doctest::Approx(1.0));
}

TEST_CASE("rhs vanishes with all-zero rates") {
    ParsedNetwork parsed = parse_network("A + B <-> 3 A + C @ 2, 1");
    Eigen::VectorXd c(3);
    c << 0.3, 1.7, 2.9;
    CHECK(mass_action_rhs(parsed.network, RateAssignment{}, c).norm() == 0.0);
}

TEST_CASE("rhs vanishes at the classified steady states") {
    SquareParams params = example_params();
    Classification classification = classify(params);
    REQUIRE(classification.steady_state_count == 3);
    std::vector<double> roots;
    for (const auto& root : classification.roots) roots.push_back(root.value);
    for (double total : {0.5, 1.0, 4.0, 100.0}) {
        for (const auto& c : roots_to_concentrations(roots, total)) {
            Eigen::VectorXd state = c;
            Eigen::VectorXd dc =
                mass_action_rhs(square_complex_network(), to_rate_assignment(params), state);
            CHECK(dc.lpNorm<Eigen::Infinity>() < 1e-8);
        }
    }
}

TEST_CASE("trajectories converge to the stable states") {
    SquareParams params = example_params();
    const Network& net = square_complex_network();
    RateAssignment rates = to_rate_assignment(params);

    IntegrateOptions options;
    options.t_end = 50.0;
    options.dt = 1e-3;

    Eigen::VectorXd high(2), low(2);
    high << 2.9, 1.1;
    low << 1.9, 2.1;

    Trajectory up = integrate(net, rates, high, options);
    CHECK((up.states.back() - Eigen::Vector2d(3, 1)).lpNorm<Eigen::Infinity>() < 1e-6);
    CHECK(conservation_residual(up, net) <= 1e-8);

    Trajectory down = integrate(net, rates, low, options);
    CHECK((down.states.back() - Eigen::Vector2d(2, 2)).lpNorm<Eigen::Infinity>() < 1e-6);
    CHECK(conservation_residual(down, net) <= 1e-8);

    // positivity along the way
    for (const auto& state : up.states) CHECK(state.minCoeff() > 0.0);
}

TEST_CASE("zero rates give a constant trajectory") {
    const Network& net = square_complex_network();
    Eigen::VectorXd c0(2);
    c0 << 1.5, 2.5;
    IntegrateOptions options;
    options.t_end = 1.0;
    options.dt = 0.01;
    options.stop_at_equilibrium = false;
    Trajectory t = integrate(net, RateAssignment{}, c0, options);
    CHECK(t.states.size() == 101);
    for (const auto& state : t.states) CHECK((state - c0).norm() == 0.0);
    CHECK(conservation_residual(t, net) == 0.0);
}

TEST_CASE("conserved quantities of the introductory network") {
    ParsedNetwork parsed = parse_network("A + B <-> 3 A + C @ 2, 1");
    Eigen::VectorXd c0(3);
    c0 << 1.0, 2.0, 0.5;
    IntegrateOptions options;
    options.t_end = 5.0;
    options.dt = 1e-3;
    Trajectory t = integrate(parsed.network, parsed.rates, c0, options);
    CHECK(conservation_residual(t, parsed.network) <= 1e-8);
}

TEST_CASE("fourth-order convergence under step halving") {
    SquareParams params = example_params();
    const Network& net = square_complex_network();
    RateAssignment rates = to_rate_assignment(params);
    Eigen::VectorXd c0(2);
    c0 << 2.5, 1.5;

    auto endpoint = [&](double dt) {
        IntegrateOptions options;
        options.t_end = 1.0;
        options.dt = dt;
        options.stop_at_equilibrium = false;
        return integrate(net, rates, c0, options).states.back();
    };

    Eigen::VectorXd reference = endpoint(1.0 / 512);
    double coarse = (endpoint(1.0 / 64) - reference).norm();
    double fine = (endpoint(1.0 / 128) - reference).norm();
    CHECK(coarse / fine >= 8.0);
}

TEST_CASE("step-size validation and blow-up detection") {
    const Network& net = square_complex_network();
    Eigen::VectorXd c0(2);
    c0 << 1.0, 1.0;
    IntegrateOptions bad;
    bad.t_end = -1;
    CHECK_THROWS_AS(integrate(net, RateAssignment{}, c0, bad), std::invalid_argument);
    bad.t_end = 1;
    bad.dt = 0;
    CHECK_THROWS_AS(integrate(net, RateAssignment{}, c0, bad), std::invalid_argument);

    // A single drain reaction stepped far too coarsely goes negative.
    SquareParams drain;
    drain.k23 = Rational(1);
    IntegrateOptions coarse;
    coarse.t_end = 10.0;
    coarse.dt = 2.0;
    CHECK_THROWS_AS(integrate(net, to_rate_assignment(drain), c0, coarse), std::runtime_error);
}

TEST_CASE("equilibrium early-stop shortens the trajectory") {
    SquareParams params = example_params();
    const Network& net = square_complex_network();
    Eigen::VectorXd c0(2);
    c0 << 2.9, 1.1;
    IntegrateOptions options;
    options.t_end = 50.0;
    options.dt = 1e-3;
    Trajectory stopped = integrate(net, to_rate_assignment(params), c0, options);
    CHECK(stopped.times.back() < 50.0);
    CHECK((stopped.states.back() - Eigen::Vector2d(3, 1)).lpNorm<Eigen::Infinity>() < 1e-6);
}

TEST_CASE("trajectory CSV format") {
    const Network& net = square_complex_network();
    Eigen::VectorXd c0(2);
    c0 << 1.0, 3.0;
    IntegrateOptions options;
    options.t_end = 0.002;
    options.dt = 1e-3;
    Trajectory t = integrate(net, RateAssignment{}, c0, options);
    std::ostringstream os;
    write_trajectory_csv(os, t, net);
    CHECK(os.str() == "t,c_c1,c_c2\n0,1,3\n0.001,1,3\n0.002,1,3\n");
}
