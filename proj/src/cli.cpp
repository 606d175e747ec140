#include "crn/cli.hpp"

#include "crn/dynamics.hpp"
#include "crn/parser.hpp"
#include "crn/toric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace crn::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fmt12(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

std::string cubic_form_str(const CubicForm& f) {
    return "(" + f.S0.str() + ", " + f.S1.str() + ", " + f.S2.str() + ", " + f.S3.str() + ")";
}

void print_classification(std::ostream& out, const Classification& c) {
    out << "S = " << cubic_form_str(c.coefficients) << "\n";
    out << "p(x) = " << p_polynomial(c.coefficients).str() << "\n";
    if (c.degenerate_continuum) {
        out << "degenerate continuum: p = 0, every point of the invariant line is a steady state\n";
        return;
    }
    out << "D = " << c.discriminant->value.str() << "  (effective degree "
        << c.discriminant->effective_degree << ")\n";
    out << "steady states = " << c.steady_state_count << ", stable = " << c.stable_count << "\n";
    for (const ClassifiedRoot& root : c.roots) {
        out << "  x = " << fmt12(root.value) << "  multiplicity " << root.multiplicity << "  "
            << stability_name(root.stability) << "  in (" << root.lo.str() << ", " << root.hi.str()
            << ")\n";
    }
}

SquareParams params_from_file(const std::string& path) {
    return parse_square_params(slurp(path));
}

struct SweepRangeSpec {
    std::string key;
    SweepRange range;
};

SweepRangeSpec parse_range_spec(const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("range must look like k14=lo:hi:step");
    SweepRangeSpec out;
    out.key = spec.substr(0, eq);
    std::string rest = spec.substr(eq + 1);
    auto c1 = rest.find(':');
    auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("range must look like k14=lo:hi:step");
    out.range.lo = Rational::parse(rest.substr(0, c1));
    out.range.hi = Rational::parse(rest.substr(c1 + 1, c2 - c1 - 1));
    out.range.step = Rational::parse(rest.substr(c2 + 1));
    return out;
}

void run_info(std::ostream& out, const std::string& path) {
    ParsedNetwork parsed = parse_network(slurp(path));
    const Network& net = parsed.network;
    bool mass_preserving = net.num_complexes() == 0 ? true : is_mass_preserving(net);
    out << "n=" << net.num_complexes() << " l=" << linkage_classes(net).size() << " s="
        << net.num_species() << " deficiency=" << deficiency(net)
        << " reversible=" << (is_reversible(net) ? "yes" : "no")
        << " mass-preserving=" << (mass_preserving ? "yes" : "no") << "\n";
}

void run_classify(std::ostream& out, const std::string& params_path, bool as_json) {
    Classification c = classify(params_from_file(params_path));
    if (as_json) {
        out << classification_to_json(c).dump(2) << "\n";
    } else {
        print_classification(out, c);
    }
}

void run_roots(std::ostream& out, const std::string& params_path, double total) {
    Classification c = classify(params_from_file(params_path));
    if (c.degenerate_continuum) {
        out << "degenerate continuum: every point of the invariant line c1 + c2 = " << fmt12(total)
            << " is a steady state\n";
        return;
    }
    out << "steady states = " << c.steady_state_count << ", stable = " << c.stable_count
        << ", T = " << fmt12(total) << "\n";
    std::vector<double> values;
    values.reserve(c.roots.size());
    for (const auto& root : c.roots) values.push_back(root.value);
    auto concentrations = roots_to_concentrations(values, total);
    for (size_t i = 0; i < c.roots.size(); ++i) {
        out << "  x = " << fmt12(c.roots[i].value) << "  " << stability_name(c.roots[i].stability)
            << "  c = (" << fmt12(concentrations[i][0]) << ", " << fmt12(concentrations[i][1])
            << ")\n";
    }
}

void run_simulate(std::ostream& out, const std::string& params_path, const std::string& init,
                  double t_end, double dt, const std::string& out_path) {
    SquareParams params = params_from_file(params_path);
    const Network& net = square_complex_network();

    std::vector<double> c0;
    std::stringstream ss(init);
    std::string item;
    while (std::getline(ss, item, ',')) c0.push_back(std::stod(item));
    if (static_cast<int>(c0.size()) != net.num_species())
        throw std::invalid_argument("--init needs " + std::to_string(net.num_species()) +
                                    " comma-separated concentrations");
    Eigen::VectorXd initial = Eigen::Map<Eigen::VectorXd>(c0.data(), c0.size());

    IntegrateOptions options;
    options.t_end = t_end;
    options.dt = dt;
    Trajectory trajectory = integrate(net, to_rate_assignment(params), initial, options);

    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    write_trajectory_csv(file, trajectory, net);

    const Eigen::VectorXd& final_state = trajectory.states.back();
    out << "steps = " << trajectory.times.size() - 1 << ", t = " << fmt12(trajectory.times.back())
        << ", final c = (" << fmt12(final_state[0]) << ", " << fmt12(final_state[1])
        << "), conservation residual = " << fmt12(conservation_residual(trajectory, net)) << "\n";
}

void run_toric(std::ostream& out, const std::string& params_path) {
    SquareParams params = params_from_file(params_path);
    static const std::set<Edge> vertical = {{1, 4}, {2, 3}, {3, 2}, {4, 1}};
    static const std::set<Edge> subnetwork1 = {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}, {4, 1}};

    const auto support = params.support();
    if (support == vertical) {
        out << "condition = segre\n";
        out << "k23*k41 = " << (params.k23 * params.k41).str() << ", k14*k32 = "
            << (params.k14 * params.k32).str() << "\n";
        out << "toric = " << (segre_toric(params) ? "yes" : "no") << "\n";
    } else if (support == subnetwork1) {
        auto binomials = subnetwork1_binomials(params);
        out << "condition = subnetwork1-binomials\n";
        out << "k14*k32 - k23*k41 = " << binomials[0].str() << "\n";
        out << "k12*k32*k41 - k14*k21*k23 = " << binomials[1].str() << "\n";
        out << "toric = " << (subnetwork1_toric(params) ? "yes" : "no") << "\n";
    } else {
        bool toric = is_toric_square(params);  // throws unless strongly connected
        auto k = matrix_tree(square_complex_network(), to_rate_assignment(params));
        auto minors = twisted_cubic_minors({k[0], k[1], k[2], k[3]});
        out << "condition = twisted-cubic-minors\n";
        out << "K = (" << k[0].str() << ", " << k[1].str() << ", " << k[2].str() << ", "
            << k[3].str() << ")\n";
        out << "minors = (" << minors[0].str() << ", " << minors[1].str() << ", "
            << minors[2].str() << ")\n";
        out << "toric = " << (toric ? "yes" : "no") << "\n";
    }
}

void run_enumerate(std::ostream& out) {
    ReversibleEnumeration enumeration = enumerate_reversible_multistationary();
    out << "reversible multistationary networks = " << enumeration.networks.size() << "\n";
    out << "histogram:";
    bool first = true;
    for (const auto& [edges, count] : enumeration.histogram) {
        out << (first ? " " : ", ") << edges << "-edge: " << count;
        first = false;
    }
    out << "\n";
    int index = 0;
    for (const ReversibleNetwork& network : enumeration.networks) {
        out << "[" << ++index << "] " << network.undirected.size() << " edges:";
        for (const Edge& e : network.undirected) out << " " << e.first << "<->" << e.second;
        auto witness = witness_parameters(network.support);
        if (!witness) {
            out << " | no witness\n";
            continue;
        }
        out << " | witness (" << witness->classification.steady_state_count << " steady states):";
        for (const Edge& e : SquareParams::admissible_edges()) {
            const Rational& rate = witness->params.at(e.first, e.second);
            if (!rate.is_zero()) out << " " << edge_key(e) << "=" << rate.str();
        }
        out << "\n";
    }
}

void run_sweep(std::ostream& out, const std::vector<std::string>& range_specs,
               const std::string& out_path) {
    std::map<std::string, SweepRange> ranges;
    for (const std::string& spec : range_specs) {
        SweepRangeSpec parsed = parse_range_spec(spec);
        if (!ranges.emplace(parsed.key, parsed.range).second)
            throw std::invalid_argument("duplicate range for " + parsed.key);
    }
    for (const char* key : {"k14", "k23", "k32"}) {
        if (!ranges.count(key)) throw std::invalid_argument(std::string("missing --range for ") + key);
    }
    if (ranges.size() != 3) throw std::invalid_argument("ranges must cover exactly k14, k23, k32");

    auto records = figure1_sweep(ranges["k14"], ranges["k23"], ranges["k32"]);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    write_sweep_csv(file, records);
    out << "wrote " << records.size() << " records to " << out_path << "\n";
}

void run_discriminant(std::ostream& out, const std::string& family_name, bool terms_only) {
    DiscriminantFamily family;
    if (family_name == "general") {
        family = DiscriminantFamily::General12;
    } else if (family_name == "square") {
        family = DiscriminantFamily::Square8;
    } else if (family_name == "vertical") {
        family = DiscriminantFamily::Vertical4;
    } else {
        throw std::invalid_argument("unknown family '" + family_name + "'");
    }
    MultivariatePolynomial d = symbolic_discriminant(family);
    if (terms_only) {
        out << d.term_count() << "\n";
    } else {
        out << d.str() << "\n";
    }
}

void run_hornjackson(std::ostream& out, const std::string& variant_name, const std::string& eps_text) {
    HornJacksonVariant variant;
    if (variant_name == "printed") {
        variant = HornJacksonVariant::Printed;
    } else if (variant_name == "cycle") {
        variant = HornJacksonVariant::Cycle;
    } else {
        throw std::invalid_argument("unknown variant '" + variant_name + "'");
    }
    Rational eps = Rational::parse(eps_text);
    SquareParams params = horn_jackson_params(variant, eps);
    out << "variant = " << variant_name << ", eps = " << eps.str() << "\n";
    out << "k =";
    for (const Edge& e : SquareParams::admissible_edges()) {
        const Rational& rate = params.at(e.first, e.second);
        if (!rate.is_zero()) out << " " << edge_key(e) << "=" << rate.str();
    }
    out << "\n";
    print_classification(out, classify(params));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steady-state analysis of mass-action networks on the complexes c1^3, c1 c2^2, c2^3, c1^2 c2", "crn"};
    app.require_subcommand(1);

    std::string network_path;
    auto* info = app.add_subcommand("info", "Structural report for a .crn network file");
    info->add_option("network", network_path, "network file (.crn)")->required();

    std::string params_path;
    bool as_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "Exact steady-state classification");
    classify_cmd->add_option("--params", params_path, "rate parameter file")->required();
    classify_cmd->add_flag("--json", as_json, "machine-readable output");

    std::string roots_params;
    double total = 0;
    auto* roots_cmd = app.add_subcommand("roots", "Refined roots and concentrations on c1 + c2 = T");
    roots_cmd->add_option("--params", roots_params, "rate parameter file")->required();
    roots_cmd->add_option("--total", total, "conservation total T")->required();

    std::string sim_params, sim_init, sim_out;
    double t_end = 0, dt = 0;
    auto* simulate_cmd = app.add_subcommand("simulate", "Fixed-step RK4 integration, CSV output");
    simulate_cmd->add_option("--params", sim_params, "rate parameter file")->required();
    simulate_cmd->add_option("--init", sim_init, "initial concentrations c1,c2")->required();
    simulate_cmd->add_option("--t-end", t_end, "integration horizon")->required();
    simulate_cmd->add_option("--dt", dt, "step size")->required();
    simulate_cmd->add_option("--out", sim_out, "trajectory CSV path")->required();

    std::string toric_params;
    auto* toric_cmd = app.add_subcommand("toric", "Toric / complex-balancing condition for the support");
    toric_cmd->add_option("--params", toric_params, "rate parameter file")->required();

    app.add_subcommand("enumerate", "The reversible multistationary networks with witnesses");

    std::vector<std::string> range_specs;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "Vertical-family grid scan at k41 = 1");
    sweep_cmd->add_option("--range", range_specs, "k14=lo:hi:step (three ranges: k14, k23, k32)")
        ->required()
        ->expected(3);
    sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();

    std::string family_name;
    bool terms_only = false;
    auto* disc_cmd = app.add_subcommand("discriminant", "Symbolic discriminant of p");
    disc_cmd->add_option("--family", family_name, "general | square | vertical")->required();
    disc_cmd->add_flag("--terms-only", terms_only, "print only the number of terms");

    std::string variant_name, eps_text;
    auto* hj_cmd = app.add_subcommand("hornjackson", "Classification of the epsilon rate vectors");
    hj_cmd->add_option("--variant", variant_name, "printed | cycle")->required();
    hj_cmd->add_option("--eps", eps_text, "epsilon (exact rational)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (info->parsed()) run_info(out, network_path);
        if (classify_cmd->parsed()) run_classify(out, params_path, as_json);
        if (roots_cmd->parsed()) run_roots(out, roots_params, total);
        if (simulate_cmd->parsed()) run_simulate(out, sim_params, sim_init, t_end, dt, sim_out);
        if (toric_cmd->parsed()) run_toric(out, toric_params);
        if (app.get_subcommand("enumerate")->parsed()) run_enumerate(out);
        if (sweep_cmd->parsed()) run_sweep(out, range_specs, sweep_out);
        if (disc_cmd->parsed()) run_discriminant(out, family_name, terms_only);
        if (hj_cmd->parsed()) run_hornjackson(out, variant_name, eps_text);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

nlohmann::json classification_to_json(const Classification& c) {
    nlohmann::json j;
    j["S"] = {c.coefficients.S0.str(), c.coefficients.S1.str(), c.coefficients.S2.str(),
              c.coefficients.S3.str()};
    j["p"] = p_polynomial(c.coefficients).str();
    j["degenerate_continuum"] = c.degenerate_continuum;
    j["steady_state_count"] = c.steady_state_count;
    j["stable_count"] = c.stable_count;
    if (c.discriminant) {
        j["discriminant"] = {{"value", c.discriminant->value.str()},
                             {"effective_degree", c.discriminant->effective_degree}};
    } else {
        j["discriminant"] = nullptr;
    }
    j["roots"] = nlohmann::json::array();
    for (const ClassifiedRoot& root : c.roots) {
        j["roots"].push_back({{"interval", {root.lo.str(), root.hi.str()}},
                              {"value", root.value},
                              {"multiplicity", root.multiplicity},
                              {"stability", stability_name(root.stability)}});
    }
    return j;
}

Classification classification_from_json(const nlohmann::json& j) {
    Classification c;
    c.coefficients.S0 = Rational::parse(j.at("S").at(0).get<std::string>());
    c.coefficients.S1 = Rational::parse(j.at("S").at(1).get<std::string>());
    c.coefficients.S2 = Rational::parse(j.at("S").at(2).get<std::string>());
    c.coefficients.S3 = Rational::parse(j.at("S").at(3).get<std::string>());
    c.degenerate_continuum = j.at("degenerate_continuum").get<bool>();
    c.steady_state_count = j.at("steady_state_count").get<int>();
    c.stable_count = j.at("stable_count").get<int>();
    if (!j.at("discriminant").is_null()) {
        DeflatedDiscriminant d;
        d.value = Rational::parse(j.at("discriminant").at("value").get<std::string>());
        d.effective_degree = j.at("discriminant").at("effective_degree").get<int>();
        c.discriminant = d;
    }
    for (const auto& root : j.at("roots")) {
        ClassifiedRoot r;
        r.lo = Rational::parse(root.at("interval").at(0).get<std::string>());
        r.hi = Rational::parse(root.at("interval").at(1).get<std::string>());
        r.value = root.at("value").get<double>();
        r.multiplicity = root.at("multiplicity").get<int>();
        std::string stability = root.at("stability").get<std::string>();
        r.stability = stability == "stable" ? Stability::Stable
                      : stability == "unstable" ? Stability::Unstable
                                                : Stability::Semistable;
        c.roots.push_back(std::move(r));
    }
    return c;
}

}  // namespace crn::cli
