#include "crn/square.hpp"

#include "crn/parser.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crn {

namespace {

// One row per contribution of a rate constant to a signed coefficient S_i.
struct SignedCoefficientEntry {
    Edge edge;
    int s_index;
    int coeff;
};

constexpr std::array<SignedCoefficientEntry, 12> kSignedCoefficients = {{
    {{1, 2}, 0, 2},  {{1, 3}, 0, 3},  {{1, 4}, 0, 1},
    {{4, 1}, 1, 1},  {{4, 2}, 1, -1}, {{4, 3}, 1, -2},
    {{2, 1}, 2, -2}, {{2, 3}, 2, 1},  {{2, 4}, 2, -1},
    {{3, 1}, 3, 3},  {{3, 2}, 3, 1},  {{3, 4}, 3, 2},
}};

const Rational kWitnessBaseline(1, 100);

}  // namespace

const std::vector<Edge>& SquareParams::admissible_edges() {
    static const std::vector<Edge> edges = {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4},
                                            {3, 1}, {3, 2}, {3, 4}, {4, 1}, {4, 2}, {4, 3}};
    return edges;
}

Rational& SquareParams::at(int from, int to) {
    if (from == 1 && to == 2) return k12;
    if (from == 1 && to == 3) return k13;
    if (from == 1 && to == 4) return k14;
    if (from == 2 && to == 1) return k21;
    if (from == 2 && to == 3) return k23;
    if (from == 2 && to == 4) return k24;
    if (from == 3 && to == 1) return k31;
    if (from == 3 && to == 2) return k32;
    if (from == 3 && to == 4) return k34;
    if (from == 4 && to == 1) return k41;
    if (from == 4 && to == 2) return k42;
    if (from == 4 && to == 3) return k43;
    throw std::out_of_range("no such rate constant: k" + std::to_string(from) + std::to_string(to));
}

const Rational& SquareParams::at(int from, int to) const {
    return const_cast<SquareParams*>(this)->at(from, to);
}

bool SquareParams::trivial() const {
    for (const Edge& e : admissible_edges())
        if (!at(e.first, e.second).is_zero()) return false;
    return true;
}

std::set<Edge> SquareParams::support() const {
    std::set<Edge> out;
    for (const Edge& e : admissible_edges())
        if (at(e.first, e.second).sign() > 0) out.insert(e);
    return out;
}

void SquareParams::validate() const {
    for (const Edge& e : admissible_edges())
        if (at(e.first, e.second).sign() < 0)
            throw std::invalid_argument("negative rate constant " + edge_key(e));
}

std::string edge_key(const Edge& edge) {
    return "k" + std::to_string(edge.first) + std::to_string(edge.second);
}

SquareParams parse_square_params(const std::string& text) {
    SquareParams params;
    std::set<std::string> seen;
    std::istringstream input(text);
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected `key = value`");
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.size() != 3 || key[0] != 'k' || !std::isdigit(static_cast<unsigned char>(key[1])) ||
            !std::isdigit(static_cast<unsigned char>(key[2])))
            throw ParseError(line_no, "unknown key '" + key + "'");
        int from = key[1] - '0';
        int to = key[2] - '0';
        const auto& edges = SquareParams::admissible_edges();
        if (std::find(edges.begin(), edges.end(), Edge{from, to}) == edges.end())
            throw ParseError(line_no, "unknown key '" + key + "'");
        if (!seen.insert(key).second) throw ParseError(line_no, "duplicate key '" + key + "'");
        Rational rate;
        try {
            rate = Rational::parse(value);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (rate.sign() < 0) throw ParseError(line_no, "rate must be nonnegative: " + key);
        params.at(from, to) = rate;
    }
    return params;
}

const Network& square_complex_network() {
    static const Network net = [] {
        Eigen::MatrixXi y(4, 2);
        y << 3, 0, 1, 2, 0, 3, 2, 1;
        std::vector<Edge> edges;
        for (const Edge& e : SquareParams::admissible_edges()) edges.push_back({e.first - 1, e.second - 1});
        return Network({"c1", "c2"}, y, edges);
    }();
    return net;
}

const Network& square_network() {
    static const Network net = [] {
        Eigen::MatrixXi y(4, 2);
        y << 3, 0, 1, 2, 0, 3, 2, 1;
        std::vector<Edge> edges = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}};
        return Network({"c1", "c2"}, y, edges);
    }();
    return net;
}

RateAssignment to_rate_assignment(const SquareParams& params) {
    params.validate();
    RateAssignment rates;
    for (const Edge& e : SquareParams::admissible_edges())
        rates.set({e.first - 1, e.second - 1}, params.at(e.first, e.second));
    return rates;
}

CubicForm signed_coefficients(const SquareParams& params) {
    params.validate();
    Rational s[4] = {Rational(0), Rational(0), Rational(0), Rational(0)};
    for (const auto& entry : kSignedCoefficients)
        s[entry.s_index] += Rational(entry.coeff) * params.at(entry.edge.first, entry.edge.second);
    return {s[0], s[1], s[2], s[3]};
}

RationalPolynomial p_polynomial(const CubicForm& f) {
    return RationalPolynomial{f.S3, -f.S2, f.S1, -f.S0};
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Unstable: return "unstable";
        case Stability::Semistable: return "semistable";
    }
    return "?";
}

Classification classify(const SquareParams& params) {
    params.validate();
    if (params.trivial()) throw std::domain_error("trivial network: all rate constants are zero");

    Classification result;
    result.coefficients = signed_coefficients(params);
    RationalPolynomial p = p_polynomial(result.coefficients);

    if (p.is_zero()) {
        result.degenerate_continuum = true;
        return result;
    }

    const CubicForm& f = result.coefficients;
    result.discriminant = deflated_discriminant(f.S0, f.S1, f.S2, f.S3);

    RootCount roots = sturm_positive_roots(p);
    result.steady_state_count = roots.distinct_positive;

    const RationalPolynomial squarefree = p.squarefree_part();
    const Rational tol(1, 1000000000000000L);  // 1e-15, so T^3-scaled residuals stay small
    for (const IsolatedRoot& root : roots.roots) {
        int sign_lo = p(root.lo).sign();
        int sign_hi = p(root.hi).sign();
        Stability stability = Stability::Semistable;
        if (sign_lo > 0 && sign_hi < 0) stability = Stability::Stable;
        if (sign_lo < 0 && sign_hi > 0) stability = Stability::Unstable;
        double value = refine_root(squarefree, root.lo, root.hi, tol);
        result.roots.push_back({root.lo, root.hi, value, root.multiplicity, stability});
        if (stability == Stability::Stable) ++result.stable_count;
    }
    return result;
}

bool triple_root_condition(const CubicForm& f) {
    if (f.S0.sign() <= 0) throw std::domain_error("triple root condition requires S0 > 0");
    return Rational(3) * f.S0 * f.S2 == f.S1 * f.S1 &&
           Rational(27) * f.S0 * f.S0 * f.S3 == f.S1 * f.S1 * f.S1;
}

Table1Result table1_predicate(const CubicForm& f) {
    DeflatedDiscriminant d;
    try {
        d = deflated_discriminant(f.S0, f.S1, f.S2, f.S3);
    } catch (const std::domain_error&) {
        throw std::domain_error("no row matches: p is identically zero");
    }
    const int ds = d.value.sign();
    const int s0 = f.S0.sign(), s1 = f.S1.sign(), s2 = f.S2.sign(), s3 = f.S3.sign();
    const bool all_positive = s0 > 0 && s1 > 0 && s2 > 0 && s3 > 0;

    if (ds < 0) {
        if (s0 == 0 || s3 == 0) return {0, 0, 1};
        return {1, 1, 2};
    }
    if (ds > 0) {
        if (all_positive) return {3, 2, 3};
        if (s0 > 0 && s1 > 0 && s2 > 0 && s3 == 0) return {2, 1, 4};
        if (s1 > 0 && s2 > 0 && s3 > 0 && s0 == 0) return {2, 1, 5};
        if (s0 == 0 && s3 == 0 && s1 * s2 < 0) return {0, 0, 6};
        return {1, 1, 7};
    }
    if (all_positive) {
        if (triple_root_condition(f)) return {1, 1, 8};
        return {2, 1, 9};
    }
    if (s0 == 0 && s1 <= 0 && s2 >= 0 && s3 > 0) return {0, 0, 10};
    if (s3 == 0 && s1 <= 0 && s2 >= 0 && s0 > 0) return {0, 0, 11};
    return {2, 1, 12};
}

std::vector<Eigen::Vector2d> roots_to_concentrations(const std::vector<double>& roots, double total) {
    if (total <= 0) throw std::invalid_argument("concentration total must be positive");
    std::vector<Eigen::Vector2d> out;
    out.reserve(roots.size());
    for (double x : roots) {
        if (x <= 0) throw std::invalid_argument("roots must be positive");
        out.emplace_back(total * x / (1 + x), total / (1 + x));
    }
    return out;
}

bool capable_of_multistationarity(const std::set<Edge>& support) {
    if (!support.count({2, 3}) || !support.count({4, 1})) return false;
    for (const Edge& e : support)
        if (e.first == 1 || e.first == 3) return true;
    return false;
}

ReversibleEnumeration enumerate_reversible_multistationary() {
    static const std::array<Edge, 6> undirected = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    ReversibleEnumeration out;
    for (int mask = 0; mask < 64; ++mask) {
        ReversibleNetwork candidate;
        for (int bit = 0; bit < 6; ++bit) {
            if (!(mask & (1 << bit))) continue;
            candidate.undirected.insert(undirected[bit]);
            candidate.support.insert(undirected[bit]);
            candidate.support.insert({undirected[bit].second, undirected[bit].first});
        }
        if (!capable_of_multistationarity(candidate.support)) continue;
        out.histogram[static_cast<int>(candidate.undirected.size())] += 1;
        out.networks.push_back(std::move(candidate));
    }
    return out;
}

namespace {

/// Sets rates on the support so that the S_i of the given index hits
/// target exactly: entries with negative table coefficient keep the
/// baseline, one positive-coefficient edge absorbs the remainder.
bool solve_signed_coefficient(SquareParams& params, const std::set<Edge>& support, int s_index,
                              const Rational& target) {
    const SignedCoefficientEntry* chosen = nullptr;
    Rational rest(0);
    for (const auto& entry : kSignedCoefficients) {
        if (entry.s_index != s_index || !support.count(entry.edge)) continue;
        if (entry.coeff > 0 && chosen == nullptr) {
            chosen = &entry;
            continue;
        }
        rest += Rational(entry.coeff) * params.at(entry.edge.first, entry.edge.second);
    }
    if (chosen == nullptr) return target.is_zero();
    Rational value = (target - rest) / Rational(chosen->coeff);
    if (value.sign() < 0) return false;
    params.at(chosen->edge.first, chosen->edge.second) = value;
    return true;
}

std::optional<SquareParams> witness_for_targets(const std::set<Edge>& support, const CubicForm& target) {
    SquareParams params;
    for (const Edge& e : support) params.at(e.first, e.second) = kWitnessBaseline;
    const Rational targets[4] = {target.S0, target.S1, target.S2, target.S3};
    for (int i = 0; i < 4; ++i)
        if (!solve_signed_coefficient(params, support, i, targets[i])) return std::nullopt;
    return params;
}

}  // namespace

std::optional<MultistationarityWitness> witness_parameters(const std::set<Edge>& support) {
    if (!capable_of_multistationarity(support)) return std::nullopt;

    bool out_of_1 = false, out_of_3 = false;
    for (const Edge& e : support) {
        if (e.first == 1) out_of_1 = true;
        if (e.first == 3) out_of_3 = true;
    }

    // Targets: p = -(x-1)(x-2)(x-3) when S0 and S3 can both be positive,
    // else two positive roots {1, 2} with the zero coefficient dropped.
    std::vector<CubicForm> targets;
    if (out_of_1 && out_of_3) targets.push_back({Rational(1), Rational(6), Rational(11), Rational(6)});
    if (!out_of_3) targets.push_back({Rational(1), Rational(3), Rational(2), Rational(0)});
    if (!out_of_1) targets.push_back({Rational(0), Rational(1), Rational(3), Rational(2)});

    for (const CubicForm& target : targets) {
        auto params = witness_for_targets(support, target);
        if (!params) continue;
        Classification classification = classify(*params);
        int expected = (out_of_1 && out_of_3) ? 3 : 2;
        if (classification.steady_state_count == expected)
            return MultistationarityWitness{*params, std::move(classification)};
    }
    return std::nullopt;
}

std::vector<SweepRecord> figure1_sweep(const SweepRange& r14, const SweepRange& r23,
                                       const SweepRange& r32) {
    for (const SweepRange* r : {&r14, &r23, &r32}) {
        if (r->lo.sign() <= 0 || r->step.sign() <= 0 || r->hi < r->lo)
            throw std::invalid_argument("sweep ranges need 0 < lo <= hi and step > 0");
    }
    std::vector<SweepRecord> records;
    for (Rational k14 = r14.lo; k14 <= r14.hi; k14 += r14.step) {
        for (Rational k23 = r23.lo; k23 <= r23.hi; k23 += r23.step) {
            for (Rational k32 = r32.lo; k32 <= r32.hi; k32 += r32.step) {
                SquareParams params;
                params.k14 = k14;
                params.k23 = k23;
                params.k32 = k32;
                params.k41 = Rational(1);
                Classification c = classify(params);
                SweepRecord record;
                record.k14 = k14;
                record.k23 = k23;
                record.k32 = k32;
                record.d_sign = c.discriminant->value.sign();
                record.count = c.steady_state_count;
                record.stable = c.stable_count;
                record.toric = k23 == k14 * k32;
                record.disc_zero = record.d_sign == 0;
                record.triple = record.disc_zero && Rational(3) * k14 * k32 == k23;
                records.push_back(std::move(record));
            }
        }
    }
    return records;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "k14,k23,k32,D_sign,count,stable,toric,disc_zero,triple\n";
    char buffer[64];
    auto emit = [&](const Rational& r) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", r.to_double());
        os << buffer;
    };
    for (const SweepRecord& r : records) {
        emit(r.k14);
        os << ",";
        emit(r.k23);
        os << ",";
        emit(r.k32);
        os << "," << r.d_sign << "," << r.count << "," << r.stable << "," << (r.toric ? 1 : 0) << ","
           << (r.disc_zero ? 1 : 0) << "," << (r.triple ? 1 : 0) << "\n";
    }
}

MultivariatePolynomial symbolic_discriminant(DiscriminantFamily family) {
    std::vector<Edge> edges;
    switch (family) {
        case DiscriminantFamily::General12:
            edges = SquareParams::admissible_edges();
            break;
        case DiscriminantFamily::Square8:
            edges = {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 1}, {4, 3}};
            break;
        case DiscriminantFamily::Vertical4:
            edges = {{1, 4}, {2, 3}, {3, 2}, {4, 1}};
            break;
    }
    std::vector<std::string> variables;
    variables.reserve(edges.size());
    for (const Edge& e : edges) variables.push_back(edge_key(e));

    MultivariatePolynomial s[4] = {
        MultivariatePolynomial(variables), MultivariatePolynomial(variables),
        MultivariatePolynomial(variables), MultivariatePolynomial(variables)};
    for (const auto& entry : kSignedCoefficients) {
        auto it = std::find(edges.begin(), edges.end(), entry.edge);
        if (it == edges.end()) continue;
        int index = static_cast<int>(it - edges.begin());
        s[entry.s_index] =
            s[entry.s_index] + Rational(entry.coeff) * MultivariatePolynomial::variable(variables, index);
    }

    // Discriminant of ax^3 + bx^2 + cx + d at (a, b, c, d) = (-S0, S1, -S2, S3).
    MultivariatePolynomial a = -s[0], b = s[1], c = -s[2], d = s[3];
    return Rational(18) * (a * b * c * d) - Rational(4) * (b * b * b * d) + b * b * c * c -
           Rational(4) * (a * c * c * c) - Rational(27) * (a * a * d * d);
}

SquareParams horn_jackson_params(HornJacksonVariant variant, const Rational& eps) {
    if (eps.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
    SquareParams params;
    switch (variant) {
        case HornJacksonVariant::Printed:
            params.k12 = eps;
            params.k21 = Rational(1);
            params.k32 = eps;
            params.k41 = Rational(1);
            break;
        case HornJacksonVariant::Cycle:
            params.k12 = eps;
            params.k34 = eps;
            params.k23 = Rational(1);
            params.k41 = Rational(1);
            break;
    }
    return params;
}

}  // namespace crn
