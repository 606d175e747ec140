#include "crn/toric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace crn {

namespace {

constexpr int kMaxComplexes = 8;

/// All spanning arborescences of the given digraph directed toward root:
/// edge sets in which every other vertex has exactly one outgoing edge and
/// every path of chosen edges ends at root.
std::vector<std::vector<Edge>> arborescences_toward(int num_vertices, const std::vector<Edge>& edges,
                                                    int root) {
    std::vector<std::vector<Edge>> out_edges(num_vertices);
    for (const Edge& e : edges)
        if (e.first != root) out_edges[e.first].push_back(e);

    std::vector<int> vertices;
    for (int v = 0; v < num_vertices; ++v)
        if (v != root) vertices.push_back(v);
    for (int v : vertices)
        if (out_edges[v].empty()) return {};

    std::vector<std::vector<Edge>> result;
    std::vector<Edge> chosen(vertices.size());
    std::function<void(size_t)> recurse = [&](size_t index) {
        if (index == vertices.size()) {
            // Every vertex must drain to the root without cycling.
            std::vector<int> next(num_vertices, -1);
            for (const Edge& e : chosen) next[e.first] = e.second;
            for (int v : vertices) {
                int w = v;
                for (int hops = 0; w != root; ++hops) {
                    if (hops > num_vertices) return;
                    w = next[w];
                }
            }
            result.push_back(chosen);
            return;
        }
        for (const Edge& e : out_edges[vertices[index]]) {
            chosen[index] = e;
            recurse(index + 1);
        }
    };
    recurse(0);
    return result;
}

std::vector<Edge> support_edges(const Network& net, const RateAssignment& rates) {
    for (const auto& [edge, rate] : rates.values())
        if (!net.has_edge(edge.first, edge.second))
            throw std::invalid_argument("rate assigned to a non-edge");
    std::vector<Edge> support;
    for (const Edge& e : net.edges())
        if (rates.get(e).sign() > 0) support.push_back(e);
    return support;
}

void check_size(const Network& net) {
    if (net.num_complexes() > kMaxComplexes)
        throw std::domain_error("tree-constant enumeration is limited to 8 complexes");
}

bool support_is(const SquareParams& params, const std::set<Edge>& expected) {
    return params.support() == expected;
}

}  // namespace

std::vector<Rational> matrix_tree(const Network& net, const RateAssignment& rates) {
    check_size(net);
    const int n = net.num_complexes();
    std::vector<Edge> support = support_edges(net, rates);
    std::vector<Rational> k(n, Rational(0));
    for (int root = 0; root < n; ++root) {
        for (const auto& tree : arborescences_toward(n, support, root)) {
            Rational product(1);
            for (const Edge& e : tree) product *= rates.get(e);
            k[root] += product;
        }
    }
    return k;
}

std::vector<MultivariatePolynomial> matrix_tree_symbolic(const Network& net) {
    check_size(net);
    const int n = net.num_complexes();
    std::vector<Edge> edges = net.edges();
    std::sort(edges.begin(), edges.end());
    std::vector<std::string> variables;
    variables.reserve(edges.size());
    for (const Edge& e : edges) variables.push_back(edge_key({e.first + 1, e.second + 1}));
    auto variable_index = [&](const Edge& e) {
        return static_cast<int>(std::find(edges.begin(), edges.end(), e) - edges.begin());
    };

    std::vector<MultivariatePolynomial> k(n, MultivariatePolynomial(variables));
    for (int root = 0; root < n; ++root) {
        for (const auto& tree : arborescences_toward(n, edges, root)) {
            MultivariatePolynomial::Exponents exponents(variables.size(), 0);
            for (const Edge& e : tree) exponents[variable_index(e)] += 1;
            k[root].add_term(exponents, Rational(1));
        }
    }
    return k;
}

std::vector<Rational> matrix_tree_cofactor(const Network& net, const RateAssignment& rates) {
    check_size(net);
    const int n = net.num_complexes();
    RationalMatrix a = laplacian_matrix(net, rates);
    std::vector<Rational> k(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        RationalMatrix minor(n - 1, n - 1);
        for (int r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 0, mc = 0; c < n; ++c) {
                if (c == i) continue;
                minor(mr, mc) = a(r, c);
                ++mc;
            }
            ++mr;
        }
        Rational det = rational_determinant(minor);
        k[i] = (n - 1) % 2 == 1 ? -det : det;
    }
    return k;
}

std::vector<Rational> matrix_tree_per_class(const Network& net, const RateAssignment& rates) {
    check_size(net);
    const int n = net.num_complexes();
    std::vector<Edge> support = support_edges(net, rates);

    // Linkage classes of the support subgraph (isolated vertices stand alone).
    std::vector<int> label(n);
    for (int v = 0; v < n; ++v) label[v] = v;
    std::function<int(int)> find = [&](int v) { return label[v] == v ? v : label[v] = find(label[v]); };
    for (const Edge& e : support) label[find(e.first)] = find(e.second);

    std::vector<Rational> k(n, Rational(0));
    for (int root = 0; root < n; ++root) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (find(v) == find(root)) members.push_back(v);
        // Relabel the class 0..m-1 and enumerate inside it.
        std::vector<int> position(n, -1);
        for (size_t p = 0; p < members.size(); ++p) position[members[p]] = static_cast<int>(p);
        std::vector<Edge> inner;
        for (const Edge& e : support)
            if (position[e.first] >= 0 && position[e.second] >= 0)
                inner.push_back({position[e.first], position[e.second]});
        int m = static_cast<int>(members.size());
        if (m == 1) {
            k[root] = Rational(1);
            continue;
        }
        for (const auto& tree : arborescences_toward(m, inner, position[root])) {
            Rational product(1);
            for (const Edge& e : tree) product *= rates.get({members[e.first], members[e.second]});
            k[root] += product;
        }
    }
    return k;
}

std::array<Rational, 3> twisted_cubic_minors(const std::array<Rational, 4>& k) {
    return {k[0] * k[2] - k[1] * k[3], k[0] * k[1] - k[3] * k[3], k[1] * k[1] - k[2] * k[3]};
}

bool is_toric_square(const SquareParams& params) {
    params.validate();
    std::vector<Edge> support;
    for (const Edge& e : params.support()) support.push_back({e.first - 1, e.second - 1});
    if (!strongly_connected(4, support))
        throw std::domain_error("support is not strongly connected; tree constants all vanish");
    std::vector<Rational> k = matrix_tree(square_complex_network(), to_rate_assignment(params));
    auto minors = twisted_cubic_minors({k[0], k[1], k[2], k[3]});
    return minors[0].is_zero() && minors[1].is_zero() && minors[2].is_zero();
}

std::array<Rational, 4> subnetwork1_binomials(const SquareParams& params) {
    return {
        params.k14 * params.k32 - params.k23 * params.k41,
        params.k12 * params.k32 * params.k41 - params.k14 * params.k21 * params.k23,
        params.k14 * params.k14 * params.k21 - params.k12 * params.k41 * params.k41,
        params.k12 * params.k32 * params.k32 - params.k21 * params.k23 * params.k23,
    };
}

bool subnetwork1_toric(const SquareParams& params) {
    params.validate();
    static const std::set<Edge> expected = {{1, 2}, {1, 4}, {2, 1}, {2, 3}, {3, 2}, {4, 1}};
    if (!support_is(params, expected))
        throw std::domain_error("expected positive rates exactly on k12, k14, k21, k23, k32, k41");
    return params.k14 * params.k32 == params.k23 * params.k41 &&
           params.k12 * params.k32 * params.k41 == params.k14 * params.k21 * params.k23;
}

bool segre_toric(const SquareParams& params) {
    params.validate();
    static const std::set<Edge> expected = {{1, 4}, {2, 3}, {3, 2}, {4, 1}};
    if (!support_is(params, expected))
        throw std::domain_error("expected positive rates exactly on k14, k23, k32, k41");
    return params.k23 * params.k41 == params.k14 * params.k32;
}

}  // namespace crn
