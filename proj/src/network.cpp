#include "crn/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crn {

Network::Network(std::vector<std::string> species, Eigen::MatrixXi exponents, std::vector<Edge> edges)
    : species_(std::move(species)), exponents_(std::move(exponents)), edges_(std::move(edges)) {
    const int n = num_complexes();
    const int s = num_species();
    if (s != static_cast<int>(species_.size()))
        throw std::invalid_argument("species list length does not match exponent matrix");
    if (exponents_.size() > 0 && exponents_.minCoeff() < 0)
        throw std::invalid_argument("complex exponents must be nonnegative");

    std::set<std::vector<int>> seen;
    for (int i = 0; i < n; ++i) {
        std::vector<int> row(s);
        for (int j = 0; j < s; ++j) row[j] = exponents_(i, j);
        if (!seen.insert(row).second) throw std::invalid_argument("duplicate complex");
    }
    if (n >= 1) {
        for (int j = 0; j < s; ++j) {
            if (exponents_.col(j).isZero())
                throw std::invalid_argument("species '" + species_[j] + "' appears in no complex");
        }
    }
    std::set<Edge> edge_set;
    for (const Edge& e : edges_) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.first == e.second) throw std::invalid_argument("self-loop edge");
        if (!edge_set.insert(e).second) throw std::invalid_argument("duplicate edge");
    }
}

bool Network::has_edge(int from, int to) const {
    return std::find(edges_.begin(), edges_.end(), Edge{from, to}) != edges_.end();
}

std::string Network::complex_name(int index) const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < num_species(); ++j) {
        int e = exponents_(index, j);
        if (e == 0) continue;
        if (!first) os << " + ";
        if (e > 1) os << e << " ";
        os << species_[j];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void RateAssignment::set(const Edge& edge, const Rational& rate) {
    if (rate.sign() < 0) throw std::invalid_argument("negative rate constant");
    rates_[edge] = rate;
}

const Rational& RateAssignment::get(const Edge& edge) const {
    static const Rational zero(0);
    auto it = rates_.find(edge);
    return it == rates_.end() ? zero : it->second;
}

Eigen::VectorXd psi(const Network& net, const Eigen::VectorXd& concentrations) {
    if (concentrations.size() != net.num_species())
        throw std::invalid_argument("concentration vector length does not match species count");
    const auto& y = net.exponent_matrix();
    Eigen::VectorXd out(net.num_complexes());
    for (int i = 0; i < net.num_complexes(); ++i) {
        double m = 1.0;
        for (int j = 0; j < net.num_species(); ++j) {
            for (int e = 0; e < y(i, j); ++e) m *= concentrations[j];
        }
        out[i] = m;
    }
    return out;
}

RationalMatrix laplacian_matrix(const Network& net, const RateAssignment& rates) {
    const int n = net.num_complexes();
    for (const auto& [edge, rate] : rates.values()) {
        if (!net.has_edge(edge.first, edge.second))
            throw std::invalid_argument("rate assigned to a non-edge");
    }
    RationalMatrix a(n, n);
    a.setConstant(Rational(0));
    for (const Edge& e : net.edges()) {
        const Rational& k = rates.get(e);
        a(e.first, e.second) = k;
        a(e.first, e.first) -= k;
    }
    return a;
}

std::vector<std::vector<int>> linkage_classes(const Network& net) {
    const int n = net.num_complexes();
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> adjacency(n);
    for (const Edge& e : net.edges()) {
        adjacency[e.first].push_back(e.second);
        adjacency[e.second].push_back(e.first);
    }
    std::vector<std::vector<int>> classes;
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        std::vector<int> stack{start};
        label[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            classes[id].push_back(v);
            for (int w : adjacency[v]) {
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(classes[id].begin(), classes[id].end());
    }
    return classes;
}

int stoichiometric_dimension(const Network& net) {
    const auto& y = net.exponent_matrix();
    const int s = net.num_species();
    Eigen::MatrixXi differences(static_cast<int>(net.edges().size()), s);
    int row = 0;
    for (const Edge& e : net.edges())
        differences.row(row++) = y.row(e.second) - y.row(e.first);
    return integer_rank(differences);
}

int deficiency(const Network& net) {
    int n = net.num_complexes();
    int l = static_cast<int>(linkage_classes(net).size());
    return n - l - stoichiometric_dimension(net);
}

bool is_mass_preserving(const Network& net) {
    if (net.num_complexes() == 0) throw std::domain_error("mass preservation of an empty network");
    Eigen::VectorXi degrees = net.exponent_matrix().rowwise().sum();
    return (degrees.array() == degrees[0]).all();
}

bool is_reversible(const Network& net) {
    for (const Edge& e : net.edges())
        if (!net.has_edge(e.second, e.first)) return false;
    return true;
}

std::vector<Eigen::VectorXi> conservation_basis(const Network& net) {
    const auto& y = net.exponent_matrix();
    const int s = net.num_species();
    const int m = static_cast<int>(net.edges().size());

    RationalMatrix a(m, s);
    int row = 0;
    for (const Edge& e : net.edges()) {
        for (int j = 0; j < s; ++j) a(row, j) = Rational(y(e.second, j) - y(e.first, j));
        ++row;
    }

    // Reduced row echelon form over the rationals.
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < s && r < m; ++c) {
        int pivot = -1;
        for (int i = r; i < m; ++i) {
            if (!a(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        a.row(r).swap(a.row(pivot));
        Rational inv = Rational(1) / a(r, c);
        for (int j = 0; j < s; ++j) a(r, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational factor = a(i, c);
            for (int j = 0; j < s; ++j) a(i, j) -= factor * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(s, false);
    for (int c : pivot_cols) is_pivot[c] = true;

    std::vector<Eigen::VectorXi> basis;
    for (int free = 0; free < s; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(s);
        for (int j = 0; j < s; ++j) v[j] = Rational(0);
        v[free] = Rational(1);
        for (size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(static_cast<int>(k), free);

        // Scale to a primitive integer vector with positive leading entry.
        mpz_class lcm_den(1);
        for (int j = 0; j < s; ++j) lcm_den = lcm(lcm_den, v[j].value().get_den());
        mpz_class gcd_num(0);
        std::vector<mpz_class> scaled(s);
        for (int j = 0; j < s; ++j) {
            mpq_class q = v[j].value() * mpq_class(lcm_den);
            scaled[j] = q.get_num();
            gcd_num = gcd(gcd_num, scaled[j]);
        }
        if (gcd_num == 0) gcd_num = 1;
        Eigen::VectorXi out(s);
        int lead_sign = 0;
        for (int j = 0; j < s; ++j) {
            mpz_class e = scaled[j] / gcd_num;
            if (lead_sign == 0 && e != 0) lead_sign = sgn(e);
            out[j] = static_cast<int>(e.get_si());
        }
        if (lead_sign < 0) out = -out;
        basis.push_back(out);
    }
    return basis;
}

bool strongly_connected(int num_vertices, const std::vector<Edge>& edges) {
    if (num_vertices <= 1) return true;
    std::vector<std::vector<int>> fwd(num_vertices), rev(num_vertices);
    for (const Edge& e : edges) {
        fwd[e.first].push_back(e.second);
        rev[e.second].push_back(e.first);
    }
    auto reaches_all = [num_vertices](const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(num_vertices, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int visited = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++visited;
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return visited == num_vertices;
    };
    return reaches_all(fwd) && reaches_all(rev);
}

int integer_rank(const Eigen::MatrixXi& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    if (rows == 0 || cols == 0) return 0;

    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m(i, j);

    mpz_class prev(1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

Rational rational_determinant(const RationalMatrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);

    // Gaussian elimination with exact arithmetic.
    RationalMatrix a = m;
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i) {
            if (!a(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            a.row(c).swap(a.row(pivot));
            det = -det;
        }
        det *= a(c, c);
        Rational inv = Rational(1) / a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Rational factor = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
        }
    }
    return det;
}

}  // namespace crn
