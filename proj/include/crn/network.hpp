#ifndef CRN_NETWORK_HPP
#define CRN_NETWORK_HPP

#include "crn/rational.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace crn {

using Edge = std::pair<int, int>;

/// A reaction network: a finite directed graph whose vertices (complexes)
/// are labeled by monomial exponent vectors over the species. Immutable
/// after construction; ordering of species and complexes is fixed by the
/// constructor arguments (first-appearance order when built by the parser).
class Network {
public:
    Network() : exponents_(0, 0) {}
    Network(std::vector<std::string> species, Eigen::MatrixXi exponents, std::vector<Edge> edges);

    int num_species() const { return static_cast<int>(exponents_.cols()); }
    int num_complexes() const { return static_cast<int>(exponents_.rows()); }
    const std::vector<std::string>& species() const { return species_; }

    /// The n x s matrix whose row i is the exponent vector of complex i.
    const Eigen::MatrixXi& exponent_matrix() const { return exponents_; }

    /// Directed edges in insertion order; no self-loops, no duplicates.
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int from, int to) const;

    std::string complex_name(int index) const;

private:
    std::vector<std::string> species_;
    Eigen::MatrixXi exponents_;
    std::vector<Edge> edges_;
};

/// Rate constant per directed edge; zero means the reaction is absent.
/// Unset edges read as zero.
class RateAssignment {
public:
    RateAssignment() = default;

    /// Throws on negative rates.
    void set(const Edge& edge, const Rational& rate);
    const Rational& get(const Edge& edge) const;
    const Rational& get(int from, int to) const { return get({from, to}); }
    const std::map<Edge, Rational>& values() const { return rates_; }

private:
    std::map<Edge, Rational> rates_;
};

/// Monomial vector Psi(c): entry i is prod_k c_k^{y_ik}, with 0^0 = 1.
Eigen::VectorXd psi(const Network& net, const Eigen::VectorXd& concentrations);

/// The n x n matrix A_k: off-diagonal (i, j) entry is k_ij, rows sum to
/// zero. Rates on non-edges are rejected.
RationalMatrix laplacian_matrix(const Network& net, const RateAssignment& rates);

/// Connected components of the underlying undirected graph (structure
/// only). Classes are listed by smallest member, members ascending.
std::vector<std::vector<int>> linkage_classes(const Network& net);

/// n - l - dim span{y_j - y_i : (i,j) edge}, by exact integer rank.
int deficiency(const Network& net);

/// Dimension of the stoichiometric subspace span{y_j - y_i}.
int stoichiometric_dimension(const Network& net);

/// True iff every complex has the same total degree. Requires n >= 1.
bool is_mass_preserving(const Network& net);

/// True iff the edge set is symmetric.
bool is_reversible(const Network& net);

/// Primitive integer basis of {v : v . (y_j - y_i) = 0 for every edge}:
/// the conserved linear quantities.
std::vector<Eigen::VectorXi> conservation_basis(const Network& net);

/// Whether the digraph on vertices 0..n-1 with the given edges is strongly
/// connected. The empty and single-vertex graphs count as strongly
/// connected.
bool strongly_connected(int num_vertices, const std::vector<Edge>& edges);

/// Exact rank of an integer matrix by Bareiss fraction-free elimination.
int integer_rank(const Eigen::MatrixXi& m);

/// Exact determinant of a square rational matrix (cofactor expansion;
/// intended for small n).
Rational rational_determinant(const RationalMatrix& m);

}  // namespace crn

#endif  // CRN_NETWORK_HPP
