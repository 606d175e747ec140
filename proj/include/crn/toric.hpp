#ifndef CRN_TORIC_HPP
#define CRN_TORIC_HPP

#include "crn/multipoly.hpp"
#include "crn/network.hpp"
#include "crn/square.hpp"

#include <array>
#include <vector>

namespace crn {

/// Matrix-Tree constants: K_i is the sum over spanning arborescences of
/// the rate support directed toward complex i of the product of edge
/// rates, enumerated exhaustively (networks up to 8 complexes). All K_i
/// vanish when the support does not span the whole vertex set.
std::vector<Rational> matrix_tree(const Network& net, const RateAssignment& rates);

/// Symbolic variant over all structural edges: variables named k<i+1><j+1>
/// in edge-sorted order.
std::vector<MultivariatePolynomial> matrix_tree_symbolic(const Network& net);

/// K_i of the i-th cofactor of the Laplacian: (-1)^(n-1) det of A_k with
/// row and column i removed. Equals matrix_tree; kept as an independent
/// route for cross-checks.
std::vector<Rational> matrix_tree_cofactor(const Network& net, const RateAssignment& rates);

/// Tree constants computed within each linkage class of the rate support:
/// entry i is the arborescence sum toward i restricted to i's class. For a
/// connected support this equals matrix_tree; for a disconnected one (for
/// example the vertical subnetwork) the whole-graph constants vanish while
/// these stay meaningful.
std::vector<Rational> matrix_tree_per_class(const Network& net, const RateAssignment& rates);

/// The 2x2 minors (K1 K3 - K2 K4, K1 K2 - K4^2, K2^2 - K3 K4) of
///   [ K1  K2  K4 ]
///   [ K4  K3  K2 ].
/// They vanish exactly on the twisted cubic curve.
std::array<Rational, 3> twisted_cubic_minors(const std::array<Rational, 4>& k);

/// Whether the mass-action system on the (strongly connected) support of
/// the given rates is a toric dynamical system: all three twisted-cubic
/// minors of the tree constants vanish. Throws std::domain_error when the
/// support is not strongly connected on the four complexes.
bool is_toric_square(const SquareParams& params);

/// Toric condition for the subnetwork with the bottom edge removed
/// (positive rates k12, k14, k21, k23, k32, k41, all others zero):
/// k14 k32 = k23 k41 and k12 k32 k41 = k14 k21 k23. Throws when the
/// support is not exactly these six edges.
bool subnetwork1_toric(const SquareParams& params);

/// The four published binomial generators for the same subnetwork; they
/// vanish simultaneously iff the reduced pair above does.
std::array<Rational, 4> subnetwork1_binomials(const SquareParams& params);

/// Toric condition for the vertical subnetwork (positive k14, k23, k32,
/// k41, all others zero): the Segre equation k23 k41 = k14 k32. Throws on
/// any other support.
bool segre_toric(const SquareParams& params);

}  // namespace crn

#endif  // CRN_TORIC_HPP
