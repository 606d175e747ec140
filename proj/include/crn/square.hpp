#ifndef CRN_SQUARE_HPP
#define CRN_SQUARE_HPP

#include "crn/multipoly.hpp"
#include "crn/network.hpp"
#include "crn/polynomial.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace crn {

/// Rate constants for the family of networks on the four complexes
///   1 = c1^3,  2 = c1 c2^2,  3 = c2^3,  4 = c1^2 c2.
/// Edge labels are 1-based complex pairs matching the k_ij subscripts.
/// All rates are nonnegative; zero means the reaction is absent.
struct SquareParams {
    Rational k12, k13, k14, k21, k23, k24, k31, k32, k34, k41, k42, k43;

    /// The twelve admissible directed edges, (1,2), (1,3), ..., (4,3).
    static const std::vector<Edge>& admissible_edges();

    Rational& at(int from, int to);
    const Rational& at(int from, int to) const;

    bool trivial() const;
    /// Edges with strictly positive rate (1-based).
    std::set<Edge> support() const;
    /// Throws if any rate is negative.
    void validate() const;
};

/// "k12" for edge (1,2).
std::string edge_key(const Edge& edge);

/// Parses a parameter file: lines `k12 = 1/4`, keys among the twelve
/// admissible edges, missing keys default to zero. Blank lines and
/// '#' comments are ignored. Throws ParseError on unknown or duplicate
/// keys, malformed values, and negative rates.
SquareParams parse_square_params(const std::string& text);

/// The network with species {c1, c2}, the four family complexes, and all
/// twelve directed edges.
const Network& square_complex_network();

/// The Square itself: the reversible 4-cycle 1<->2<->3<->4<->1.
const Network& square_network();

/// Rates transferred onto square_complex_network (0-based edges).
RateAssignment to_rate_assignment(const SquareParams& params);

/// Signed coefficients of p: S0 = 2k12 + 3k13 + k14,
/// S1 = k41 - k42 - 2k43, S2 = -2k21 + k23 - k24, S3 = 3k31 + k32 + 2k34.
struct CubicForm {
    Rational S0, S1, S2, S3;
};

CubicForm signed_coefficients(const SquareParams& params);

/// p(x) = -S0 x^3 + S1 x^2 - S2 x + S3. Its positive roots in x = c1/c2
/// are the steady states on every invariant line c1 + c2 = T.
RationalPolynomial p_polynomial(const CubicForm& f);

enum class Stability { Stable, Unstable, Semistable };

const char* stability_name(Stability s);

struct ClassifiedRoot {
    Rational lo;   // isolating interval
    Rational hi;
    double value;  // refined to ~1e-15
    int multiplicity;
    Stability stability;
};

struct Classification {
    int steady_state_count = 0;
    int stable_count = 0;
    std::vector<ClassifiedRoot> roots;  // ascending
    /// p identically zero: every point of the invariant line is a steady
    /// state. No roots and no discriminant are reported.
    bool degenerate_continuum = false;
    std::optional<DeflatedDiscriminant> discriminant;
    CubicForm coefficients;
};

/// Exact count/stability classification. A root is stable when p changes
/// sign + -> - across it, unstable on - -> +, semistable with no change
/// (even multiplicity). Throws std::domain_error on the trivial (all-zero)
/// parameter vector.
Classification classify(const SquareParams& params);

struct Table1Result {
    int count;
    int stable;
    int row;  // 1-based row of the printed table
};

/// Literal transcription of the published twelve-row table over
/// (sign of D, signs of S0..S3, triple-root condition), rows tested
/// top-down, deflated discriminant convention. Kept separate from
/// classify(): the "D=0 and else" row miscounts some realizable inputs
/// (e.g. S = (1,-1,-1,1)), which the tests document.
Table1Result table1_predicate(const CubicForm& f);

/// 3 S0 S2 = S1^2 and 27 S0^2 S3 = S1^3, i.e. p = -S0 (x - a)^3.
/// Requires S0 > 0.
bool triple_root_condition(const CubicForm& f);

/// x = c1/c2 and c1 + c2 = T mapped back: (c1, c2) = (Tx, T) / (1 + x).
std::vector<Eigen::Vector2d> roots_to_concentrations(const std::vector<double>& roots, double total);

/// Necessary and sufficient support condition for some rate vector on the
/// support to yield more than one steady state: edges (2,3) and (4,1)
/// present, plus at least one edge leaving complex 1 or complex 3.
bool capable_of_multistationarity(const std::set<Edge>& support);

struct ReversibleNetwork {
    std::set<Edge> undirected;  // pairs (i, j) with i < j
    std::set<Edge> support;     // both directions of each undirected edge
};

struct ReversibleEnumeration {
    std::vector<ReversibleNetwork> networks;
    /// Count of networks keyed by number of undirected edges.
    std::map<int, int> histogram;
};

/// All reversible networks on the four complexes capable of
/// multistationarity, enumerated over the 2^6 undirected edge subsets.
ReversibleEnumeration enumerate_reversible_multistationary();

struct MultistationarityWitness {
    SquareParams params;
    Classification classification;
};

/// A rate vector supported on the given edges with three steady states
/// when the support allows all of S0..S3 > 0, otherwise a two-steady-state
/// witness (S0 = 0 or S3 = 0 families). Verified through classify() before
/// returning; nullopt for incapable supports.
std::optional<MultistationarityWitness> witness_parameters(const std::set<Edge>& support);

struct SweepRange {
    Rational lo, hi, step;
};

struct SweepRecord {
    Rational k14, k23, k32;
    int d_sign;
    int count;
    int stable;
    bool toric;      // k23 = k14 k32 (Segre section at k41 = 1)
    bool disc_zero;  // D = 0
    bool triple;     // D = 0 and 3 k14 k32 = k23
};

/// Grid scan of the vertical four-parameter family at k41 = 1. Points are
/// visited k14-outer, k32-inner, each range inclusive of lo and of hi when
/// hit exactly.
std::vector<SweepRecord> figure1_sweep(const SweepRange& r14, const SweepRange& r23,
                                       const SweepRange& r32);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records);

enum class DiscriminantFamily { General12, Square8, Vertical4 };

/// The discriminant of p with the S_i expanded into the rate constants of
/// the chosen family and fully collected: 12 variables for the whole
/// family, 8 for the Square's edges, 4 for the vertical subnetwork.
MultivariatePolynomial symbolic_discriminant(DiscriminantFamily family);

enum class HornJacksonVariant { Printed, Cycle };

/// The two epsilon-parametrized rate vectors discussed for the directed
/// Square: Printed = (k12, k21, k32, k41) = (e, 1, e, 1); Cycle = the
/// directed 4-cycle k12 = k34 = e, k23 = k41 = 1. Requires e > 0.
SquareParams horn_jackson_params(HornJacksonVariant variant, const Rational& eps);

}  // namespace crn

#endif  // CRN_SQUARE_HPP
