#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hasse/group.hpp"
#include "hasse/lattice.hpp"

namespace hasse {

using Rational = boost::rational<std::int64_t>;

/// Which inequality a report instantiates.
enum class BoundName {
  VertexDegree,          // deg(H) <= d + n/d - 2
  MaxCount,              // |Max(G)| <= |G| - 1
  MaxCountMinPrime,      // |Max(G)| <= (|G| - 1) / (p - 1), p = min prime
  MaxCountFrattini,      // |Max(G)| <= (q |G/Phi| - p) / (p (q - 1))
  MaxPCount,             // |Max_p(G)| <= (p^r - 1)/(p - 1) + (p^(k-r+1) - p)/(p - 1)
  MaxPCountSharp,        // |Max_p(G)| <= (p^k - 1)/(p - 1) when O^p(G) < G
  MaxPCountUniform,      // |Max_p(G)| <= (p^(k+1) - p)/(p - 1)
  MaxCountPrimePowers,   // |Max(G)| <= sum over the prime-power parts of |G|
  PrimePowerSum,         // three-prime sum <= half the product
  EdgeCount,             // |E| <= |V| (|G| - 1) / 2
};

std::string to_string(BoundName name);

struct BoundReport {
  BoundName bound = BoundName::VertexDegree;
  std::string subject;  // group name or parameter tuple
  std::string context;  // e.g. "p=2" or the subgroup index and order
  std::int64_t computed = 0;
  Rational limit{0};
  bool holds = false;    // computed <= limit
  bool equality = false; // computed == limit
  /// The characterization of equality, where one is known.
  std::optional<bool> equality_condition;
};

/// "7" or "7/2".
std::string to_string(const Rational& r);
/// One-line JSON object; rationals are exact strings, never floating point.
std::string to_json(const BoundReport& report);

/// deg(H) <= d + n/d - 2; equality_condition is "H normal, H and G/H
/// elementary abelian 2-groups". Throws NotSolvable.
BoundReport vertex_degree_bound(const SubgroupLattice& lattice, const Subgroup& sub);
/// Same for every vertex, checking solvability once.
std::vector<BoundReport> vertex_degree_bounds(const SubgroupLattice& lattice);

/// The maximal-subgroup counting bounds; each throws NotSolvable or TrivialGroup.
BoundReport max_count_bound(const SubgroupLattice& lattice);
/// equality_condition: G is elementary abelian.
BoundReport max_count_min_prime_bound(const SubgroupLattice& lattice);
BoundReport max_count_frattini_bound(const SubgroupLattice& lattice);
/// The general bound, the uniform one, and (when O^p(G) < G) the sharp one.
std::vector<BoundReport> max_p_count_bounds(const SubgroupLattice& lattice, std::uint64_t p);
BoundReport max_count_prime_power_bound(const SubgroupLattice& lattice);
BoundReport edge_count_bound(const SubgroupLattice& lattice);

/// Every counting bound above for one group: all primes for the Max_p family.
std::vector<BoundReport> group_bounds(const SubgroupLattice& lattice);

/// sum_i (p_i^(n_i+1) - p_i)/(p_i - 1) <= (1/2) prod_i p_i^(n_i) for distinct
/// primes. Throws NotPrime, PrimesNotDistinct, InvalidArgument (exponent 0).
BoundReport prime_power_sum_check(std::uint64_t p1, std::uint64_t p2, std::uint64_t p3,
                                  unsigned n1, unsigned n2, unsigned n3);
/// All unordered triples of distinct primes <= prime_bound, exponents 1..exp_bound.
std::vector<BoundReport> prime_power_sum_scan(std::uint64_t prime_bound, unsigned exp_bound);

/// Divisors d of n that satisfy 2d^2 - (n+2)d + 2n > 0.
struct CandidateOrders {
  std::uint64_t n = 0;
  std::int64_t discriminant = 0;  // n^2 - 12n + 4
  bool small_case = false;        // negative discriminant; no divisor analysis then
  std::vector<std::uint64_t> divisors;
  bool within_expected = true;    // divisors are contained in {1, 2, n/2, n}
};

CandidateOrders candidate_orders(std::uint64_t n);

}  // namespace hasse
