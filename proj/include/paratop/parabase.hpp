#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "paratop/space.hpp"
#include "paratop/words.hpp"

namespace paratop {

/// Generator x^-1 y of N_F (abelian image y - x), valid when y is in U(x)
/// and y != x.
struct GenPair {
  PointIndex from = 0;
  PointIndex to = 0;

  FreeWord word() const { return FreeWord{Letter{from, -1}, Letter{to, 1}}; }
  AbelianVector vector() const { return AbelianVector::difference(to, from); }
  auto operator<=>(const GenPair&) const = default;
};

/// All generator pairs of a space, sorted. Empty iff the space is discrete.
struct GenSet {
  std::vector<GenPair> pairs;

  bool contains(GenPair p) const;
  /// (x, y) present implies (y, x) present.
  bool inversion_closed() const;
};

GenSet gens(const FiniteSpace& space);

enum class VerdictKind { Member, NonMember, Unknown };

enum class Obstruction {
  None,
  /// The abelian image is outside N_A: nonzero exponent sum, or an open set
  /// on which the image sums to a negative number.
  AbelianObstruction,
  /// Nontrivial word in the kernel of abelianization over a T0 space
  /// (possibly after collapsing to the T0 quotient).
  KernelCorollary,
  /// Partition space: the image in the free group over U-classes is not e.
  QuotientNontrivial,
};

std::string_view to_string(VerdictKind kind);
std::string_view to_string(Obstruction obstruction);

/// One factor g (x^-1 y) g^-1 of a free membership certificate.
struct Factor {
  FreeWord conjugator;
  GenPair generator;

  FreeWord value() const { return conjugate(conjugator, generator.word()); }
  bool operator==(const Factor&) const = default;
};

/// `count` uses of the generator vector to - from.
struct FlowUse {
  PointIndex from = 0;
  PointIndex to = 0;
  std::int64_t count = 0;
  bool operator==(const FlowUse&) const = default;
};

struct MembershipVerdict {
  VerdictKind kind = VerdictKind::Unknown;

  // Member, free case: the product of the factors, in order.
  std::vector<Factor> factors;
  // Member, abelian case: generator multiplicities.
  std::vector<FlowUse> flow;

  // NonMember evidence.
  Obstruction obstruction = Obstruction::None;
  std::int64_t exponent_sum = 0;
  PointSet open_witness;
  FreeWord quotient_image;

  // Unknown: conjugator bound the search exhausted.
  int bound = 0;

  bool is_member() const { return kind == VerdictKind::Member; }
  bool is_non_member() const { return kind == VerdictKind::NonMember; }
};

/// Exact decision of v in N_A by b-flow feasibility on the specialization
/// digraph. Never Unknown.
MembershipVerdict member_NA(const FiniteSpace& space, const AbelianVector& v);

struct SearchOptions {
  int depth_bound = 3;
  std::size_t max_states = 50000;
};

/// Layered semi-decision of w in N_F. Exact whenever the abelian image is
/// outside N_A, the T0 quotient is discrete, or the quotient image lies in
/// the abelianization kernel; otherwise a bounded peeling search.
MembershipVerdict member_NF(const FiniteSpace& space, const FreeWord& w, SearchOptions options);
MembershipVerdict member_NF(const FiniteSpace& space, const FreeWord& w, int depth_bound = 3);

/// rep[x] = least index with the same minimal neighbourhood as x. The
/// representatives form a T0 subspace homeomorphic to the T0 quotient.
std::vector<PointIndex> kolmogorov_representatives(const FiniteSpace& space);

/// {y : y - x in N_A}; equals U(x).
PointSet min_nbhd_trace(const FiniteSpace& space, PointIndex x);

/// h lies in the minimal neighbourhood g + N_A of g.
bool specializes_AP(const FiniteSpace& space, const AbelianVector& g, const AbelianVector& h);
/// g^-1 h in N_F.
MembershipVerdict specializes_FP(const FiniteSpace& space, const FreeWord& g, const FreeWord& h,
                                 int depth_bound = 3);

struct Separation {
  bool separable = false;
  /// The open coset center + N_A contains center and misses the other element.
  AbelianVector center;
  MembershipVerdict evidence;
};

/// Throws EqualElements when g == h.
Separation separate_AP(const FiniteSpace& space, const AbelianVector& g, const AbelianVector& h);

/// N_A equals the zero-sum subgroup. Holds iff the space is indiscrete.
bool check_Z0(const FiniteSpace& space);

inline constexpr int kMaxBallRadius = 12;

/// Closure of `seeds` under adding generator vectors, staying within l1
/// norm `radius`.
std::set<AbelianVector> saturate_ball(const FiniteSpace& space, const std::vector<AbelianVector>& seeds,
                                      int radius);

struct BasepReport {
  std::size_t samples = 0;
  std::size_t checks = 0;
  /// Free-group queries the bounded search could not settle.
  std::size_t unresolved = 0;
  std::vector<std::string> violations;
};

/// Samples members of N_A and N_F and checks closure under sums, translates
/// and conjugation, plus certificate replay.
BasepReport verify_basep(const FiniteSpace& space, std::size_t sample_count, std::uint64_t rng_seed,
                         SearchOptions options = {});

/// Product of the factors.
FreeWord replay(const std::vector<Factor>& factors);
/// Sum of the generator vectors with multiplicity.
AbelianVector replay(const std::vector<FlowUse>& flow);

/// Independently re-checks a verdict's certificate or obstruction.
bool recheck(const FiniteSpace& space, const AbelianVector& v, const MembershipVerdict& verdict);
bool recheck(const FiniteSpace& space, const FreeWord& w, const MembershipVerdict& verdict);

}  // namespace paratop
