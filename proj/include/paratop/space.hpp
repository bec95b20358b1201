#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paratop/error.hpp"

namespace paratop {

using PointIndex = std::uint32_t;

/// Largest carrier a FiniteSpace can hold (one bit per point).
inline constexpr std::size_t kMaxPoints = 64;

/// Subset of a carrier, one bit per point index.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet single(PointIndex i) { return PointSet(std::uint64_t{1} << i); }
  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(PointIndex i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(PointIndex i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(PointIndex i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  constexpr auto operator<=>(const PointSet&) const = default;

  /// Member indices in increasing order.
  std::vector<PointIndex> indices() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Opaque point identifier. Formal inverses x^-1 carry a tag instead of a
/// mangled name.
struct Point {
  std::string name;
  bool inverse = false;

  std::string label() const { return inverse ? name + "^-1" : name; }
  auto operator<=>(const Point&) const = default;
};

/// A finite (hence Alexandroff) topological space, stored as its table of
/// minimal open neighbourhoods U(x). Immutable after construction.
class FiniteSpace {
 public:
  /// Validates reflexivity (x in U(x)) and nesting (y in U(x) => U(y) in U(x)).
  FiniteSpace(std::vector<Point> points, std::vector<PointSet> min_nbhd);

  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(PointIndex i) const { return points_.at(i); }
  PointSet min_nbhd(PointIndex x) const { return min_nbhd_.at(x); }
  const std::vector<PointSet>& min_nbhd_table() const { return min_nbhd_; }
  PointSet carrier() const { return PointSet::full(points_.size()); }

  /// Lookup by label; throws UnknownPoint.
  PointIndex index_of(std::string_view label) const;
  std::vector<std::string> labels() const;

  /// V is open iff U(x) is contained in V for every x in V.
  bool is_open(PointSet set) const;
  bool is_closed(PointSet set) const;
  /// Closure of {x}: all y with x in U(y).
  PointSet closure_of_point(PointIndex x) const;
  /// Every open set, in increasing bit order.
  std::vector<PointSet> open_sets() const;

  bool operator==(const FiniteSpace&) const = default;

 private:
  std::vector<Point> points_;
  std::vector<PointSet> min_nbhd_;
};

/// Plain names become ordinary points.
std::vector<Point> make_points(const std::vector<std::string>& names);

FiniteSpace from_open_sets(std::vector<Point> points, const std::vector<PointSet>& opens);
FiniteSpace generate_topology(std::vector<Point> points, const std::vector<PointSet>& subbase);

bool is_T0(const FiniteSpace& space);
bool is_discrete(const FiniteSpace& space);
bool is_indiscrete(const FiniteSpace& space);
bool is_partition(const FiniteSpace& space);

/// Chain space {1..n} with opens {1..i}; U(k) = {1..k}.
FiniteSpace r_n(std::size_t n);

/// Order-dual space on formal inverses: U(x^-1) = {y^-1 : x in U(y)}.
FiniteSpace inverse_subspace(const FiniteSpace& space);

/// Graphviz digraph with an edge x -> y for every y in U(x), y != x.
std::string to_dot(const FiniteSpace& space, std::string_view graph_name = "X");

struct ContinuousMap {
  FiniteSpace domain;
  FiniteSpace codomain;
  std::vector<PointIndex> assignment;
};

/// f(U(x)) contained in U(f(x)) for every x.
bool is_continuous(const ContinuousMap& map);

/// A continuous map into r_n(chosen.size()) that is injective on `chosen`.
/// Chosen points are ranked along a stable linear extension of the
/// specialization order; z goes to the largest rank found in U(z), or 1.
ContinuousMap mu_embedding(const FiniteSpace& space, const std::vector<PointIndex>& chosen);

/// Largest carrier accepted by the enumerator.
inline constexpr std::size_t kMaxEnumeratedPoints = 5;

/// Visits every labeled topology on n points (named a, b, c, ...) once, in a
/// fixed order. Throws CarrierTooLarge outside 1..5.
void for_each_space(std::size_t n, const std::function<void(const FiniteSpace&)>& visit);
std::vector<FiniteSpace> enumerate_spaces(std::size_t n);

}  // namespace paratop
