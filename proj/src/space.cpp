#include "paratop/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace paratop {

std::vector<PointIndex> PointSet::indices() const {
  std::vector<PointIndex> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<PointIndex>(std::countr_zero(b)));
  }
  return out;
}

namespace {

void check_carrier(const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyCarrier, "carrier has no points");
  if (points.size() > kMaxPoints) {
    throw Error(ErrorCode::CarrierTooLarge,
                "carrier has " + std::to_string(points.size()) + " points, limit is " +
                    std::to_string(kMaxPoints));
  }
  std::set<Point> seen(points.begin(), points.end());
  if (seen.size() != points.size()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate point identifiers in carrier");
  }
}

std::string format_set(const std::vector<Point>& points, PointSet set) {
  std::string out = "{";
  bool first = true;
  for (PointIndex i : set.indices()) {
    if (!first) out += ",";
    out += points[i].label();
    first = false;
  }
  return out + "}";
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<Point> points, std::vector<PointSet> min_nbhd)
    : points_(std::move(points)), min_nbhd_(std::move(min_nbhd)) {
  check_carrier(points_);
  if (min_nbhd_.size() != points_.size()) {
    throw Error(ErrorCode::NotATopology, "minimal-neighbourhood table does not cover the carrier");
  }
  const PointSet all = carrier();
  for (PointIndex x = 0; x < points_.size(); ++x) {
    const PointSet ux = min_nbhd_[x];
    if (!ux.subset_of(all)) {
      throw Error(ErrorCode::NotATopology, "U(" + points_[x].label() + ") leaves the carrier");
    }
    if (!ux.contains(x)) {
      throw Error(ErrorCode::NotATopology, "U(" + points_[x].label() + ") does not contain its point");
    }
    for (PointIndex y : ux.indices()) {
      if (!min_nbhd_[y].subset_of(ux)) {
        throw Error(ErrorCode::NotATopology,
                    points_[y].label() + " lies in U(" + points_[x].label() + ") but U(" +
                        points_[y].label() + ") is not contained in it");
      }
    }
  }
}

PointIndex FiniteSpace::index_of(std::string_view label) const {
  for (PointIndex i = 0; i < points_.size(); ++i) {
    if (points_[i].label() == label) return i;
  }
  throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'");
}

std::vector<std::string> FiniteSpace::labels() const {
  std::vector<std::string> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.label());
  return out;
}

bool FiniteSpace::is_open(PointSet set) const {
  for (PointIndex x : set.indices()) {
    if (!min_nbhd_[x].subset_of(set)) return false;
  }
  return true;
}

bool FiniteSpace::is_closed(PointSet set) const {
  return is_open(PointSet(carrier().bits() & ~set.bits()));
}

PointSet FiniteSpace::closure_of_point(PointIndex x) const {
  PointSet out;
  for (PointIndex y = 0; y < points_.size(); ++y) {
    if (min_nbhd_[y].contains(x)) out.insert(y);
  }
  return out;
}

std::vector<PointSet> FiniteSpace::open_sets() const {
  // Opens are exactly the unions of minimal neighbourhoods.
  std::set<PointSet> opens{PointSet{}};
  for (const PointSet u : min_nbhd_) {
    std::vector<PointSet> grown;
    for (const PointSet v : opens) grown.push_back(v | u);
    opens.insert(grown.begin(), grown.end());
  }
  return {opens.begin(), opens.end()};
}

std::vector<Point> make_points(const std::vector<std::string>& names) {
  std::vector<Point> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(Point{n, false});
  return out;
}

FiniteSpace from_open_sets(std::vector<Point> points, const std::vector<PointSet>& opens) {
  check_carrier(points);
  const PointSet all = PointSet::full(points.size());
  std::set<PointSet> family;
  for (const PointSet u : opens) {
    if (!u.subset_of(all)) throw Error(ErrorCode::UnknownPoint, "open set leaves the carrier");
    family.insert(u);
  }
  if (!family.contains(PointSet{})) throw Error(ErrorCode::NotATopology, "empty set is not open");
  if (!family.contains(all)) throw Error(ErrorCode::NotATopology, "carrier is not open");

  // On a finite carrier pairwise closure is the whole story.
  for (auto i = family.begin(); i != family.end(); ++i) {
    for (auto j = std::next(i); j != family.end(); ++j) {
      const char* op = nullptr;
      if (!family.contains(*i | *j)) op = "union";
      else if (!family.contains(*i & *j)) op = "intersection";
      if (op != nullptr) {
        throw Error(ErrorCode::NotATopology, std::string(op) + " of " + format_set(points, *i) +
                                                 " and " + format_set(points, *j) + " is not open");
      }
    }
  }

  std::vector<PointSet> table(points.size(), all);
  for (const PointSet u : family) {
    for (PointIndex x : u.indices()) table[x] &= u;
  }
  return FiniteSpace(std::move(points), std::move(table));
}

FiniteSpace generate_topology(std::vector<Point> points, const std::vector<PointSet>& subbase) {
  check_carrier(points);
  const PointSet all = PointSet::full(points.size());
  // The smallest topology has U(x) = intersection of the subbase members
  // containing x (the empty intersection being the carrier).
  std::vector<PointSet> table(points.size(), all);
  for (const PointSet s : subbase) {
    if (!s.subset_of(all)) throw Error(ErrorCode::UnknownPoint, "subbase set leaves the carrier");
    for (PointIndex x : s.indices()) table[x] &= s;
  }
  return FiniteSpace(std::move(points), std::move(table));
}

bool is_T0(const FiniteSpace& space) {
  const auto& t = space.min_nbhd_table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = x + 1; y < t.size(); ++y) {
      if (t[x] == t[y]) return false;
    }
  }
  return true;
}

bool is_discrete(const FiniteSpace& space) {
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (space.min_nbhd(x) != PointSet::single(x)) return false;
  }
  return true;
}

bool is_indiscrete(const FiniteSpace& space) {
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (space.min_nbhd(x) != space.carrier()) return false;
  }
  return true;
}

bool is_partition(const FiniteSpace& space) {
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y : space.min_nbhd(x).indices()) {
      if (!space.min_nbhd(y).contains(x)) return false;
    }
  }
  return true;
}

FiniteSpace r_n(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "R_n needs n >= 1");
  if (n > kMaxPoints) throw Error(ErrorCode::CarrierTooLarge, "R_n limited to 64 points");
  std::vector<Point> points;
  std::vector<PointSet> table;
  for (std::size_t k = 1; k <= n; ++k) {
    points.push_back(Point{std::to_string(k), false});
    table.push_back(PointSet::full(k));
  }
  return FiniteSpace(std::move(points), std::move(table));
}

FiniteSpace inverse_subspace(const FiniteSpace& space) {
  std::vector<Point> points;
  std::vector<PointSet> table;
  for (PointIndex x = 0; x < space.size(); ++x) {
    Point p = space.point(x);
    p.inverse = !p.inverse;
    points.push_back(std::move(p));
    table.push_back(space.closure_of_point(x));
  }
  return FiniteSpace(std::move(points), std::move(table));
}

std::string to_dot(const FiniteSpace& space, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  for (PointIndex x = 0; x < space.size(); ++x) {
    out << "  \"" << space.point(x).label() << "\";\n";
  }
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y : space.min_nbhd(x).indices()) {
      if (y == x) continue;
      out << "  \"" << space.point(x).label() << "\" -> \"" << space.point(y).label() << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

bool is_continuous(const ContinuousMap& map) {
  const auto& dom = map.domain;
  const auto& cod = map.codomain;
  if (map.assignment.size() != dom.size()) return false;
  for (PointIndex x = 0; x < dom.size(); ++x) {
    if (map.assignment[x] >= cod.size()) return false;
  }
  for (PointIndex x = 0; x < dom.size(); ++x) {
    const PointSet target = cod.min_nbhd(map.assignment[x]);
    for (PointIndex y : dom.min_nbhd(x).indices()) {
      if (!target.contains(map.assignment[y])) return false;
    }
  }
  return true;
}

ContinuousMap mu_embedding(const FiniteSpace& space, const std::vector<PointIndex>& chosen) {
  if (!is_T0(space)) throw Error(ErrorCode::NotT0, "mu embedding needs a T0 space");
  if (chosen.empty()) throw Error(ErrorCode::InvalidArgument, "no points chosen");
  PointSet chosen_set;
  for (PointIndex p : chosen) {
    if (p >= space.size()) throw Error(ErrorCode::UnknownPoint, "chosen point out of range");
    if (chosen_set.contains(p)) {
      throw Error(ErrorCode::DuplicateChosenPoints, "point " + space.point(p).label() + " chosen twice");
    }
    chosen_set.insert(p);
  }

  // Stable topological sort: y precedes x whenever y lies in U(x).
  std::vector<PointIndex> order;
  PointSet placed;
  while (order.size() < chosen.size()) {
    for (PointIndex p : chosen) {
      if (placed.contains(p)) continue;
      PointSet below = space.min_nbhd(p) & chosen_set;
      below.erase(p);
      if (below.subset_of(placed)) {
        order.push_back(p);
        placed.insert(p);
        break;
      }
    }
  }

  std::vector<PointIndex> assignment(space.size(), 0);
  for (PointIndex z = 0; z < space.size(); ++z) {
    const PointSet uz = space.min_nbhd(z);
    PointIndex rank = 0;  // zero-based rank; 0 stands for R_n's point 1
    for (PointIndex i = 0; i < order.size(); ++i) {
      if (uz.contains(order[i])) rank = i;
    }
    assignment[z] = rank;
  }
  return ContinuousMap{space, r_n(chosen.size()), std::move(assignment)};
}

void for_each_space(std::size_t n, const std::function<void(const FiniteSpace&)>& visit) {
  if (n == 0 || n > kMaxEnumeratedPoints) {
    throw Error(ErrorCode::CarrierTooLarge,
                "enumeration supports 1 to " + std::to_string(kMaxEnumeratedPoints) + " points");
  }
  std::vector<Point> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back(Point{std::string(1, char('a' + i)), false});

  std::vector<std::pair<PointIndex, PointIndex>> slots;
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  // Each mask is a reflexive relation "y in U(x)"; keep the transitive ones.
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  std::vector<PointSet> table(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (PointIndex x = 0; x < n; ++x) table[x] = PointSet::single(x);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1U) table[slots[s].first].insert(slots[s].second);
    }
    bool transitive = true;
    for (PointIndex x = 0; x < n && transitive; ++x) {
      for (PointIndex y : table[x].indices()) {
        if (!table[y].subset_of(table[x])) {
          transitive = false;
          break;
        }
      }
    }
    if (transitive) visit(FiniteSpace(points, table));
  }
}

std::vector<FiniteSpace> enumerate_spaces(std::size_t n) {
  std::vector<FiniteSpace> out;
  for_each_space(n, [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

}  // namespace paratop
