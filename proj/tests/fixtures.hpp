#pragma once

#include <string>
#include <vector>

#include "paratop/space.hpp"

namespace paratop::fixtures {

inline PointSet set_of(std::initializer_list<PointIndex> members) {
  PointSet s;
  for (auto m : members) s.insert(m);
  return s;
}

/// a = 0, b = 1; U(a) = {a, b}, U(b) = {b}.
inline FiniteSpace sierpinski() {
  return FiniteSpace(make_points({"a", "b"}), {set_of({0, 1}), set_of({1})});
}

inline FiniteSpace indiscrete(const std::vector<std::string>& names) {
  return FiniteSpace(make_points(names), std::vector<PointSet>(names.size(), PointSet::full(names.size())));
}

inline FiniteSpace discrete(const std::vector<std::string>& names) {
  std::vector<PointSet> table;
  for (PointIndex i = 0; i < names.size(); ++i) table.push_back(PointSet::single(i));
  return FiniteSpace(make_points(names), std::move(table));
}

/// U(a) = U(b) = {a, b}, U(c) = {c}.
inline FiniteSpace two_classes() {
  return FiniteSpace(make_points({"a", "b", "c"}), {set_of({0, 1}), set_of({0, 1}), set_of({2})});
}

}  // namespace paratop::fixtures
