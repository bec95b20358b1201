#pragma once

// Independent reference computations. Nothing here calls into the library's
// decision procedures; they only share the value types.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <set>
#include <vector>

#include "paratop/space.hpp"
#include "paratop/words.hpp"

namespace paratop::oracle {

/// Every family of subsets of an n-set that contains the empty set and the
/// carrier and is closed under pairwise union and intersection. Subsets are
/// bitmasks; families are sorted lists.
inline std::vector<std::vector<std::uint32_t>> closure_topologies(std::size_t n) {
  const std::uint32_t full = (1U << n) - 1;
  // Candidate members other than the empty set and the carrier.
  std::vector<std::uint32_t> middle;
  for (std::uint32_t s = 1; s < full; ++s) middle.push_back(s);
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    std::vector<bool> in(full + 1, false);
    in[0] = in[full] = true;
    std::vector<std::uint32_t> members{0};
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((pick >> i) & 1U) {
        in[middle[i]] = true;
        members.push_back(middle[i]);
      }
    }
    if (n > 0) members.push_back(full);
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!in[members[i] | members[j]] || !in[members[i] & members[j]]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      out.push_back(std::move(members));
    }
  }
  return out;
}

/// Literal closure: finite intersections of the subbase (the empty
/// intersection being the carrier), then all unions.
inline std::set<std::uint64_t> subbase_closure(std::size_t n, const std::vector<std::uint64_t>& subbase) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> base{full};
  bool grew = true;
  for (const auto s : subbase) base.insert(s);
  while (grew) {
    grew = false;
    for (const auto a : std::vector<std::uint64_t>(base.begin(), base.end())) {
      for (const auto b : std::vector<std::uint64_t>(base.begin(), base.end())) {
        if (base.insert(a & b).second) grew = true;
      }
    }
  }
  std::set<std::uint64_t> opens{0};
  for (const auto b : base) {
    std::vector<std::uint64_t> grown;
    for (const auto o : opens) grown.push_back(o | b);
    opens.insert(grown.begin(), grown.end());
  }
  return opens;
}

/// Open sets of a space by brute force over all subsets.
inline std::vector<PointSet> open_sets_brute(const FiniteSpace& space) {
  std::vector<PointSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << space.size()); ++s) {
    bool open = true;
    for (PointIndex x = 0; x < space.size() && open; ++x) {
      if (((s >> x) & 1U) && (space.min_nbhd(x).bits() & ~s) != 0) open = false;
    }
    if (open) out.emplace_back(s);
  }
  return out;
}

/// T0 by looking for an open set containing exactly one of each pair.
inline bool t0_by_open_sets(const FiniteSpace& space) {
  const auto opens = open_sets_brute(space);
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = x + 1; y < space.size(); ++y) {
      bool separated = false;
      for (const auto u : opens) {
        if (u.contains(x) != u.contains(y)) separated = true;
      }
      if (!separated) return false;
    }
  }
  return true;
}

/// Every minimal neighbourhood is also closed.
inline bool partition_by_closedness(const FiniteSpace& space) {
  const auto opens = open_sets_brute(space);
  const std::uint64_t full = space.carrier().bits();
  for (PointIndex x = 0; x < space.size(); ++x) {
    const std::uint64_t complement = full & ~space.min_nbhd(x).bits();
    bool open = false;
    for (const auto u : opens) open = open || u.bits() == complement;
    if (!open) return false;
  }
  return true;
}

/// Preimage of every open set is open.
inline bool continuous_by_preimages(const FiniteSpace& dom, const FiniteSpace& cod,
                                    const std::vector<PointIndex>& f) {
  const auto dom_opens = open_sets_brute(dom);
  for (const auto v : open_sets_brute(cod)) {
    PointSet pre;
    for (PointIndex x = 0; x < dom.size(); ++x) {
      if (v.contains(f[x])) pre.insert(x);
    }
    if (std::find(dom_opens.begin(), dom_opens.end(), pre) == dom_opens.end()) return false;
  }
  return true;
}

/// All sums of generator vectors e_y - e_x (y in U(x), y != x) reachable
/// from 0 while every partial sum has l1 norm <= bound.
inline std::set<AbelianVector> generator_sums(const FiniteSpace& space, std::int64_t bound) {
  std::vector<AbelianVector> steps;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      if (x != y && space.min_nbhd(x).contains(y)) steps.push_back(AbelianVector::difference(y, x));
    }
  }
  std::set<AbelianVector> seen{AbelianVector{}};
  std::deque<AbelianVector> queue{AbelianVector{}};
  while (!queue.empty()) {
    const AbelianVector v = queue.front();
    queue.pop_front();
    for (const auto& s : steps) {
      AbelianVector next = v + s;
      if (next.norm() <= bound && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

/// Integer vectors on n points with coefficient sum zero and l1 norm <= bound.
inline std::vector<AbelianVector> zero_sum_vectors(std::size_t n, std::int64_t bound) {
  std::vector<AbelianVector> out;
  std::vector<std::int64_t> coeffs(n, -bound);
  while (true) {
    std::int64_t sum = 0;
    std::int64_t norm = 0;
    for (auto c : coeffs) {
      sum += c;
      norm += std::abs(c);
    }
    if (sum == 0 && norm <= bound) {
      AbelianVector v;
      for (PointIndex i = 0; i < n; ++i) v.add(i, coeffs[i]);
      out.push_back(std::move(v));
    }
    std::size_t i = 0;
    while (i < n && coeffs[i] == bound) coeffs[i++] = -bound;
    if (i == n) break;
    ++coeffs[i];
  }
  return out;
}

}  // namespace paratop::oracle
