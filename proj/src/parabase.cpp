#include "paratop/parabase.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <unordered_map>

#include "paratop/flow.hpp"

namespace paratop {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Member: return "Member";
    case VerdictKind::NonMember: return "NonMember";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Obstruction obstruction) {
  switch (obstruction) {
    case Obstruction::None: return "None";
    case Obstruction::AbelianObstruction: return "AbelianObstruction";
    case Obstruction::KernelCorollary: return "KernelCorollary";
    case Obstruction::QuotientNontrivial: return "QuotientNontrivial";
  }
  return "None";
}

bool GenSet::contains(GenPair p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }

bool GenSet::inversion_closed() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [&](const GenPair& p) { return contains(GenPair{p.to, p.from}); });
}

GenSet gens(const FiniteSpace& space) {
  GenSet out;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y : space.min_nbhd(x).indices()) {
      if (y != x) out.pairs.push_back(GenPair{x, y});
    }
  }
  return out;
}

namespace {

void check_support(const FiniteSpace& space, const AbelianVector& v) {
  for (const auto& [p, c] : v.coeffs()) {
    if (p >= space.size()) throw Error(ErrorCode::UnknownPoint, "vector mentions a point outside the space");
  }
}

void check_letters(const FiniteSpace& space, const FreeWord& w) {
  for (const Letter l : w.letters()) {
    if (l.point >= space.size()) throw Error(ErrorCode::UnknownPoint, "word mentions a point outside the space");
  }
}

bool valid_generator(const FiniteSpace& space, GenPair g) {
  return g.from < space.size() && g.to < space.size() && g.from != g.to &&
         space.min_nbhd(g.from).contains(g.to);
}

MembershipVerdict member(std::vector<Factor> factors) {
  MembershipVerdict v;
  v.kind = VerdictKind::Member;
  v.factors = std::move(factors);
  return v;
}

MembershipVerdict non_member(Obstruction why) {
  MembershipVerdict v;
  v.kind = VerdictKind::NonMember;
  v.obstruction = why;
  return v;
}

// w = (product of returned factors) * map_letters(w, reps).
std::vector<Factor> lift_to_quotient(const FreeWord& w, const std::vector<PointIndex>& reps) {
  std::vector<Factor> factors;
  FreeWord prefix;
  for (const Letter l : w.letters()) {
    const PointIndex c = reps[l.point];
    FreeWord next = concat(prefix, FreeWord{Letter{c, l.sign}});
    if (c != l.point) {
      if (l.sign > 0) {
        factors.push_back(Factor{next, GenPair{c, l.point}});
      } else {
        factors.push_back(Factor{prefix, GenPair{l.point, c}});
      }
    }
    prefix = std::move(next);
  }
  return factors;
}

// Breadth-first peeling: w = f u with f a conjugate of a generator whose
// conjugator has length <= depth and |u| <= |w|. A length-preserving peel
// needs the reduced conjugator to be a prefix of w, possibly followed by
// the generator's first point, so only those are tried.
std::optional<std::vector<Factor>> peel_search(const FreeWord& w, const std::vector<GenPair>& generators,
                                               const SearchOptions& options) {
  struct Node {
    FreeWord word;
    std::size_t parent;
    Factor factor;
  };
  std::vector<Node> nodes{Node{w, 0, Factor{}}};
  std::unordered_map<FreeWord, std::size_t, FreeWordHash> seen{{w, 0}};
  const auto depth = static_cast<std::size_t>(options.depth_bound);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const FreeWord u = nodes[head].word;
    for (std::size_t p = 0; p <= std::min(depth, u.length()); ++p) {
      const FreeWord h = u.prefix(p);
      for (const GenPair g : generators) {
        for (int variant = 0; variant < 2; ++variant) {
          if (variant == 1 && p + 1 > depth) continue;
          FreeWord conj = variant == 0 ? h : concat(h, FreeWord::generator(g.from));
          Factor f{std::move(conj), g};
          FreeWord rest = concat(invert(f.value()), u);
          if (rest.length() > u.length() || seen.contains(rest)) continue;
          if (nodes.size() >= options.max_states) return std::nullopt;
          seen.emplace(rest, nodes.size());
          const bool done = rest.is_identity();
          nodes.push_back(Node{std::move(rest), head, std::move(f)});
          if (done) {
            std::vector<Factor> chain;
            for (std::size_t i = nodes.size() - 1; i != 0; i = nodes[i].parent) chain.push_back(nodes[i].factor);
            std::reverse(chain.begin(), chain.end());
            return chain;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MembershipVerdict member_NA(const FiniteSpace& space, const AbelianVector& v) {
  check_support(space, v);
  if (v.is_zero()) return member({});

  const std::int64_t sum = exponent_sum_abelian(v);
  if (sum != 0) {
    MembershipVerdict out = non_member(Obstruction::AbelianObstruction);
    out.exponent_sum = sum;
    return out;
  }

  // v(p) = inflow - outflow; points with negative coefficient supply flow.
  const std::size_t n = space.size();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  MaxFlow network(n + 2);
  std::int64_t supply = 0;
  for (const auto& [p, c] : v.coeffs()) {
    if (c < 0) {
      network.add_edge(source, p, -c);
      supply -= c;
    } else {
      network.add_edge(p, sink, c);
    }
  }
  const GenSet generators = gens(space);
  std::vector<std::size_t> arcs;
  arcs.reserve(generators.pairs.size());
  for (const GenPair g : generators.pairs) arcs.push_back(network.add_edge(g.from, g.to, supply));

  if (network.run(source, sink) == supply) {
    MembershipVerdict out = member({});
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (const std::int64_t f = network.flow_on(arcs[i]); f > 0) {
        out.flow.push_back(FlowUse{generators.pairs[i].from, generators.pairs[i].to, f});
      }
    }
    return out;
  }

  // Generator arcs are never saturated, so the residual source side is
  // closed under generators (an open set) and carries a negative total.
  const std::vector<bool> side = network.source_side(source);
  MembershipVerdict out = non_member(Obstruction::AbelianObstruction);
  for (PointIndex p = 0; p < n; ++p) {
    if (side[p]) out.open_witness.insert(p);
  }
  return out;
}

std::vector<PointIndex> kolmogorov_representatives(const FiniteSpace& space) {
  std::vector<PointIndex> reps(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    reps[x] = x;
    for (PointIndex y = 0; y < x; ++y) {
      if (space.min_nbhd(y) == space.min_nbhd(x)) {
        reps[x] = y;
        break;
      }
    }
  }
  return reps;
}

MembershipVerdict member_NF(const FiniteSpace& space, const FreeWord& w, SearchOptions options) {
  check_letters(space, w);
  if (options.depth_bound < 0) throw Error(ErrorCode::NegativeBound, "depth bound must be nonnegative");
  if (w.is_identity()) return member({});

  const AbelianVector image = abelianize(w);
  if (MembershipVerdict abelian = member_NA(space, image); abelian.is_non_member()) {
    abelian.flow.clear();
    return abelian;
  }

  if (is_T0(space) && image.is_zero()) {
    MembershipVerdict out = non_member(Obstruction::KernelCorollary);
    out.quotient_image = w;
    return out;
  }

  // N_F contains the normal subgroup K generated by x^-1 y for x, y with
  // equal minimal neighbourhoods, so w is a member iff its image in the
  // free group over the T0 quotient is.
  const std::vector<PointIndex> reps = kolmogorov_representatives(space);
  std::vector<Factor> factors = lift_to_quotient(w, reps);
  const FreeWord reduced = map_letters(w, reps);
  if (reduced.is_identity()) return member(std::move(factors));

  if (is_partition(space)) {
    MembershipVerdict out = non_member(Obstruction::QuotientNontrivial);
    out.quotient_image = reduced;
    return out;
  }
  if (abelianize(reduced).is_zero()) {
    MembershipVerdict out = non_member(Obstruction::KernelCorollary);
    out.quotient_image = reduced;
    return out;
  }

  std::vector<GenPair> quotient_gens;
  for (const GenPair g : gens(space).pairs) {
    if (reps[g.from] == g.from && reps[g.to] == g.to) quotient_gens.push_back(g);
  }
  if (auto found = peel_search(reduced, quotient_gens, options)) {
    factors.insert(factors.end(), found->begin(), found->end());
    return member(std::move(factors));
  }
  MembershipVerdict out;
  out.kind = VerdictKind::Unknown;
  out.bound = options.depth_bound;
  return out;
}

MembershipVerdict member_NF(const FiniteSpace& space, const FreeWord& w, int depth_bound) {
  SearchOptions options;
  options.depth_bound = depth_bound;
  return member_NF(space, w, options);
}

PointSet min_nbhd_trace(const FiniteSpace& space, PointIndex x) {
  if (x >= space.size()) throw Error(ErrorCode::UnknownPoint, "point outside the space");
  PointSet out;
  for (PointIndex y = 0; y < space.size(); ++y) {
    if (member_NA(space, AbelianVector::difference(y, x)).is_member()) out.insert(y);
  }
  return out;
}

bool specializes_AP(const FiniteSpace& space, const AbelianVector& g, const AbelianVector& h) {
  return member_NA(space, h - g).is_member();
}

MembershipVerdict specializes_FP(const FiniteSpace& space, const FreeWord& g, const FreeWord& h,
                                 int depth_bound) {
  return member_NF(space, concat(invert(g), h), depth_bound);
}

Separation separate_AP(const FiniteSpace& space, const AbelianVector& g, const AbelianVector& h) {
  if (g == h) throw Error(ErrorCode::EqualElements, "cannot separate an element from itself");
  Separation out;
  if (MembershipVerdict forward = member_NA(space, h - g); forward.is_non_member()) {
    out.separable = true;
    out.center = g;
    out.evidence = std::move(forward);
    return out;
  }
  if (MembershipVerdict backward = member_NA(space, g - h); backward.is_non_member()) {
    out.separable = true;
    out.center = h;
    out.evidence = std::move(backward);
    return out;
  }
  return out;
}

bool check_Z0(const FiniteSpace& space) {
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      if (x != y && !member_NA(space, AbelianVector::difference(y, x)).is_member()) return false;
    }
  }
  return true;
}

std::set<AbelianVector> saturate_ball(const FiniteSpace& space, const std::vector<AbelianVector>& seeds,
                                      int radius) {
  if (radius < 0) throw Error(ErrorCode::NegativeBound, "radius must be nonnegative");
  if (radius > kMaxBallRadius) {
    throw Error(ErrorCode::RadiusTooLarge, "radius " + std::to_string(radius) + " exceeds " +
                                               std::to_string(kMaxBallRadius));
  }
  std::set<AbelianVector> ball;
  std::vector<AbelianVector> frontier;
  for (const auto& s : seeds) {
    check_support(space, s);
    if (s.norm() > radius) throw Error(ErrorCode::InvalidArgument, "seed lies outside the ball");
    if (ball.insert(s).second) frontier.push_back(s);
  }
  const GenSet generators = gens(space);
  while (!frontier.empty()) {
    const AbelianVector v = std::move(frontier.back());
    frontier.pop_back();
    for (const GenPair g : generators.pairs) {
      AbelianVector next = v + g.vector();
      if (next.norm() <= radius && !ball.contains(next)) {
        ball.insert(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  return ball;
}

FreeWord replay(const std::vector<Factor>& factors) {
  FreeWord out;
  for (const auto& f : factors) out = concat(out, f.value());
  return out;
}

AbelianVector replay(const std::vector<FlowUse>& flow) {
  AbelianVector out;
  for (const auto& use : flow) out += use.count * AbelianVector::difference(use.to, use.from);
  return out;
}

bool recheck(const FiniteSpace& space, const AbelianVector& v, const MembershipVerdict& verdict) {
  switch (verdict.kind) {
    case VerdictKind::Member:
      for (const auto& use : verdict.flow) {
        if (use.count <= 0 || !valid_generator(space, GenPair{use.from, use.to})) return false;
      }
      return replay(verdict.flow) == v;
    case VerdictKind::NonMember: {
      if (verdict.obstruction != Obstruction::AbelianObstruction) return false;
      const std::int64_t sum = exponent_sum_abelian(v);
      if (sum != 0) return verdict.exponent_sum == sum;
      if (!space.is_open(verdict.open_witness)) return false;
      std::int64_t on_witness = 0;
      for (PointIndex p : verdict.open_witness.indices()) on_witness += v.coeff(p);
      return on_witness < 0;
    }
    case VerdictKind::Unknown:
      return false;
  }
  return false;
}

bool recheck(const FiniteSpace& space, const FreeWord& w, const MembershipVerdict& verdict) {
  switch (verdict.kind) {
    case VerdictKind::Member:
      for (const auto& f : verdict.factors) {
        if (!valid_generator(space, f.generator)) return false;
      }
      return replay(verdict.factors) == w;
    case VerdictKind::NonMember: {
      const FreeWord collapsed = map_letters(w, kolmogorov_representatives(space));
      switch (verdict.obstruction) {
        case Obstruction::AbelianObstruction:
          return recheck(space, abelianize(w), verdict);
        case Obstruction::KernelCorollary:
          return !verdict.quotient_image.is_identity() && abelianize(verdict.quotient_image).is_zero() &&
                 (verdict.quotient_image == w || verdict.quotient_image == collapsed);
        case Obstruction::QuotientNontrivial:
          return is_partition(space) && !collapsed.is_identity() && verdict.quotient_image == collapsed;
        case Obstruction::None:
          return false;
      }
      return false;
    }
    case VerdictKind::Unknown:
      return true;
  }
  return false;
}

namespace {

FreeWord random_word(std::mt19937_64& rng, std::size_t points, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<PointIndex> point(0, static_cast<PointIndex>(points - 1));
  std::bernoulli_distribution negative(0.5);
  std::vector<Letter> letters;
  const std::size_t len = length(rng);
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back(Letter{point(rng), static_cast<std::int8_t>(negative(rng) ? -1 : 1)});
  }
  return FreeWord(letters);
}

const GenPair& random_gen(std::mt19937_64& rng, const GenSet& generators) {
  std::uniform_int_distribution<std::size_t> pick(0, generators.pairs.size() - 1);
  return generators.pairs[pick(rng)];
}

// A member of N_A built from up to four generator uses, with its flow.
std::pair<AbelianVector, std::vector<FlowUse>> sample_member_NA(std::mt19937_64& rng, const GenSet& generators) {
  std::pair<AbelianVector, std::vector<FlowUse>> out;
  if (generators.pairs.empty()) return out;
  std::uniform_int_distribution<int> uses(0, 4);
  for (int k = uses(rng); k > 0; --k) {
    const GenPair& g = random_gen(rng, generators);
    out.first += g.vector();
    out.second.push_back(FlowUse{g.from, g.to, 1});
  }
  return out;
}

// A member of N_F: one to three conjugated generators.
std::vector<Factor> sample_member_NF(std::mt19937_64& rng, const FiniteSpace& space, const GenSet& generators) {
  std::vector<Factor> factors;
  if (generators.pairs.empty()) return factors;
  std::uniform_int_distribution<int> count(1, 3);
  for (int k = count(rng); k > 0; --k) {
    factors.push_back(Factor{random_word(rng, space.size(), 2), random_gen(rng, generators)});
  }
  return factors;
}

}  // namespace

BasepReport verify_basep(const FiniteSpace& space, std::size_t sample_count, std::uint64_t rng_seed,
                         SearchOptions options) {
  if (sample_count == 0) throw Error(ErrorCode::InvalidArgument, "sample_count must be at least 1");
  BasepReport report;
  report.samples = sample_count;
  std::mt19937_64 rng(rng_seed);
  const GenSet generators = gens(space);

  auto violation = [&](std::size_t sample, const std::string& what) {
    report.violations.push_back("sample " + std::to_string(sample) + ": " + what);
  };
  auto expect_abelian_member = [&](std::size_t sample, const AbelianVector& v, const char* what) {
    ++report.checks;
    const MembershipVerdict verdict = member_NA(space, v);
    if (!verdict.is_member() || !recheck(space, v, verdict)) {
      violation(sample, std::string(what) + " " + format_abelian(v, space) + " not certified in N_A");
    }
  };
  auto expect_free_member = [&](std::size_t sample, const FreeWord& w, const char* what) {
    ++report.checks;
    const MembershipVerdict verdict = member_NF(space, w, options);
    if (verdict.is_non_member()) {
      violation(sample, std::string(what) + " [" + format_word(w, space) + "] rejected by " +
                            std::string(to_string(verdict.obstruction)));
    } else if (verdict.is_member() && !recheck(space, w, verdict)) {
      violation(sample, std::string(what) + " [" + format_word(w, space) + "] certificate does not replay");
    } else if (verdict.kind == VerdictKind::Unknown) {
      ++report.unresolved;
    }
  };

  for (std::size_t s = 0; s < sample_count; ++s) {
    // Single-set base: intersections are trivial; products and translates
    // of members must stay members.
    const auto [m1, flow1] = sample_member_NA(rng, generators);
    const auto [m2, flow2] = sample_member_NA(rng, generators);
    ++report.checks;
    if (replay(flow1) != m1) violation(s, "sampled abelian flow does not replay");
    expect_abelian_member(s, m1, "sample");
    expect_abelian_member(s, m1 + m2, "sum");
    expect_abelian_member(s, m2 + m1 + m1, "translate");

    // Free case: products and conjugates of members.
    const std::vector<Factor> f1 = sample_member_NF(rng, space, generators);
    const std::vector<Factor> f2 = sample_member_NF(rng, space, generators);
    const FreeWord w1 = replay(f1);
    const FreeWord w2 = replay(f2);
    std::vector<Factor> joined = f1;
    joined.insert(joined.end(), f2.begin(), f2.end());
    ++report.checks;
    if (replay(joined) != concat(w1, w2)) violation(s, "product certificate does not replay");
    expect_free_member(s, w1, "sample");
    expect_free_member(s, concat(w1, w2), "product");

    const FreeWord g = random_word(rng, space.size(), 2);
    std::vector<Factor> conjugated;
    for (const auto& f : f1) conjugated.push_back(Factor{concat(g, f.conjugator), f.generator});
    ++report.checks;
    if (replay(conjugated) != conjugate(g, w1)) violation(s, "conjugated certificate does not replay");
    expect_free_member(s, conjugate(g, w1), "conjugate");
  }
  return report;
}

}  // namespace paratop
