#include "paratop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <thread>

namespace paratop {

bool SuiteReport::clean() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.counterexamples.empty(); });
}

const CheckResult* SuiteReport::find(std::string_view tag) const {
  for (const auto& c : checks) {
    if (c.tag == tag) return &c;
  }
  return nullptr;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("PARATOP_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Outcome of one check on one space.
struct Outcome {
  bool applicable = true;
  std::optional<std::string> failure;
};

using SpaceChecks = std::vector<Outcome>;

// Runs `check` on every space, in parallel, keeping enumeration order.
std::vector<SpaceChecks> run_over_spaces(const std::vector<FiniteSpace>& spaces, unsigned threads,
                                         const std::function<SpaceChecks(std::size_t)>& check) {
  std::vector<SpaceChecks> results(spaces.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spaces.size(); i = next++) results[i] = check(i);
  };
  const unsigned count = std::max(1U, std::min<unsigned>(threads == 0 ? default_thread_count() : threads,
                                                         static_cast<unsigned>(spaces.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

SuiteReport assemble(std::size_t n, const std::vector<FiniteSpace>& spaces,
                     std::vector<CheckResult> checks, const std::vector<SpaceChecks>& results) {
  SuiteReport report;
  report.carrier_size = n;
  report.spaces_checked = spaces.size();
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t c = 0; c < checks.size(); ++c) {
      const Outcome& o = results[i][c];
      if (!o.applicable) continue;
      if (o.failure) {
        checks[c].counterexamples.push_back(Counterexample{spaces[i], *o.failure});
      } else {
        ++checks[c].passed;
      }
    }
  }
  report.checks = std::move(checks);
  return report;
}

std::mt19937_64 space_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

AbelianVector random_vector(std::mt19937_64& rng, std::size_t points, std::int64_t max_norm) {
  std::uniform_int_distribution<std::int64_t> norm(0, max_norm);
  std::uniform_int_distribution<PointIndex> point(0, static_cast<PointIndex>(points - 1));
  std::bernoulli_distribution negative(0.5);
  AbelianVector v;
  for (std::int64_t k = norm(rng); k > 0; --k) v.add(point(rng), negative(rng) ? -1 : 1);
  return v;
}

// Pairs (g, h), g != h, each of norm <= 4. The point differences come first
// so that a non-T0 space always exposes an inseparable pair.
std::vector<std::pair<AbelianVector, AbelianVector>> sample_pairs(const FiniteSpace& space, std::mt19937_64& rng,
                                                                  std::size_t random_pairs) {
  std::vector<std::pair<AbelianVector, AbelianVector>> pairs;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      if (x != y) pairs.emplace_back(AbelianVector{}, AbelianVector::difference(y, x));
    }
  }
  std::uniform_int_distribution<PointIndex> point(0, static_cast<PointIndex>(space.size() - 1));
  std::bernoulli_distribution structured(0.5);
  while (random_pairs > 0) {
    const AbelianVector g = random_vector(rng, space.size(), 2);
    AbelianVector h = g;
    if (structured(rng)) {
      h += AbelianVector::difference(point(rng), point(rng));
    } else {
      h += random_vector(rng, space.size(), 2);
    }
    if (g == h) continue;
    pairs.emplace_back(g, std::move(h));
    --random_pairs;
  }
  return pairs;
}

std::string describe_pair(const FiniteSpace& space, const AbelianVector& g, const AbelianVector& h) {
  return "g = " + format_abelian(g, space) + ", h = " + format_abelian(h, space);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

SuiteReport run_suite(std::size_t n, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<FiniteSpace> spaces = enumerate_spaces(n);

  std::vector<CheckResult> checks = {
      {"T1", "partition <=> generators inversion-closed <=> N_F is a subgroup", 0, {}},
      {"T2", "N_A = Z_0^A <=> indiscrete", 0, {}},
      {"T3", "T0 <=> sampled AP pairs separable <=> AP specialization antisymmetric", 0, {}},
      {"T4", "trace of x + N_A on X equals U(x)", 0, {}},
      {"T5", "partition spaces: AP and FP specialization symmetric on samples", 0, {}},
  };

  auto check_space = [&](std::size_t index) {
    const FiniteSpace& space = spaces[index];
    std::mt19937_64 rng = space_rng(options.rng_seed, index);
    SpaceChecks out(5);
    const bool partition = is_partition(space);

    // T1
    const GenSet generators = gens(space);
    bool subgroup = true;
    for (const GenPair g : generators.pairs) {
      if (!member_NF(space, invert(g.word()), options.depth_bound).is_member()) {
        subgroup = false;
        break;
      }
    }
    const bool closed = generators.inversion_closed();
    if (partition != closed || closed != subgroup) {
      out[0].failure = "partition=" + yes_no(partition) + " inversion_closed=" + yes_no(closed) +
                       " subgroup=" + yes_no(subgroup);
    }

    // T2
    const bool z0 = check_Z0(space);
    if (z0 != is_indiscrete(space)) {
      out[1].failure = "check_Z0=" + yes_no(z0) + " indiscrete=" + yes_no(is_indiscrete(space));
    }

    // T3 and T5 share the sampled pairs.
    const auto pairs = sample_pairs(space, rng, options.pairs_per_space);
    const bool t0 = is_T0(space);
    std::optional<std::string> inseparable;
    std::optional<std::string> symmetric_pair;
    std::optional<std::string> asymmetric;
    for (const auto& [g, h] : pairs) {
      const bool forward = specializes_AP(space, g, h);
      const bool backward = specializes_AP(space, h, g);
      if (!inseparable && !separate_AP(space, g, h).separable) inseparable = describe_pair(space, g, h);
      if (!symmetric_pair && forward && backward) symmetric_pair = describe_pair(space, g, h);
      if (!asymmetric && forward != backward) asymmetric = describe_pair(space, g, h);
    }
    const bool all_separable = !inseparable.has_value();
    const bool antisymmetric = !symmetric_pair.has_value();
    if (t0 != all_separable || all_separable != antisymmetric) {
      out[2].failure = "T0=" + yes_no(t0) + " all_separable=" + yes_no(all_separable) +
                       " antisymmetric=" + yes_no(antisymmetric) +
                       (inseparable ? "; inseparable " + *inseparable : std::string{});
    }

    // T4
    for (PointIndex x = 0; x < space.size(); ++x) {
      if (min_nbhd_trace(space, x) != space.min_nbhd(x)) {
        out[3].failure = "trace differs from U(" + space.point(x).label() + ")";
        break;
      }
    }

    // T5
    out[4].applicable = partition;
    if (partition) {
      if (asymmetric) {
        out[4].failure = "asymmetric AP specialization: " + *asymmetric;
      } else {
        std::uniform_int_distribution<std::size_t> length(0, 4);
        std::uniform_int_distribution<PointIndex> point(0, static_cast<PointIndex>(space.size() - 1));
        std::bernoulli_distribution negative(0.5);
        for (std::size_t k = 0; k < options.pairs_per_space && !out[4].failure; ++k) {
          std::vector<Letter> a(length(rng));
          std::vector<Letter> b(length(rng));
          for (auto& l : a) l = Letter{point(rng), static_cast<std::int8_t>(negative(rng) ? -1 : 1)};
          for (auto& l : b) l = Letter{point(rng), static_cast<std::int8_t>(negative(rng) ? -1 : 1)};
          const FreeWord u(a);
          const FreeWord v(b);
          const bool uv = specializes_FP(space, u, v, options.depth_bound).is_member();
          const bool vu = specializes_FP(space, v, u, options.depth_bound).is_member();
          if (uv != vu) {
            out[4].failure = "asymmetric FP specialization: g = [" + format_word(u, space) + "], h = [" +
                             format_word(v, space) + "]";
          }
        }
      }
    }
    return out;
  };

  SuiteReport report = assemble(n, spaces, std::move(checks), run_over_spaces(spaces, options.threads, check_space));
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<FreeWord> all_reduced_words(std::size_t points, std::size_t max_length) {
  std::vector<FreeWord> out;
  std::vector<Letter> current;
  std::function<void()> extend = [&] {
    if (!current.empty()) out.emplace_back(current);
    if (current.size() == max_length) return;
    for (PointIndex p = 0; p < points; ++p) {
      for (const std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
        const Letter l{p, sign};
        if (!current.empty() && current.back().cancels(l)) continue;
        current.push_back(l);
        extend();
        current.pop_back();
      }
    }
  };
  extend();
  return out;
}

namespace {

std::size_t census(std::size_t points, std::size_t max_length) {
  std::size_t total = 0;
  std::size_t layer = 2 * points;
  for (std::size_t l = 1; l <= max_length; ++l) {
    total += layer;
    layer *= 2 * points - 1;
  }
  return total;
}

FreeWord random_nonempty_word(std::mt19937_64& rng, std::size_t points, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<PointIndex> point(0, static_cast<PointIndex>(points - 1));
  std::bernoulli_distribution negative(0.5);
  std::vector<Letter> letters;
  const std::size_t target = length(rng);
  while (letters.size() < target) {
    const Letter l{point(rng), static_cast<std::int8_t>(negative(rng) ? -1 : 1)};
    if (letters.empty() || !letters.back().cancels(l)) letters.push_back(l);
  }
  return FreeWord(letters);
}

// The chain-space route: collapse w through mu into F(R_k) and exhibit an
// open set separating e from w there. Returns a failure description.
std::optional<std::string> separate_word(const FiniteSpace& space, const FreeWord& w, int depth) {
  std::vector<PointIndex> chosen;
  for (const Letter l : w.letters()) {
    if (std::find(chosen.begin(), chosen.end(), l.point) == chosen.end()) chosen.push_back(l.point);
  }
  const ContinuousMap mu = mu_embedding(space, chosen);
  if (!is_continuous(mu)) return "mu is not continuous";
  const FreeWord image = map_letters(w, mu.assignment);
  if (image.is_identity()) return "image in F(R_k) is trivial";

  const FiniteSpace& chain = mu.codomain;
  const AbelianVector shadow = abelianize(image);
  // Which of w, w^-1 is excluded from N_F.
  FreeWord excluded;
  if (!shadow.is_zero()) {
    const Separation sep = separate_AP(chain, AbelianVector{}, shadow);
    if (!sep.separable) return "abelian image not separable in AP(R_k)";
    excluded = sep.center.is_zero() ? w : invert(w);
  } else {
    const MembershipVerdict verdict = member_NF(chain, image, depth);
    if (!verdict.is_non_member()) return "kernel word in F(R_k) not rejected";
    excluded = w;
  }
  // Continuity of the extended map sends N_F(X) into N_F(R_k).
  if (member_NF(space, excluded, depth).is_member()) {
    return "[" + format_word(excluded, space) + "] certified in N_F although its image is not";
  }
  return std::nullopt;
}

}  // namespace

SuiteReport t0_word_battery(std::size_t n, const BatteryOptions& options) {
  if (n == 0 || n > 4) throw Error(ErrorCode::CarrierTooLarge, "word battery supports 1 to 4 points");
  if (options.word_length_bound == 0 || options.word_length_bound > 6) {
    throw Error(ErrorCode::InvalidArgument, "word length bound must be 1..6");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<FiniteSpace> spaces = enumerate_spaces(n);

  std::vector<CheckResult> checks = {
      {"T0-separation", "T0 spaces: every word w != e is separated from e via R_k", 0, {}},
      {"non-T0-witness", "non-T0 spaces: some w != e has w and w^-1 in N_F", 0, {}},
  };

  const bool exhaustive = census(n, options.word_length_bound) <= options.census_cap;
  std::vector<FreeWord> words;
  if (exhaustive) words = all_reduced_words(n, options.word_length_bound);

  auto check_space = [&](std::size_t index) {
    const FiniteSpace& space = spaces[index];
    SpaceChecks out(2);
    if (is_T0(space)) {
      out[1].applicable = false;
      std::mt19937_64 rng = space_rng(options.rng_seed, index);
      const std::size_t total = exhaustive ? words.size() : options.census_cap;
      for (std::size_t k = 0; k < total; ++k) {
        const FreeWord w =
            exhaustive ? words[k] : random_nonempty_word(rng, space.size(), options.word_length_bound);
        if (auto failure = separate_word(space, w, options.depth_bound)) {
          out[0].failure = "w = [" + format_word(w, space) + "]: " + *failure;
          break;
        }
      }
    } else {
      out[0].applicable = false;
      const auto reps = kolmogorov_representatives(space);
      PointIndex x = 0;
      while (reps[x] == x) ++x;
      const PointIndex y = reps[x];
      // x^-1 y x y^-1
      const FreeWord w{Letter{x, -1}, Letter{y, 1}, Letter{x, 1}, Letter{y, -1}};
      const MembershipVerdict forward = member_NF(space, w, options.depth_bound);
      const MembershipVerdict backward = member_NF(space, invert(w), options.depth_bound);
      if (!forward.is_member() || !backward.is_member() || !recheck(space, w, forward) ||
          !recheck(space, invert(w), backward) || !abelianize(w).is_zero()) {
        out[1].failure = "w = [" + format_word(w, space) + "] not certified with its inverse";
      }
    }
    return out;
  };

  SuiteReport report = assemble(n, spaces, std::move(checks), run_over_spaces(spaces, options.threads, check_space));
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace paratop
