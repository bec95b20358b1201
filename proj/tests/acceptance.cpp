// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Limits and sample sizes are fixed here.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "paratop/parabase.hpp"
#include "paratop/space.hpp"
#include "paratop/verify.hpp"
#include "paratop/words.hpp"

namespace {

using namespace paratop;
using Clock = std::chrono::steady_clock;

constexpr double kEnumerationLimitSeconds = 10.0;
constexpr double kMembershipLimitSeconds = 60.0;
constexpr std::int64_t kMembershipNorm = 6;
constexpr std::size_t kPairsPerSpace = 50;
constexpr std::size_t kBasepSamples = 200;
constexpr std::uint64_t kSeed = 20261015;
constexpr std::size_t kExpectedCounts[] = {0, 1, 4, 29, 355};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::vector<FiniteSpace>> spaces_by_size() {
  std::vector<std::vector<FiniteSpace>> out(5);
  for (std::size_t n = 1; n <= 4; ++n) out[n] = enumerate_spaces(n);
  return out;
}

// Runs body(i) for i in [0, count) on all workers; returns the failures in
// index order.
std::vector<std::string> parallel_failures(std::size_t count, const std::function<std::string(std::size_t)>& body) {
  std::vector<std::string> results(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = default_thread_count();
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) results[i] = body(i);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<std::string> failures;
  for (auto& r : results) {
    if (!r.empty()) failures.push_back(std::move(r));
  }
  return failures;
}

Outcome enumeration_fidelity() {
  const auto start = Clock::now();
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t got = enumerate_spaces(n).size();
    ok = ok && got == kExpectedCounts[n];
    detail << "n=" << n << ":" << got << " ";
  }
  const double elapsed = seconds_since(start);
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t oracle_count = oracle::closure_topologies(n).size();
    ok = ok && oracle_count == kExpectedCounts[n];
  }
  ok = ok && elapsed < kEnumerationLimitSeconds;
  detail << "oracle agrees, " << elapsed << " s (limit " << kEnumerationLimitSeconds << " s)";
  return {ok, detail.str()};
}

Outcome membership_equivalence(const std::vector<FiniteSpace>& three) {
  const auto start = Clock::now();
  // The specialization preorder is transitive, so every member of norm k is
  // a sum of generators whose partial sums stay within norm k; 2 spare.
  const auto vectors = oracle::zero_sum_vectors(3, kMembershipNorm);
  std::size_t queries = 0;
  std::size_t disagreements = 0;
  for (const auto& s : three) {
    const auto reachable = oracle::generator_sums(s, kMembershipNorm + 2);
    for (const auto& v : vectors) {
      ++queries;
      const auto verdict = member_NA(s, v);
      if (verdict.is_member() != reachable.contains(v) || !recheck(s, v, verdict)) ++disagreements;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << queries << " queries over " << three.size() << " spaces, " << disagreements << " disagreements, "
         << elapsed << " s (limit " << kMembershipLimitSeconds << " s)";
  return {disagreements == 0 && three.size() == 29 && elapsed < kMembershipLimitSeconds, detail.str()};
}

Outcome suite_check(const std::vector<SuiteReport>& reports, const std::string& tag, std::size_t min_n) {
  std::size_t passed = 0;
  std::size_t expected = 0;
  std::size_t counterexamples = 0;
  for (std::size_t n = min_n; n <= 4; ++n) {
    const CheckResult* c = reports[n].find(tag);
    if (c == nullptr) return {false, "missing check " + tag};
    passed += c->passed;
    counterexamples += c->counterexamples.size();
    expected += kExpectedCounts[n];
  }
  std::ostringstream detail;
  detail << tag << ": " << passed << "/" << expected << " spaces, " << counterexamples << " counterexamples";
  return {passed == expected && counterexamples == 0, detail.str()};
}

Outcome mu_construction(const std::vector<std::vector<FiniteSpace>>& spaces) {
  std::size_t maps = 0;
  std::size_t failures = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : spaces[n]) {
      if (!is_T0(s)) continue;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const auto chosen = PointSet(mask).indices();
        const ContinuousMap mu = mu_embedding(s, chosen);
        PointSet images;
        for (PointIndex p : chosen) images.insert(mu.assignment[p]);
        ++maps;
        const bool ok = mu.codomain.size() == chosen.size() && images.size() == chosen.size() &&
                        oracle::continuous_by_preimages(s, mu.codomain, mu.assignment);
        if (!ok) ++failures;
      }
    }
  }
  std::ostringstream detail;
  detail << maps << " maps, " << failures << " failures (continuity by preimages)";
  return {failures == 0 && maps > 0, detail.str()};
}

Outcome basep_sampling(const std::vector<std::vector<FiniteSpace>>& spaces) {
  std::vector<const FiniteSpace*> all;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& s : spaces[n]) all.push_back(&s);
  }
  std::atomic<std::size_t> checks{0};
  std::atomic<std::size_t> unresolved{0};
  const auto start = Clock::now();
  const auto failures = parallel_failures(all.size(), [&](std::size_t i) -> std::string {
    const BasepReport r = verify_basep(*all[i], kBasepSamples, kSeed + i);
    checks += r.checks;
    unresolved += r.unresolved;
    if (r.violations.empty()) return {};
    return "space #" + std::to_string(i) + ": " + r.violations.front();
  });
  std::ostringstream detail;
  detail << all.size() << " spaces, " << checks.load() << " checks, " << failures.size()
         << " with violations, " << unresolved.load() << " unresolved, " << seconds_since(start) << " s";
  if (!failures.empty()) detail << "; first: " << failures.front();
  return {failures.empty() && all.size() == 389, detail.str()};
}

Outcome known_witness(const std::vector<std::vector<FiniteSpace>>& spaces) {
  std::ostringstream detail;
  const FiniteSpace ind(make_points({"x", "y"}), {PointSet::full(2), PointSet::full(2)});
  const FreeWord w{Letter{0, -1}, Letter{1, 1}, Letter{0, 1}, Letter{1, -1}};
  const auto verdict = member_NF(ind, w);
  const bool shape = verdict.is_member() && verdict.factors.size() == 2 &&
                     verdict.factors[0].conjugator.is_identity() && verdict.factors[0].generator == GenPair{0, 1} &&
                     verdict.factors[1].conjugator == FreeWord::generator(0) &&
                     verdict.factors[1].generator == GenPair{1, 0} && replay(verdict.factors) == w;
  detail << "indiscrete factorization " << (shape ? "(x^-1 y)(x (y^-1 x) x^-1)" : "wrong") << "; ";

  std::size_t words = 0;
  std::size_t misclassified = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& s : spaces[n]) {
      if (!is_T0(s)) continue;
      for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = 0; y < n; ++y) {
          if (x == y) continue;
          const FreeWord u{Letter{x, -1}, Letter{y, 1}, Letter{x, 1}, Letter{y, -1}};
          if (!abelianize(u).is_zero()) continue;
          ++words;
          const auto v = member_NF(s, u);
          if (!v.is_non_member() || v.obstruction != Obstruction::KernelCorollary) ++misclassified;
        }
      }
    }
  }
  detail << words << " T0 words, " << misclassified << " not KernelCorollary";
  return {shape && misclassified == 0 && words > 0, detail.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("criterion %d %-28s %s  %s\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  report(1, "enumeration-fidelity", enumeration_fidelity());
  const auto spaces = spaces_by_size();
  report(2, "membership-equivalence", membership_equivalence(spaces[3]));

  std::vector<SuiteReport> reports(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    SuiteOptions options;
    options.rng_seed = kSeed;
    options.pairs_per_space = kPairsPerSpace;
    reports[n] = run_suite(n, options);
  }
  report(3, "partition-topgp-suite", suite_check(reports, "T1", 4));
  report(4, "z0-suite", suite_check(reports, "T2", 1));
  report(5, "t0-suite", suite_check(reports, "T3", 1));
  report(6, "trace-identity", suite_check(reports, "T4", 1));
  report(7, "mu-construction", mu_construction(spaces));
  report(8, "basep-sampling", basep_sampling(spaces));
  report(9, "known-witness", known_witness(spaces));

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
