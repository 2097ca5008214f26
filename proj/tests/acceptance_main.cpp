// Acceptance suite: runs the thirteen exit-gate checks, printing one
// PASS/FAIL line per criterion and exiting nonzero if any fail.
// Criteria run concurrently where independent; the mixed-table block is
// wall-clock bounded and its reports feed the final criterion.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "spinorbit/e8.hpp"
#include "spinorbit/invariants.hpp"
#include "spinorbit/orbit.hpp"
#include "spinorbit/reflgroup.hpp"
#include "spinorbit/report.hpp"
#include "spinorbit/spinor.hpp"

using namespace spinorbit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20260815;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool guarded(const char* what, const std::function<bool()>& f) {
  try {
    return f();
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "criterion runner '%s' threw: %s\n", what, ex.what());
    return false;
  }
}

}  // namespace

int main() {
  setvbuf(stdout, nullptr, _IONBF, 0);

  // Shared immutable models; the group closure is timed because the
  // first criterion bounds it.
  E8::get();
  G1Dictionary::get();
  Clock::time_point w0_start = Clock::now();
  const W0Group& w0 = W0Group::get();
  double w0_seconds = seconds_since(w0_start);

  // The mixed-table block fills these; the last criterion re-reads them.
  std::vector<Report> mixed_reports;
  double mixed_seconds = 0.0;
  std::shared_future<bool> mixed_done =
      std::async(std::launch::async, [&]() {
        return guarded("mixed tables", [&] {
          Clock::time_point t0 = Clock::now();
          bool ok = true;
          for (int i = 2; i <= 8; ++i) {
            Report r = verify_mixed_table(i);
            ok = r.all_ok() && ok;
            mixed_reports.push_back(std::move(r));
          }
          mixed_seconds = seconds_since(t0);
          return ok;
        });
      }).share();

  struct Criterion {
    int num;
    const char* text;
    std::future<bool> result;
  };
  auto task = [](const char* what, std::function<bool()> f) {
    return std::async(std::launch::async,
                      [what, f = std::move(f)] { return guarded(what, f); });
  };

  std::vector<Criterion> criteria;
  criteria.push_back(
      {1, "five generators close to exactly 46080 elements within a minute",
       task("group order", [&] {
         return w0.order() == 46080 && w0_seconds < 60.0;
       })});
  criteria.push_back(
      {2, "subgroup table: sizes, fixed spaces, quotient orders reproduce",
       task("subgroup table", [] { return verify_table1().all_ok(); })});
  criteria.push_back(
      {3, "five involutions satisfy the presentation and generate the group",
       task("presentation", [] { return verify_presentation().all_ok(); })});
  criteria.push_back(
      {4, "invariant identities: zero sum, both products, invariance",
       task("identities", [] { return verify_identities().all_ok(); })});
  criteria.push_back(
      {5, "both action tables match cell by cell (two cells certified)",
       task("action tables", [] { return verify_action_tables().all_ok(); })});
  criteria.push_back(
      {6, "rotated-coordinate quadrics and quartics reproduce",
       task("z forms", [] { return verify_z_forms().all_ok(); })});
  criteria.push_back(
      {7, "grading dimensions, automorphism order, degree-0 type",
       task("grading", [] { return verify_grading().all_ok(); })});
  criteria.push_back(
      {8, "Clifford relations, spin homomorphism, 16-dimensional half",
       task("spin model", [] { return verify_spin_model().all_ok(); })});
  criteria.push_back(
      {9, "weight dictionary bijection with matching scalar products",
       task("weight dictionary",
            [] { return verify_weight_dictionary().all_ok(); })});
  criteria.push_back(
      {10, "commuting semisimple base points with the expected centralizers",
       task("base points", [] { return verify_cartan_subspace().all_ok(); })});
  criteria.push_back(
      {11, "stratum polynomial lists cut out the tabulated strata",
       task("stratum polynomials", [] {
         bool ok = true;
         for (int i = 1; i <= 5; ++i)
           ok = verify_stratum_polynomials(i).all_ok() && ok;
         return ok;
       })});
  criteria.push_back(
      {12, "all seven mixed-element tables verify in under ten minutes",
       task("mixed-table budget", [&, mixed_done] {
         return mixed_done.get() && mixed_seconds < 600.0;
       })});
  criteria.push_back(
      {13, "seeded Jordan round-trips and the stored table reports all pass",
       task("jordan round-trip", [&, mixed_done] {
         bool stored_ok = mixed_done.get();
         for (const Report& r : mixed_reports)
           stored_ok = r.all_ok() && stored_ok;
         return verify_jordan_random(200, kSeed).all_ok() && stored_ok;
       })});

  int failed = 0;
  for (Criterion& c : criteria) {
    bool ok = c.result.get();
    if (!ok) ++failed;
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", c.num,
                c.text);
  }
  std::printf("%d/13 criteria passed\n", 13 - failed);
  return failed == 0 ? 0 : 1;
}
