// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "apg/apg.hpp"

using namespace apg;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock limits in seconds.
constexpr double kLimit1 = 1;
constexpr double kLimit2 = 300;
constexpr double kLimit3 = 600;
constexpr double kLimit4 = 600;
constexpr double kLimit5 = 600;
constexpr double kLimit6 = 600;
constexpr double kLimit7 = 1800;
constexpr double kLimit8 = 300;
constexpr double kLimit9 = 120;

constexpr int kLemmaInstances = 1000;
constexpr int kLegalityRandom = 5000;
constexpr int kPoly22Random = 10000;
constexpr int kUnionPairs = 2000;
constexpr int kDelayPairs = 500;
constexpr int kRank4Games = 200;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + why;
    }
  }
};

// "n/m" field with n == m and m >= at_least.
bool full_count(const Report& r, const std::string& key, long at_least, std::string* seen = nullptr) {
  for (const auto& [k, v] : r.fields) {
    if (k != key) continue;
    if (seen) *seen = v;
    const auto slash = v.find('/');
    if (slash == std::string::npos) return false;
    const long n = std::stol(v.substr(0, slash)), m = std::stol(v.substr(slash + 1));
    return n == m && m >= at_least;
  }
  return false;
}

void check_report(Verdict& v, const Report& r, const std::vector<std::string>& keys, long at_least) {
  for (const auto& k : keys) {
    std::string seen = "missing";
    const bool ok = full_count(r, k, at_least, &seen);
    v.require(ok, k + " " + seen);
  }
  v.require(r.failures == 0, std::to_string(r.failures) + " failures in " + r.name);
  v.require(!r.resource_limited, "resource limit in " + r.name);
  for (std::size_t i = 0; i < r.examples.size() && i < 3; ++i) v.require(false, r.examples[i]);
}

Verdict criterion1() {
  Verdict v;
  const Game b = butterfly();
  v.require(outcome(b) == Outcome(Outcome::Kind::Lminus), std::string("outcome ") + outcome(b).name());
  const auto t = self_play(b, Player::Left);
  v.require(t.final_status == Status::won(Player::Left), "self-play not won by Left");
  v.require(t.moves_by(Player::Left) == 3, "Left moves " + std::to_string(t.moves_by(Player::Left)));
  std::vector<std::string> left;
  for (const auto& s : t.steps)
    if (s.mover == Player::Left) left.push_back(s.vertex_name);
  v.require(!left.empty() && left[0] == "alpha", "first Left move is not alpha");
  v.require(left.size() >= 2 && (left[1] == "beta1" || left[1] == "beta2"), "second Left move is not a branch");
  return v;
}

Verdict criterion2() {
  Verdict v;
  const Report r = verify_outcome_legality(1, kLegalityRandom, 4);
  check_report(v, r, {"random"}, kLegalityRandom);
  check_report(v, r, {"exhaustive"}, 1);
  return v;
}

Verdict criterion3() {
  Verdict v;
  const Report r = verify_poly22(1, kPoly22Random, 4, 5, 14);
  check_report(v, r, {"exhaustive_labelled", "exhaustive_orbits"}, 1);
  check_report(v, r, {"agreement"}, kPoly22Random);
  return v;
}

Verdict criterion4() {
  Verdict v;
  check_report(v, verify_lemmas(1, kLemmaInstances),
               {"more_moves", "strategy_stealing", "edge_monotonicity", "pairing", "dominating_option",
                "twin_simplification", "greedy_move"},
               kLemmaInstances);
  return v;
}

Verdict criterion5() {
  Verdict v;
  const Report r = verify_union(1, kUnionPairs);
  check_report(v, r, {"union_cells"}, kUnionPairs);
  check_report(v, r, {"d_identity"}, 1);
  return v;
}

Verdict criterion6() {
  Verdict v;
  const Report r = verify_delay(1, kDelayPairs, 5);
  check_report(v, r, {"wk_delay"}, 5);
  check_report(v, r, {"delay_pairs"}, kDelayPairs);
  return v;
}

Verdict criterion7() {
  Verdict v;
  check_report(v, verify_sat_reductions(true),
               {"sat23_canonical", "sat23_solver", "sat23_never_left_win", "sat32_solver", "sat23_unsat8_canonical",
                "sat23_unsat8_solver", "sat32_unsat8_solver"},
               1);
  check_report(v, verify_qbf_reduction(), {"qbf33_solver", "forced_script"}, 1);
  return v;
}

Verdict criterion8() {
  Verdict v;
  check_report(v, verify_rank4_embedding(1, kRank4Games), {"round_trip"}, kRank4Games);
  return v;
}

Verdict criterion9() {
  Verdict v;
  check_report(v, verify_transversal_embedding(4), {"embedding_values", "involution"}, 1);
  return v;
}

}  // namespace

int main() {
  struct Item {
    int id;
    double limit;
    std::function<Verdict()> run;
  };
  const std::vector<Item> items{{1, kLimit1, criterion1}, {2, kLimit2, criterion2}, {3, kLimit3, criterion3},
                                {4, kLimit4, criterion4}, {5, kLimit5, criterion5}, {6, kLimit6, criterion6},
                                {7, kLimit7, criterion7}, {8, kLimit8, criterion8}, {9, kLimit9, criterion9}};
  int failed = 0;
  for (const auto& it : items) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = it.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", secs, it.limit);
    v.require(secs < it.limit, std::string("over time ") + buf);
    failed += !v.pass;
    std::cout << "criterion " << it.id << ": " << (v.pass ? "PASS" : "FAIL") << " (" << buf << ")"
              << (v.detail.empty() ? "" : " " + v.detail) << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
