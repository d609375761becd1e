#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "planartw/polydelay.hpp"

using namespace planartw;

namespace {

Generator<int> list_gen(std::vector<int> xs) {
  for (int x : xs) co_yield x;
}

struct Family {
  std::vector<std::vector<int>> sets;  // sorted member lists
};

Family random_family(std::mt19937& rng) {
  Family f;
  int k = 1 + int(rng() % 6);
  int universe = 1 + int(rng() % 20);
  f.sets.resize(k);
  for (int i = 0; i < k; i++) {
    std::set<int> s;
    int size = int(rng() % (universe + 1));
    for (int j = 0; j < size; j++) s.insert(int(rng() % universe));
    f.sets[i].assign(s.begin(), s.end());
  }
  return f;
}

// Runs the scheduler on a family and checks exact-once coverage plus the
// instrumentation invariants.
void check_family(const Family& f) {
  std::vector<Generator<int>> gens;
  for (const auto& s : f.sets) gens.push_back(list_gen(s));
  auto member = [&](const int& x, size_t i) {
    const auto& s = f.sets[i];
    return std::binary_search(s.begin(), s.end(), x);
  };
  UnionStats st;
  auto gen = union_generate<int>(std::move(gens), member, &st);
  std::set<int> got;
  while (gen.advance()) CHECK(got.insert(gen.current()).second);

  std::set<int> want;
  for (const auto& s : f.sets) want.insert(s.begin(), s.end());
  CHECK(got == want);
  CHECK(st.emissions == (long long)want.size());
  CHECK(st.invariant_violations == 0);
  CHECK(st.live_claim_violations == 0);
  CHECK(st.delay_bound_violations == 0);
  for (size_t i = 0; i < f.sets.size(); i++) CHECK(st.eps[i] <= st.sigma[i]);
}

}  // namespace

TEST_SUITE("polydelay") {
  TEST_CASE("single generator passes through") {
    check_family({{{1, 2, 3}}});
  }

  TEST_CASE("overlapping sets are owned by the largest index") {
    Family f{{{1, 2, 3}, {2, 3, 4}, {3, 5}}};
    std::vector<Generator<int>> gens;
    for (const auto& s : f.sets) gens.push_back(list_gen(s));
    UnionStats st;
    auto member = [&](const int& x, size_t i) {
      const auto& s = f.sets[i];
      return std::binary_search(s.begin(), s.end(), x);
    };
    auto gen = union_generate<int>(std::move(gens), member, &st);
    std::vector<std::pair<int, bool>> log;  // not needed; just collect
    std::set<int> got;
    while (gen.advance()) got.insert(gen.current());
    CHECK(got == std::set<int>{1, 2, 3, 4, 5});
    CHECK(st.suppressions > 0);
  }

  TEST_CASE("empty and disjoint families") {
    check_family({{}});
    check_family({{{}, {}, {}}});
    check_family({{{0}, {1}, {2}}});
  }

  TEST_CASE("randomized families") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; trial++) check_family(random_family(rng));
  }

  TEST_CASE("delay bound holds") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; trial++) {
      Family f = random_family(rng);
      std::vector<Generator<int>> gens;
      for (const auto& s : f.sets) gens.push_back(list_gen(s));
      auto member = [&](const int& x, size_t i) {
        const auto& s = f.sets[i];
        return std::binary_search(s.begin(), s.end(), x);
      };
      UnionStats st;
      auto gen = union_generate<int>(std::move(gens), member, &st);
      while (gen.advance()) {
      }
      CHECK(st.delay_bound_violations == 0);
    }
  }
}
