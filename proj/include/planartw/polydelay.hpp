#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "planartw/generator.hpp"

namespace planartw {

// Instrumentation for the union scheduler.  eps[i] counts emitted elements
// of S_i that i does not own; sigma[i] counts outputs of Gen_i that were
// suppressed.  The scheduler maintains eps[i] <= sigma[i] at every entry
// to its inner loop; violation counters stay zero on correct inputs.
struct UnionStats {
  std::vector<long long> eps;
  std::vector<long long> sigma;
  long long emissions = 0;
  long long suppressions = 0;
  long long terminations = 0;
  long long invariant_violations = 0;
  long long live_claim_violations = 0;
  long long delay_bound_violations = 0;
  long long max_events_between_emissions = 0;
};

// Exactly-once generation of the union of the sub-generator streams.
// member(s, i) decides s in S_i; an element is emitted by the largest
// index whose stream contains it.  Control flow: run the current
// sub-generator; on an output owned by a larger index, suppress it and
// ascend to the next live index; on an emission or termination, descend
// to the smallest live index.
template <class T>
Generator<T> union_generate(std::vector<Generator<T>> gens,
                            std::function<bool(const T&, size_t)> member,
                            UnionStats* stats = nullptr) {
  const size_t n = gens.size();
  std::vector<bool> terminated(n, false);
  UnionStats local;
  UnionStats& st = stats ? *stats : local;
  st.eps.assign(n, 0);
  st.sigma.assign(n, 0);

  long long events_since_emission = 0;
  long long terminations_since_emission = 0;
  auto note_event = [&](bool term) {
    events_since_emission++;
    if (term) {
      terminations_since_emission++;
      st.terminations++;
    }
  };

  size_t cur = 0;
  while (cur < n && terminated[cur]) cur++;
  if (cur == n) co_return;

  bool all_done = false;
  while (!all_done) {
    bool ascending = true;
    while (ascending) {
      for (size_t i = 0; i < n; i++)
        if (st.eps[i] > st.sigma[i]) st.invariant_violations++;
      if (!gens[cur].advance()) {
        terminated[cur] = true;
        note_event(true);
        ascending = false;
      } else {
        note_event(false);
        const T& s = gens[cur].current();
        size_t owner = cur;
        for (size_t i = cur + 1; i < n; i++)
          if (member(s, i)) owner = i;
        if (owner > cur) {
          st.sigma[cur]++;
          st.suppressions++;
          size_t next = cur + 1;
          while (next < n && terminated[next]) next++;
          if (next == n) {
            st.live_claim_violations++;
            throw std::logic_error(
                "union_generate: suppression with no live larger generator");
          }
          cur = next;
        } else {
          for (size_t i = 0; i < cur; i++)
            if (member(s, i)) st.eps[i]++;
          st.emissions++;
          if (events_since_emission > st.max_events_between_emissions)
            st.max_events_between_emissions = events_since_emission;
          // Each ascent is at most n events (the active index strictly
          // increases on suppression) and ends in an emission or a
          // termination, so the gap holds at most terminations + 1
          // ascents.
          if (events_since_emission >
              (long long)n * (terminations_since_emission + 1))
            st.delay_bound_violations++;
          events_since_emission = 0;
          terminations_since_emission = 0;
          co_yield s;
          ascending = false;
        }
      }
    }
    all_done = true;
    for (size_t j = 0; j < n; j++)
      if (!terminated[j]) {
        cur = j;
        all_done = false;
        break;
      }
  }
  if (events_since_emission > st.max_events_between_emissions)
    st.max_events_between_emissions = events_since_emission;
}

}  // namespace planartw
