#pragma once

namespace planartw {

// Shared elementary-event counter used to measure enumeration delay.
struct EventCounter {
  long long count = 0;
  void tick(long long k = 1) { count += k; }
};

}  // namespace planartw
