#pragma once

#include <coroutine>
#include <exception>
#include <utility>

namespace planartw {

// Pull-based resumable generator. Suspension is a coroutine suspend, so
// initiating and parking many generators at once is cheap.
template <class T>
class Generator {
 public:
  struct promise_type {
    T value;
    std::exception_ptr exception;

    Generator get_return_object() {
      return Generator(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(T v) {
      value = std::move(v);
      return {};
    }
    void return_void() {}
    void unhandled_exception() { exception = std::current_exception(); }
  };

  Generator() = default;
  explicit Generator(std::coroutine_handle<promise_type> h) : h_(h) {}
  Generator(Generator&& o) noexcept : h_(std::exchange(o.h_, {})) {}
  Generator& operator=(Generator&& o) noexcept {
    if (this != &o) {
      if (h_) h_.destroy();
      h_ = std::exchange(o.h_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() {
    if (h_) h_.destroy();
  }

  // Resume until the next yield; false on termination.
  bool advance() {
    if (!h_ || h_.done()) return false;
    h_.resume();
    if (h_.promise().exception) std::rethrow_exception(h_.promise().exception);
    return !h_.done();
  }
  const T& current() const { return h_.promise().value; }
  T& current() { return h_.promise().value; }

  // Range-for support (single pass).
  struct iterator {
    Generator* g = nullptr;
    bool done = true;
    bool operator!=(std::default_sentinel_t) const { return !done; }
    void operator++() { done = !g->advance(); }
    T& operator*() const { return g->current(); }
  };
  iterator begin() {
    iterator it{this, false};
    ++it;
    return it;
  }
  std::default_sentinel_t end() { return {}; }

 private:
  std::coroutine_handle<promise_type> h_;
};

}  // namespace planartw
