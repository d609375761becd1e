#pragma once

#include <cstdint>
#include <vector>

namespace planartw {

// Fixed-universe vertex set backed by 64-bit words.
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { words_[v >> 6] |= uint64_t(1) << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1 if empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); i++)
      if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }
  // Smallest member > v, or -1.
  int next(int v) const {
    v++;
    if (v >= n_) return -1;
    size_t i = v >> 6;
    uint64_t w = words_[i] & (~uint64_t(0) << (v & 63));
    while (true) {
      if (w) return int(i * 64 + __builtin_ctzll(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const { return words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return words_ != o.words_; }
  bool operator<(const VertexSet& o) const { return words_ < o.words_; }

  bool subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); i++)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); i++)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
  }
  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; v++) s.set(v);
    return s;
  }

 private:
  int n_;
  std::vector<uint64_t> words_;
};

}  // namespace planartw
