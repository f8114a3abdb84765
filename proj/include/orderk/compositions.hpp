#pragma once

// Streaming enumeration of the k-tuples (x1, ..., xk) of non-negative
// integers with x1 + 2*x2 + ... + k*xk = x. Tuples are emitted in
// ascending order of (xk, ..., x2) with x2 varying fastest; x1 is the
// remainder, so each weight-x tuple appears exactly once. State is O(k).

#include <stdexcept>
#include <vector>

namespace orderk {

class CompositionEnumerator {
public:
  CompositionEnumerator(int k, long long x)
      : k_(k), target_(x), counts_(static_cast<std::size_t>(k), 0) {
    if (k < 1) throw std::invalid_argument("CompositionEnumerator: k >= 1");
    if (x < 0) throw std::invalid_argument("CompositionEnumerator: x >= 0");
    counts_[0] = x;
  }

  // counts()[i] is x_{i+1}, the multiplicity of part size i+1.
  const std::vector<long long>& counts() const { return counts_; }

  // Advances to the next tuple; returns false once exhausted.
  bool next() {
    long long removed = 0;  // weight freed by zeroing x2..x_i so far
    for (int i = 1; i < k_; ++i) {
      long long part = i + 1;
      long long new_tail = tail_weight_ - removed + part;
      if (new_tail <= target_) {
        counts_[static_cast<std::size_t>(i)] += 1;
        for (int j = 1; j < i; ++j) counts_[static_cast<std::size_t>(j)] = 0;
        tail_weight_ = new_tail;
        counts_[0] = target_ - tail_weight_;
        return true;
      }
      removed += part * counts_[static_cast<std::size_t>(i)];
    }
    return false;
  }

private:
  int k_;
  long long target_;
  long long tail_weight_ = 0;  // x1 excluded: sum of (i+1)*counts_[i], i >= 1
  std::vector<long long> counts_;
};

template <typename Fn>
void for_each_composition(int k, long long x, Fn&& fn) {
  CompositionEnumerator e(k, x);
  do {
    fn(e.counts());
  } while (e.next());
}

}  // namespace orderk
