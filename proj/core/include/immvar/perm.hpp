#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace immvar {

// A permutation of {1..k} in one-line notation. Internally images are
// 0-based; all external formats are 1-based.
class Perm {
public:
  Perm() = default;
  explicit Perm(int k); // identity

  // one_line[i] = w(i+1), values 1..k. Throws InvalidArgumentError unless
  // the vector is a bijection.
  static Perm from_one_line(const std::vector<int>& one_line);

  // Accepts compact digit strings ("3412", k <= 9) and comma-separated
  // one-line notation ("10,1,2,3,4,5,6,7,8,9").
  static Perm parse(std::string_view text);

  int k() const { return static_cast<int>(img_.size()); }
  int apply0(int i) const { return img_[static_cast<std::size_t>(i)]; } // 0-based
  int apply(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; } // 1-based

  bool is_identity() const;
  // (*this) followed after other: result(i) = (*this)(other(i)).
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  int parity() const; // +1 or -1

  // counts[c-1] = number of cycles of length c; sums to the cycle count.
  std::vector<int> cycle_length_counts() const;
  int cycle_count() const;

  std::vector<int> one_line() const; // 1-based copy
  std::string to_string() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

private:
  std::vector<int> img_;
};

// A point of [n]^k with 1-based entries. Comparison is lexicographic, which
// fixes the deterministic iteration order used throughout.
struct MultiIndex {
  std::vector<int> v;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : v(std::move(entries)) {}

  int k() const { return static_cast<int>(v.size()); }
  int operator[](int i) const { return v[static_cast<std::size_t>(i)]; } // 0-based position

  // Sum of (v_i - 1); the rank statistic of the poset layer.
  int rho() const;
  bool leq_componentwise(const MultiIndex& o) const;
  bool weakly_increasing() const;

  static MultiIndex constant(int k, int value);
  static MultiIndex iota(int k); // (1, 2, ..., k)
  // "1,2,3" (preferred) or compact digits "123" when every entry is a digit.
  static MultiIndex parse(std::string_view text);

  std::string to_string() const; // "(1,2,3)"

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.v == b.v; }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.v <=> b.v; }
};

// The place-permuting action: act(w, x)[w(i)] = x[i], i.e. position j of the
// result holds x_{w^{-1}(j)}. It is a left action: act(v.compose(w), x) ==
// act(v, act(w, x)).
MultiIndex act(const Perm& w, const MultiIndex& x);

// Throws InvalidArgumentError unless every entry lies in 1..n.
void validate_multi_index(const MultiIndex& x, int n);

// Lexicographic enumeration of [n]^k with overflow-checked sizing.
class MultiIndexRange {
public:
  MultiIndexRange(int n, int k);
  std::uint64_t count() const { return count_; }
  MultiIndex at(std::uint64_t index) const;
  std::uint64_t index_of(const MultiIndex& x) const;

  template <typename Fn> void for_each(Fn&& fn) const {
    MultiIndex x = MultiIndex::constant(k_, 1);
    if (count_ == 0) return;
    for (;;) {
      fn(const_cast<const MultiIndex&>(x));
      int pos = k_ - 1;
      while (pos >= 0 && x.v[static_cast<std::size_t>(pos)] == n_) {
        x.v[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++x.v[static_cast<std::size_t>(pos)];
    }
  }

private:
  int n_, k_;
  std::uint64_t count_;
};

// n^k when it does not exceed the bound; otherwise throws BoundError.
std::uint64_t checked_power(int n, int k, std::uint64_t bound);

} // namespace immvar
