#include "immvar/perm.hpp"

#include "immvar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace immvar {

Perm::Perm(int k) {
  if (k <= 0) throw InvalidArgumentError("Perm: k must be positive");
  img_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) img_[static_cast<std::size_t>(i)] = i;
}

Perm Perm::from_one_line(const std::vector<int>& one_line) {
  const int k = static_cast<int>(one_line.size());
  if (k == 0) throw InvalidArgumentError("Perm: empty one-line notation");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  Perm p;
  p.img_.resize(one_line.size());
  for (int i = 0; i < k; ++i) {
    const int v = one_line[static_cast<std::size_t>(i)];
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
      throw InvalidArgumentError("Perm: not a bijection of 1..k");
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_[static_cast<std::size_t>(i)] = v - 1;
  }
  return p;
}

Perm Perm::parse(std::string_view text) {
  if (text.empty()) throw ParseError("Perm: empty string");
  std::vector<int> one_line;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw ParseError("Perm: expected digits 1-9 or comma-separated values: '" +
                         std::string(text) + "'");
      one_line.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      if (tok.empty()) throw ParseError("Perm: empty entry in '" + std::string(text) + "'");
      int value = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("Perm: bad entry '" + std::string(tok) + "'");
        value = value * 10 + (c - '0');
      }
      one_line.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return from_one_line(one_line);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::compose(const Perm& other) const {
  if (img_.size() != other.img_.size())
    throw InvalidArgumentError("Perm::compose: mismatched degrees");
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[i] = img_[static_cast<std::size_t>(other.img_[i])];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return out;
}

int Perm::parity() const {
  return (static_cast<int>(img_.size()) - cycle_count()) % 2 == 0 ? 1 : -1;
}

std::vector<int> Perm::cycle_length_counts() const {
  std::vector<int> counts(img_.size(), 0);
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(img_[j]);
      ++len;
    }
    ++counts[static_cast<std::size_t>(len - 1)];
  }
  return counts;
}

int Perm::cycle_count() const {
  int total = 0;
  for (int c : cycle_length_counts()) total += c;
  return total;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  if (img_.size() <= 9) {
    for (int v : one_line()) out << v;
  } else {
    bool first = true;
    for (int v : one_line()) {
      if (!first) out << ',';
      out << v;
      first = false;
    }
  }
  return out.str();
}

int MultiIndex::rho() const {
  int sum = 0;
  for (int e : v) sum += e - 1;
  return sum;
}

bool MultiIndex::leq_componentwise(const MultiIndex& o) const {
  if (v.size() != o.v.size()) throw InvalidArgumentError("MultiIndex: length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > o.v[i]) return false;
  return true;
}

bool MultiIndex::weakly_increasing() const {
  return std::is_sorted(v.begin(), v.end());
}

MultiIndex MultiIndex::constant(int k, int value) {
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(k), value));
}

MultiIndex MultiIndex::iota(int k) {
  std::vector<int> e(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  if (text.empty()) throw ParseError("MultiIndex: empty string");
  std::vector<int> entries;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw ParseError("MultiIndex: expected digits 1-9 or comma-separated values: '" +
                         std::string(text) + "'");
      entries.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      if (tok.empty()) throw ParseError("MultiIndex: empty entry in '" + std::string(text) + "'");
      int value = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("MultiIndex: bad entry '" + std::string(tok) + "'");
        value = value * 10 + (c - '0');
      }
      if (value == 0) throw ParseError("MultiIndex: entries are 1-based");
      entries.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return MultiIndex(std::move(entries));
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

MultiIndex act(const Perm& w, const MultiIndex& x) {
  if (w.k() != x.k()) throw InvalidArgumentError("act: degree mismatch");
  MultiIndex out;
  out.v.resize(x.v.size());
  for (int i = 0; i < x.k(); ++i)
    out.v[static_cast<std::size_t>(w.apply0(i))] = x.v[static_cast<std::size_t>(i)];
  return out;
}

void validate_multi_index(const MultiIndex& x, int n) {
  for (int e : x.v)
    if (e < 1 || e > n)
      throw InvalidArgumentError("multi-index entry outside 1.." + std::to_string(n) + ": " +
                                 x.to_string());
}

MultiIndexRange::MultiIndexRange(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw InvalidArgumentError("MultiIndexRange: need n,k >= 1");
  count_ = 1;
  for (int i = 0; i < k; ++i) count_ *= static_cast<std::uint64_t>(n);
}

MultiIndex MultiIndexRange::at(std::uint64_t index) const {
  MultiIndex x = MultiIndex::constant(k_, 1);
  for (int pos = k_ - 1; pos >= 0; --pos) {
    x.v[static_cast<std::size_t>(pos)] = static_cast<int>(index % static_cast<std::uint64_t>(n_)) + 1;
    index /= static_cast<std::uint64_t>(n_);
  }
  return x;
}

std::uint64_t MultiIndexRange::index_of(const MultiIndex& x) const {
  std::uint64_t index = 0;
  for (int e : x.v) index = index * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(e - 1);
  return index;
}

std::uint64_t checked_power(int n, int k, std::uint64_t bound) {
  if (n < 1 || k < 1) throw InvalidArgumentError("checked_power: need n,k >= 1");
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) {
    if (result > bound / static_cast<std::uint64_t>(n) && n > 1)
      throw BoundError("n^k exceeds the enumeration bound of " + std::to_string(bound));
    result *= static_cast<std::uint64_t>(n);
    if (result > bound)
      throw BoundError("n^k exceeds the enumeration bound of " + std::to_string(bound));
  }
  return result;
}

} // namespace immvar
