#include "symtensor/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symtensor {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be nonincreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Tableau::Tableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.size()) {
    throw std::invalid_argument("Tableau: entry count does not match shape " +
                                shape_.to_string());
  }
  for (int e : entries_) {
    if (e < 1) throw std::invalid_argument("Tableau: entries must be positive symbols");
  }
}

Tableau Tableau::row_filling(const Partition& shape) {
  std::vector<int> entries;
  entries.reserve(shape.size());
  for (int r = 0; r < shape.length(); ++r) entries.insert(entries.end(), shape[r], r + 1);
  return Tableau(shape, std::move(entries));
}

int Tableau::row_start(int row) const {
  int start = 0;
  for (int r = 0; r < row; ++r) start += shape_[r];
  return start;
}

bool Tableau::is_semistandard() const {
  for (int r = 0; r < shape_.length(); ++r) {
    for (int c = 0; c < shape_[r]; ++c) {
      if (c > 0 && at(r, c) < at(r, c - 1)) return false;
      if (r > 0 && at(r, c) <= at(r - 1, c)) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::weight(int p) const {
  std::vector<int> w(p, 0);
  for (int e : entries_) {
    if (e > p) throw std::invalid_argument("Tableau::weight: entry exceeds p");
    ++w[e - 1];
  }
  return w;
}

std::string Tableau::reading_word() const {
  std::string s;
  for (int e : entries_) s += std::to_string(e);
  return s;
}

Profile::Profile(int p, std::vector<int> row_major) : p_(p), data_(std::move(row_major)) {
  if (p < 0 || data_.size() != static_cast<std::size_t>(p) * p) {
    throw std::invalid_argument("Profile: expected " + std::to_string(p * p) + " entries");
  }
  for (int x : data_) {
    if (x < 0) throw std::invalid_argument("Profile: negative entry");
  }
}

Profile Profile::diagonal(const std::vector<int>& diag) {
  Profile d(static_cast<int>(diag.size()));
  for (int i = 1; i <= d.p(); ++i) d(i, i) = diag[i - 1];
  return d;
}

int Profile::total() const { return std::accumulate(data_.begin(), data_.end(), 0); }

Profile Profile::transpose() const {
  Profile t(p_);
  for (int i = 1; i <= p_; ++i) {
    for (int j = 1; j <= p_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<int> Profile::row_sums() const {
  std::vector<int> s(p_, 0);
  for (int i = 1; i <= p_; ++i) {
    for (int j = 1; j <= p_; ++j) s[i - 1] += (*this)(i, j);
  }
  return s;
}

std::vector<int> Profile::col_sums() const {
  std::vector<int> s(p_, 0);
  for (int i = 1; i <= p_; ++i) {
    for (int j = 1; j <= p_; ++j) s[j - 1] += (*this)(i, j);
  }
  return s;
}

bool Profile::is_lower_triangular() const {
  for (int i = 1; i <= p_; ++i) {
    for (int j = i + 1; j <= p_; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::string Profile::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= p_; ++i) {
    os << (i > 1 ? ",[" : "[");
    for (int j = 1; j <= p_; ++j) os << (j > 1 ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Partition> enum_partitions(int n, int max_parts) {
  if (n < 0) throw std::invalid_argument("enum_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition dual_partition(const Partition& lambda) {
  std::vector<int> cols;
  for (int i = 1; i <= lambda[0]; ++i) {
    int len = 0;
    for (int part : lambda.parts()) len += part >= i ? 1 : 0;
    cols.push_back(len);
  }
  return Partition(cols);
}

std::vector<Tableau> enum_ssyt(const Partition& lambda, int p) {
  std::vector<Tableau> out;
  if (lambda.length() > p) return out;
  const int n = lambda.size();
  // Box k sits in row_of[k], column col_of[k]; box above is k - lambda[row-1].
  std::vector<int> row_of(n), col_of(n);
  for (int r = 0, k = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c, ++k) {
      row_of[k] = r;
      col_of[k] = c;
    }
  }
  std::vector<int> fill(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.emplace_back(lambda, fill);
      return;
    }
    int lo = 1;
    if (col_of[k] > 0) lo = std::max(lo, fill[k - 1]);
    if (row_of[k] > 0) lo = std::max(lo, fill[k - lambda[row_of[k] - 1]] + 1);
    // Column strictness leaves room for the rows below this box.
    int below = 0;
    for (int r = row_of[k] + 1; r < lambda.length() && lambda[r] > col_of[k]; ++r) ++below;
    for (int v = lo; v <= p - below; ++v) {
      fill[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> enum_compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == k - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Profile> enum_profiles(int n, int p) {
  std::vector<Profile> out;
  for (auto& c : enum_compositions(n, p * p)) out.emplace_back(p, std::move(c));
  return out;
}

Profile tableau_profile(const Tableau& t, int p) {
  if (t.shape().length() > p) {
    throw std::invalid_argument("tableau_profile: shape has more than p rows");
  }
  Profile d(p);
  for (int r = 0; r < t.shape().length(); ++r) {
    for (int c = 0; c < t.shape()[r]; ++c) {
      const int symbol = t.at(r, c);
      if (symbol > p) throw std::invalid_argument("tableau_profile: entry exceeds p");
      ++d(symbol, r + 1);
    }
  }
  return d;
}

std::optional<Tableau> profile_tableau(const Profile& d) {
  const auto lambda = d.col_sums();
  for (std::size_t j = 1; j < lambda.size(); ++j) {
    if (lambda[j] > lambda[j - 1]) return std::nullopt;
  }
  Partition shape(lambda);
  std::vector<int> entries;
  entries.reserve(shape.size());
  for (int j = 1; j <= shape.length(); ++j) {
    for (int i = 1; i <= d.p(); ++i) entries.insert(entries.end(), d(i, j), i);
  }
  return Tableau(shape, std::move(entries));
}

}  // namespace symtensor
