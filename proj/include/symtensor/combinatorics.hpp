#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symtensor {

/// Nonincreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument if the parts
  /// increase or are negative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Part i (0-based), 0 beyond the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Filling of a Ferrers diagram with symbols from [p] (1-based). Boxes
/// are numbered row by row, left to right, starting at box 0.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<int> entries);

  /// t_lambda: row r holds the symbol r.
  static Tableau row_filling(const Partition& shape);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  /// Entry at row r, column c (both 0-based).
  int at(int row, int col) const { return entries_[row_start(row) + col]; }
  int row_start(int row) const;

  bool is_semistandard() const;
  /// Symbol counts w(t), indexed by symbol-1, of length p.
  std::vector<int> weight(int p) const;
  /// Entries in box order as digits, e.g. "1122|22" style without the bar.
  std::string reading_word() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<int> entries_;
};

/// p x p matrix of nonnegative integers; entry (i, j) uses 1-based symbols.
class Profile {
 public:
  Profile() = default;
  explicit Profile(int p) : p_(p), data_(static_cast<std::size_t>(p) * p, 0) {}
  /// From row-major entries; throws on a negative entry or wrong length.
  Profile(int p, std::vector<int> row_major);
  static Profile diagonal(const std::vector<int>& diag);

  int p() const { return p_; }
  int operator()(int i, int j) const { return data_[index(i, j)]; }
  int& operator()(int i, int j) { return data_[index(i, j)]; }
  const std::vector<int>& data() const { return data_; }

  int total() const;
  Profile transpose() const;
  /// D 1: row i sum.
  std::vector<int> row_sums() const;
  /// D^T 1: column j sum.
  std::vector<int> col_sums() const;
  bool is_lower_triangular() const;

  std::string to_string() const;

  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * p_ + static_cast<std::size_t>(j - 1);
  }
  int p_ = 0;
  std::vector<int> data_;
};

/// Partitions of n with at most max_parts parts, in decreasing
/// lexicographic order: (4), (3,1), (2,2), ...
std::vector<Partition> enum_partitions(int n, int max_parts);

/// lambda*: column lengths of the diagram.
Partition dual_partition(const Partition& lambda);

/// Semistandard tableaux of the given shape with entries from [p], in
/// increasing lexicographic order of the reading word (t_lambda first).
/// Empty when lambda has more than p parts.
std::vector<Tableau> enum_ssyt(const Partition& lambda, int p);

/// P(n, p) in decreasing lexicographic order of the row-major entries
/// (n E_{1,1} first).
std::vector<Profile> enum_profiles(int n, int p);

/// Weak compositions of n into k parts, decreasing lexicographic order.
std::vector<std::vector<int>> enum_compositions(int n, int k);

/// D(t, t_lambda): entry (i, j) counts the symbols i in row j of t.
Profile tableau_profile(const Tableau& t, int p);

/// t(D): the row-nondecreasing tableau of shape D^T 1 whose row j holds
/// D(i, j) symbols i. Nothing when D^T 1 is not nonincreasing.
std::optional<Tableau> profile_tableau(const Profile& d);

}  // namespace symtensor
