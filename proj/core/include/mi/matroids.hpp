#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mi/oracle.hpp"

namespace mi {

/// Independent iff |s| <= k.
class UniformMatroid final : public IndependenceOracle {
public:
  UniformMatroid(int n, int k);
  int ground_size() const override { return n_; }
  bool independent(const ElementSet& s) const override { return s.size() <= k_; }
  int cap() const { return k_; }

private:
  int n_;
  int k_;
};

/// Elements carry a class id; independent iff no class exceeds its cap.
class PartitionMatroid final : public IndependenceOracle {
public:
  PartitionMatroid(std::vector<int> class_of, std::vector<int> cap);
  int ground_size() const override { return static_cast<int>(class_of_.size()); }
  bool independent(const ElementSet& s) const override;
  int num_classes() const { return static_cast<int>(cap_.size()); }
  const std::vector<int>& class_of() const { return class_of_; }
  const std::vector<int>& caps() const { return cap_; }

private:
  std::vector<int> class_of_;
  std::vector<int> cap_;
};

/// Elements are the edges of a fixed graph; independent iff the picked edges
/// form a forest. Each query runs a union-find cycle test.
class GraphicMatroid final : public IndependenceOracle {
public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);
  int ground_size() const override { return static_cast<int>(edges_.size()); }
  bool independent(const ElementSet& s) const override;
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// Elements are columns of a 0/1 matrix; independent iff the columns are
/// linearly independent over GF(2). Columns are bit-packed by row and each
/// query runs a fresh Gaussian elimination.
class LinearMatroidGF2 final : public IndependenceOracle {
public:
  /// rows[i] is a string of '0'/'1' of equal width; element j is column j.
  static LinearMatroidGF2 from_rows(const std::vector<std::string>& rows);

  int ground_size() const override { return num_cols_; }
  bool independent(const ElementSet& s) const override;
  int num_rows() const { return num_rows_; }
  std::vector<std::string> to_rows() const;

private:
  LinearMatroidGF2(int num_rows, int num_cols,
                   std::vector<std::vector<std::uint64_t>> col_bits);

  int num_rows_;
  int num_cols_;
  std::vector<std::vector<std::uint64_t>> col_bits_;  // [col][row word]
};

}  // namespace mi
