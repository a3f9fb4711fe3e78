#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace adasgd {

using IndexList = std::vector<std::int64_t>;

struct SparseEntry {
  std::int32_t index;  // 1-based feature id
  double value;

  bool operator==(const SparseEntry&) const = default;
};

using SparseRow = std::vector<SparseEntry>;

// Immutable row-sparse feature matrix with labels in {-1, +1}. Safe to share
// across threads once constructed.
class SparseDataset {
 public:
  // Validates: 1 <= entry.index <= n_features, labels in {-1, +1},
  // rows and labels of equal length.
  SparseDataset(std::vector<SparseRow> rows, std::vector<double> labels,
                std::int32_t n_features);

  // Parses plain-text LIBSVM lines `<label> <idx>:<val> ...` with strictly
  // increasing 1-based indices per line. Raw labels {0,1} map 0->-1, 1->+1;
  // {-1,+1} are kept; {1,2} map the smaller value to -1. n_features is the
  // maximum index seen, raised to n_features_override if that is larger.
  static SparseDataset parse_libsvm(std::istream& in,
                                    std::int32_t n_features_override = 0);
  static SparseDataset load_libsvm(const std::string& path,
                                   std::int32_t n_features_override = 0);

  // Planted logistic model: unit direction u, weights separation*sqrt(d)*u,
  // standard-normal features, labels sampled from the model. Deterministic
  // for a fixed seed; if a class is missing the lowest-|margin| label flips.
  static SparseDataset synthetic_logistic(std::int64_t n_samples,
                                          std::int32_t n_features,
                                          double separation,
                                          std::uint64_t seed);

  std::int64_t n_samples() const { return static_cast<std::int64_t>(rows_.size()); }
  std::int32_t n_features() const { return n_features_; }
  const SparseRow& row(std::int64_t i) const { return rows_[static_cast<std::size_t>(i)]; }
  double label(std::int64_t i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> all_indices() const { return all_; }

  void write_libsvm(std::ostream& out) const;

  bool operator==(const SparseDataset& other) const {
    return n_features_ == other.n_features_ && labels_ == other.labels_ &&
           rows_ == other.rows_;
  }

 private:
  std::vector<SparseRow> rows_;
  std::vector<double> labels_;
  std::int32_t n_features_ = 0;
  IndexList all_;  // 0..N-1, for full-batch subsets
};

}  // namespace adasgd
