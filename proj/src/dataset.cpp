#include "adasgd/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "adasgd/rng.hpp"

namespace adasgd {

namespace {

[[noreturn]] void parse_fail(std::int64_t line_no, const std::string& what) {
  throw std::runtime_error("libsvm parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

void map_labels_inplace(std::vector<double>& labels) {
  std::set<double> seen(labels.begin(), labels.end());
  auto subset_of = [&](std::initializer_list<double> allowed) {
    return std::all_of(seen.begin(), seen.end(), [&](double v) {
      return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
    });
  };
  if (subset_of({-1.0, 1.0})) {
    return;  // already canonical
  }
  if (subset_of({0.0, 1.0})) {
    for (auto& y : labels) y = (y == 0.0) ? -1.0 : 1.0;
    return;
  }
  if (subset_of({1.0, 2.0})) {
    for (auto& y : labels) y = (y == 1.0) ? -1.0 : 1.0;
    return;
  }
  std::ostringstream msg;
  msg << "unsupported label set {";
  for (double v : seen) msg << " " << v;
  msg << " }; expected {-1,+1}, {0,1} or {1,2}";
  throw std::runtime_error(msg.str());
}

}  // namespace

SparseDataset::SparseDataset(std::vector<SparseRow> rows,
                             std::vector<double> labels,
                             std::int32_t n_features)
    : rows_(std::move(rows)), labels_(std::move(labels)), n_features_(n_features) {
  if (rows_.size() != labels_.size()) {
    throw std::invalid_argument("rows and labels differ in length");
  }
  if (rows_.empty()) {
    throw std::invalid_argument("dataset must contain at least one sample");
  }
  if (n_features_ < 1) {
    throw std::invalid_argument("n_features must be positive");
  }
  for (const auto& row : rows_) {
    for (const auto& e : row) {
      if (e.index < 1 || e.index > n_features_) {
        throw std::invalid_argument("feature index out of range: " +
                                    std::to_string(e.index));
      }
      if (!std::isfinite(e.value)) {
        throw std::invalid_argument("non-finite feature value");
      }
    }
  }
  for (double y : labels_) {
    if (y != -1.0 && y != 1.0) {
      throw std::invalid_argument("label outside {-1,+1}: " + std::to_string(y));
    }
  }
  all_.resize(rows_.size());
  std::iota(all_.begin(), all_.end(), std::int64_t{0});
}

SparseDataset SparseDataset::parse_libsvm(std::istream& in,
                                          std::int32_t n_features_override) {
  std::vector<SparseRow> rows;
  std::vector<double> raw_labels;
  std::int32_t max_index = 0;

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip a trailing comment and skip blank lines.
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    double label;
    if (!(ls >> label)) {
      if (ls.eof()) continue;  // blank line
      parse_fail(line_no, "malformed label");
    }
    SparseRow row;
    std::string tok;
    std::int32_t prev_index = 0;
    while (ls >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size()) {
        parse_fail(line_no, "malformed feature token '" + tok + "'");
      }
      std::int32_t idx;
      double val;
      try {
        std::size_t pos1 = 0, pos2 = 0;
        idx = std::stoi(tok.substr(0, colon), &pos1);
        val = std::stod(tok.substr(colon + 1), &pos2);
        if (pos1 != colon || pos2 != tok.size() - colon - 1) {
          parse_fail(line_no, "trailing characters in token '" + tok + "'");
        }
      } catch (const std::logic_error&) {
        parse_fail(line_no, "malformed feature token '" + tok + "'");
      }
      if (idx < 1) parse_fail(line_no, "feature index must be >= 1");
      if (idx <= prev_index) {
        parse_fail(line_no, "feature indices not strictly increasing");
      }
      prev_index = idx;
      max_index = std::max(max_index, idx);
      row.push_back({idx, val});
    }
    rows.push_back(std::move(row));
    raw_labels.push_back(label);
  }
  if (rows.empty()) {
    throw std::runtime_error("libsvm parse error: no samples in input");
  }
  map_labels_inplace(raw_labels);
  const std::int32_t n_features = std::max(max_index, n_features_override);
  if (n_features < 1) {
    throw std::runtime_error("libsvm parse error: no features in input");
  }
  return SparseDataset(std::move(rows), std::move(raw_labels), n_features);
}

SparseDataset SparseDataset::load_libsvm(const std::string& path,
                                         std::int32_t n_features_override) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path);
  }
  return parse_libsvm(in, n_features_override);
}

SparseDataset SparseDataset::synthetic_logistic(std::int64_t n_samples,
                                                std::int32_t n_features,
                                                double separation,
                                                std::uint64_t seed) {
  if (n_samples < 2 || n_features < 1) {
    throw std::invalid_argument("synthetic_logistic: need n_samples >= 2 and n_features >= 1");
  }
  Rng rng = substream(seed, streams::kSynthetic);

  // Planted direction, scaled so margins are N(0, (separation^2 * d)).
  std::vector<double> w(static_cast<std::size_t>(n_features));
  double norm_sq = 0;
  for (auto& wj : w) {
    wj = rng.normal();
    norm_sq += wj * wj;
  }
  const double scale =
      separation * std::sqrt(static_cast<double>(n_features)) /
      std::max(std::sqrt(norm_sq), 1e-300);
  for (auto& wj : w) wj *= scale;

  std::vector<SparseRow> rows(static_cast<std::size_t>(n_samples));
  std::vector<double> labels(static_cast<std::size_t>(n_samples));
  std::vector<double> margins(static_cast<std::size_t>(n_samples));
  for (std::int64_t i = 0; i < n_samples; ++i) {
    SparseRow row;
    row.reserve(static_cast<std::size_t>(n_features));
    double margin = 0;
    for (std::int32_t j = 0; j < n_features; ++j) {
      const double v = rng.normal();
      row.push_back({j + 1, v});
      margin += v * w[static_cast<std::size_t>(j)];
    }
    const double pr = 1.0 / (1.0 + std::exp(-margin));
    labels[static_cast<std::size_t>(i)] = rng.uniform01() < pr ? 1.0 : -1.0;
    margins[static_cast<std::size_t>(i)] = margin;
    rows[static_cast<std::size_t>(i)] = std::move(row);
  }

  // Guarantee both classes.
  const double first = labels[0];
  if (std::all_of(labels.begin(), labels.end(), [&](double y) { return y == first; })) {
    std::size_t flip = 0;
    for (std::size_t i = 1; i < margins.size(); ++i) {
      if (std::abs(margins[i]) < std::abs(margins[flip])) flip = i;
    }
    labels[flip] = -first;
  }
  return SparseDataset(std::move(rows), std::move(labels), n_features);
}

void SparseDataset::write_libsvm(std::ostream& out) const {
  char buf[64];
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << (labels_[i] > 0 ? "+1" : "-1");
    for (const auto& e : rows_[i]) {
      std::snprintf(buf, sizeof(buf), " %d:%.17g", e.index, e.value);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace adasgd
