// Copyright 2026 The mmfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mmfair/common.hpp"

namespace mmfair {

enum class Task { Regression, Classification };

/// A named subset of sample indices. Groups may overlap and need not cover
/// the dataset; a group that ends up empty after a split is kept (size 0)
/// and flagged so evaluation can skip it.
struct GroupSpec {
  std::string name;
  std::vector<int> members;  // indices into the owning dataset, sorted

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
};

/// Linear rescaling y -> (y - min) / (max - min) applied to regression labels
/// at ingestion. Kept so model files can report errors in original units.
struct LabelScaling {
  double min = 0.0;
  double max = 1.0;
  bool applied = false;
};

/// In-memory dataset: dense feature matrix, labels in [0,1] (regression,
/// after scaling) or {0,1} (classification), and group structure.
/// Immutable after construction; evaluation never mutates it.
class Dataset {
 public:
  Eigen::MatrixXd features;  // n x d
  Eigen::VectorXd labels;    // n
  std::vector<GroupSpec> groups;
  std::vector<std::string> feature_names;
  Task task = Task::Regression;
  LabelScaling label_scaling;

  int n() const { return static_cast<int>(features.rows()); }
  int d() const { return static_cast<int>(features.cols()); }
  int num_groups() const { return static_cast<int>(groups.size()); }

  /// Groups a sample belongs to (possibly none, possibly several).
  const std::vector<int>& memberships(int i) const { return memberships_[i]; }

  double group_fraction(int k) const {
    return static_cast<double>(groups[k].size()) / n();
  }

  /// Validates invariants and builds the per-sample membership lists.
  /// Call once after filling the public fields.
  void finalize() {
    const int nn = n();
    if (nn == 0) throw data_error("dataset has no rows");
    if (labels.size() != nn) throw data_error("labels/features row mismatch");
    if (task == Task::Classification) {
      for (int i = 0; i < nn; ++i) {
        if (labels[i] != 0.0 && labels[i] != 1.0)
          throw data_error("classification labels must be 0 or 1 (row " +
                           std::to_string(i) + ")");
      }
    }
    memberships_.assign(nn, {});
    for (int k = 0; k < num_groups(); ++k) {
      for (int idx : groups[k].members) {
        if (idx < 0 || idx >= nn)
          throw data_error("group '" + groups[k].name +
                           "' has out-of-range index");
        memberships_[idx].push_back(k);
      }
    }
  }

  /// True if the groups are pairwise disjoint and their union is {0..n-1}.
  bool groups_disjoint_covering() const {
    for (const auto& m : memberships_)
      if (m.size() != 1) return false;
    return true;
  }

 private:
  std::vector<std::vector<int>> memberships_;
};

/// Deterministic seeded train/test split. Group index sets are remapped to
/// each side; groups emptied by the split are retained with size 0.
inline std::pair<Dataset, Dataset> split(const Dataset& data,
                                         double test_fraction,
                                         std::uint64_t seed) {
  require(test_fraction > 0.0 && test_fraction < 1.0,
          "test_fraction must be in (0,1)");
  const int n = data.n();
  const int n_test = static_cast<int>(std::llround(n * test_fraction));
  require(n_test >= 1 && n_test < n, "split would leave an empty side");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  // new_index[i] >= 0: position in train; encoded -pos-1 for test.
  std::vector<int> new_index(n);
  std::vector<int> train_rows, test_rows;
  for (int pos = 0; pos < n; ++pos) {
    const int i = perm[pos];
    if (pos < n - n_test) {
      new_index[i] = static_cast<int>(train_rows.size());
      train_rows.push_back(i);
    } else {
      new_index[i] = -static_cast<int>(test_rows.size()) - 1;
      test_rows.push_back(i);
    }
  }

  auto build = [&](const std::vector<int>& rows, bool is_test) {
    Dataset out;
    out.features.resize(static_cast<int>(rows.size()), data.d());
    out.labels.resize(static_cast<int>(rows.size()));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      out.features.row(r) = data.features.row(rows[r]);
      out.labels[r] = data.labels[rows[r]];
    }
    out.feature_names = data.feature_names;
    out.task = data.task;
    out.label_scaling = data.label_scaling;
    for (const auto& g : data.groups) {
      GroupSpec gs;
      gs.name = g.name;
      for (int idx : g.members) {
        const int ni = new_index[idx];
        if (!is_test && ni >= 0) gs.members.push_back(ni);
        if (is_test && ni < 0) gs.members.push_back(-ni - 1);
      }
      std::sort(gs.members.begin(), gs.members.end());
      out.groups.push_back(std::move(gs));
    }
    out.finalize();
    return out;
  };

  return {build(train_rows, false), build(test_rows, true)};
}

}  // namespace mmfair
