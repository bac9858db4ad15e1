// Copyright 2026 The mcd-forge Authors
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

#include "mcd/bstar.hpp"

#include <algorithm>
#include <string>

#include "mcd/combinations.hpp"
#include "mcd/error.hpp"
#include "mcd/subspace.hpp"

namespace mcd {
namespace {

constexpr std::size_t kExhaustiveCandidates = 20;
constexpr std::size_t kNodeBudget = 20'000;

class BStarSearch {
 public:
  BStarSearch(const Field& f, std::vector<GFVector> candidates, int u1, std::size_t bound,
              bool exhaustive)
      : f_(f),
        candidates_(std::move(candidates)),
        u1_(static_cast<std::size_t>(u1)),
        bound_(bound),
        exhaustive_(exhaustive) {}

  BStarResult run() {
    descend(0);
    BStarResult result;
    result.indices = best_;
    result.n_star = static_cast<int>(best_.size());
    result.provably_maximal = best_.size() == bound_ || !out_of_budget_;
    return result;
  }

 private:
  // Adding candidate c keeps the property iff every subset T of the current
  // set with |T| = min(|current|, u1 - 1) stays independent together with c.
  bool compatible(std::size_t c) const {
    const std::size_t size = std::min(current_.size(), u1_ - 1);
    std::vector<GFVector> subset(size + 1);
    subset[size] = candidates_[c];
    return for_each_combination(current_.size(), size, [&](std::span<const std::size_t> idx) {
      for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = candidates_[current_[idx[i]]];
      return rank(f_, subset) == static_cast<int>(size + 1);
    });
  }

  // Returns false once the search should stop.
  bool descend(std::size_t start) {
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() >= bound_) return false;
    }
    if (!exhaustive_ && ++nodes_ > kNodeBudget) {
      out_of_budget_ = true;
      return false;
    }
    for (std::size_t c = start; c < candidates_.size(); ++c) {
      if (current_.size() + (candidates_.size() - c) <= best_.size()) break;
      if (!compatible(c)) continue;
      current_.push_back(c);
      const bool keep_going = descend(c + 1);
      current_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Field& f_;
  std::vector<GFVector> candidates_;
  std::size_t u1_;
  std::size_t bound_;
  bool exhaustive_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace

BStarResult find_bstar(const Field& f, int u1) {
  if (u1 < 1) throw Error(Errc::kBadParams, "u1 must be positive");
  PartitionedA p = partition_A(build_A(f, u1, u1));
  const std::size_t bound =
      std::min<std::size_t>(static_cast<std::size_t>(max_nstar_bound(f.order(), u1)), p.n_b());
  BStarSearch search(f, std::move(p.b_vectors), u1, bound, p.n_b() <= kExhaustiveCandidates);
  return search.run();
}

GFMatrix build_B(const Field& f, int u1) {
  if (f.order() != 3)
    throw Error(Errc::kUnsupportedField, "B_u1 is defined for s = 3 only, got s = " +
                                             std::to_string(f.order()));
  if (u1 < 1) throw Error(Errc::kBadParams, "u1 must be positive");
  const std::size_t cols = std::size_t{1} << (u1 - 1);
  GFMatrix b(static_cast<std::size_t>(u1), cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (int i = 0; i < u1; ++i) {
      const std::size_t bit = (j >> (u1 - 1 - i)) & 1U;
      b(static_cast<std::size_t>(i), j) = GFElement(static_cast<int>(bit) + 1);
    }
  return b;
}

int max_nstar_bound(int s, int u1) {
  if (u1 <= 1 || s == 2) return 1;
  if (u1 == 2) return s - 1;
  if (s <= u1) return u1 + 1;
  if (s % 2 == 1) return s + u1 - 2;
  return s + u1 - 1;
}

}  // namespace mcd
