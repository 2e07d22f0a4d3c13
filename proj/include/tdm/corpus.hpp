// Copyright 2026 The tdm Authors
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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tdm/tree.hpp"

namespace tdm {

/// Reserved category for items whose source carries no category information.
inline constexpr ItemId kUnknownCategory = 0;

enum class BehaviorType : std::uint8_t { click, purchase, cart, favor, rating };

std::string behavior_type_name(BehaviorType t);

struct Item {
  ItemId id = 0;
  ItemId category = kUnknownCategory;
};

struct BehaviorEvent {
  UserId user = 0;
  ItemId item = 0;
  ItemId category = kUnknownCategory;
  BehaviorType type = BehaviorType::click;
  double rating = 0.0;  // meaningful only for type == rating
  std::int64_t timestamp = 0;
};

/// The item universe: one entry per item, sorted ascending by id.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Item> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Item>& items() const { return items_; }
  bool contains(ItemId id) const;
  ItemId category_of(ItemId id) const;

 private:
  std::vector<Item> items_;
};

enum class LogFormat { movielens_ratings, tabular_behavior };

struct IngestResult {
  Corpus corpus;
  std::vector<BehaviorEvent> events;
};

struct IngestOptions {
  /// Seed for assigning a single category to items observed with several.
  std::uint64_t category_seed = 0;
  /// Ratings below this are dropped during movielens ingestion.
  double min_rating = 4.0;
};

/// Reads a behavior log. movielens_ratings is comma-separated
/// "user_id,item_id,rating,timestamp" with one header line; events rated
/// below min_rating are dropped and survivors become clicks. tabular_behavior
/// is tab-separated "user_id\titem_id\tcategory_id\tbehavior_type\ttimestamp"
/// without a header. Throws with a line number on malformed input and when
/// nothing survives ("empty corpus").
IngestResult ingest(const std::string& path, LogFormat format,
                    const IngestOptions& options = {});

/// One user's chronological events. For validation/test users the first
/// known_count events are the "known" half used as model input; the rest is
/// retrieval ground truth. Training users have known_count == events.size().
struct UserEvents {
  UserId user = 0;
  std::vector<BehaviorEvent> events;
  std::size_t known_count = 0;

  std::span<const BehaviorEvent> known() const {
    return {events.data(), known_count};
  }
  std::span<const BehaviorEvent> ground_truth() const {
    return {events.data() + known_count, events.size() - known_count};
  }
};

struct SplitParams {
  std::size_t n_test_users = 0;
  std::size_t n_validation_users = 0;
  std::uint64_t seed = 0;
  std::size_t min_interactions = 10;
};

struct DatasetSplit {
  std::vector<UserEvents> train;        // sorted by user id
  std::vector<UserEvents> validation;   // sorted by user id
  std::vector<UserEvents> test;         // sorted by user id
  SplitParams params;
};

/// Deterministic user-level split. Users with fewer than min_interactions
/// events are dropped; each retained user's events are sorted by (timestamp,
/// item). Test/validation users are sampled by seed; their event lists are
/// cut at ceil(len/2) into known/ground-truth halves.
DatasetSplit split(const std::vector<BehaviorEvent>& events,
                   const SplitParams& params);

void save_split(const DatasetSplit& split, const Corpus& corpus,
                const std::string& dir);
struct LoadedSplit {
  DatasetSplit split;
  Corpus corpus;
};
LoadedSplit load_split(const std::string& dir);

/// A user's recent history bucketed into W time windows, most recent first.
struct UserState {
  UserId user = 0;
  std::int64_t as_of = 0;
  std::vector<std::vector<ItemId>> windows;
};

/// Partitions the most recent max_behaviors events with timestamp <= as_of
/// into W contiguous equal-count windows (remainders go to the most recent
/// windows). Events inside a window stay chronological.
UserState build_user_state(std::span<const BehaviorEvent> events_of_user,
                           std::int64_t as_of, std::size_t window_count,
                           std::size_t max_behaviors = 64);

}  // namespace tdm
