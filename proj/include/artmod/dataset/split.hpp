#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artmod/dataset/manifest.hpp"

namespace artmod::dataset {

/// Uniform sample of `count` records without replacement, and its complement.
/// Both halves keep the manifest's record order and role.
std::pair<Manifest, Manifest> sample_test_set(const Manifest& manifest, std::size_t count, std::uint64_t seed);

struct FoldPair {
    std::vector<std::string> train_ids;
    std::vector<std::string> validation_ids;
};

/// Partition of a manifest's ids into `folds` shuffled, size-balanced folds.
/// The first (size % folds) folds hold one extra record.
struct FoldSplit {
    std::size_t folds = 5;
    std::uint64_t seed = 0;
    std::unordered_map<std::string, std::size_t> fold_of;  // id -> fold index
    std::vector<std::vector<std::string>> members;         // fold index -> ids, in manifest order

    std::size_t fold_size(std::size_t f) const { return members.at(f).size(); }
    /// Train on every fold except `held_out`, validate on `held_out`.
    FoldPair pair(std::size_t held_out) const;
    std::vector<FoldPair> pairs() const;
};

FoldSplit kfold_split(const Manifest& manifest, std::size_t folds, std::uint64_t seed);

}  // namespace artmod::dataset
