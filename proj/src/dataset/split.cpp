#include "artmod/dataset/split.hpp"

#include <algorithm>
#include <numeric>
#include <span>

#include "artmod/numkit/random.hpp"

namespace artmod::dataset {

namespace {

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    numkit::Rng rng(seed);
    rng.shuffle(std::span<std::size_t>(idx));
    return idx;
}

}  // namespace

std::pair<Manifest, Manifest> sample_test_set(const Manifest& manifest, std::size_t count, std::uint64_t seed) {
    if (count > manifest.size()) {
        throw InvalidArgument("cannot sample " + std::to_string(count) + " records from a manifest of " +
                              std::to_string(manifest.size()));
    }
    const auto order = shuffled_indices(manifest.size(), seed);
    std::vector<bool> picked(manifest.size(), false);
    for (std::size_t i = 0; i < count; ++i) picked[order[i]] = true;

    std::vector<ImageRecord> test, rest;
    test.reserve(count);
    rest.reserve(manifest.size() - count);
    for (std::size_t i = 0; i < manifest.size(); ++i) {
        (picked[i] ? test : rest).push_back(manifest.records()[i]);
    }
    return {Manifest(std::move(test), manifest.role()), Manifest(std::move(rest), manifest.role())};
}

FoldPair FoldSplit::pair(std::size_t held_out) const {
    if (held_out >= folds) throw InvalidArgument("fold index out of range");
    FoldPair p;
    p.validation_ids = members[held_out];
    for (std::size_t f = 0; f < folds; ++f) {
        if (f == held_out) continue;
        p.train_ids.insert(p.train_ids.end(), members[f].begin(), members[f].end());
    }
    return p;
}

std::vector<FoldPair> FoldSplit::pairs() const {
    std::vector<FoldPair> out;
    out.reserve(folds);
    for (std::size_t f = 0; f < folds; ++f) out.push_back(pair(f));
    return out;
}

FoldSplit kfold_split(const Manifest& manifest, std::size_t folds, std::uint64_t seed) {
    if (folds == 0) throw InvalidArgument("folds must be positive");
    if (folds > manifest.size()) {
        throw InvalidArgument("cannot split " + std::to_string(manifest.size()) + " records into " +
                              std::to_string(folds) + " folds");
    }
    const std::size_t n = manifest.size();
    const auto order = shuffled_indices(n, seed);

    FoldSplit split;
    split.folds = folds;
    split.seed = seed;
    split.members.resize(folds);
    const std::size_t base = n / folds;
    const std::size_t extra = n % folds;
    std::vector<std::size_t> fold_of_index(n);
    std::size_t pos = 0;
    for (std::size_t f = 0; f < folds; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        for (std::size_t j = 0; j < size; ++j) fold_of_index[order[pos++]] = f;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& id = manifest.records()[i].id;
        split.fold_of.emplace(id, fold_of_index[i]);
        split.members[fold_of_index[i]].push_back(id);
    }
    return split;
}

}  // namespace artmod::dataset
