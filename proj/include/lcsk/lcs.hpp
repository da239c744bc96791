#pragma once

#include <cstdint>
#include <span>

#include "lcsk/path_sequence.hpp"

namespace lcsk {

/// Length of the longest common subsequence, O(|a|*|b|) dynamic program.
int lcs_length(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
int lcs_length(const PathSequence& a, const PathSequence& b);

/// Length of the longest contiguous common run (longest common substring).
int lcstr_length(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
int lcstr_length(const PathSequence& a, const PathSequence& b);

/// lcs_length(a, b) / max(len(a), len(b)), in [0, 1].
/// Throws EmptySequenceError if either sequence is empty.
double path_similarity(const PathSequence& a, const PathSequence& b);

/// 1 - path_similarity(a, b); a metric on non-empty sequences.
double lcs_distance(const PathSequence& a, const PathSequence& b);

}  // namespace lcsk
