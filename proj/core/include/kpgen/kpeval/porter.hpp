#pragma once

#include <string>
#include <string_view>

namespace kpgen::eval {

// One pass of the Porter (1980) suffix-stripping algorithm. Expects a
// lowercase ASCII word; words shorter than 3 letters are returned as-is.
std::string porter_stem_once(std::string_view word);

// Porter stemming iterated to a fixed point, so stem(stem(w)) == stem(w)
// holds for every input. A single pass is not idempotent for a handful of
// words (step 5a can expose a new strippable suffix); phrase matching
// requires a stable normal form, so the stable variant is what the
// evaluation stack uses.
std::string porter_stem(std::string_view word);

}  // namespace kpgen::eval
