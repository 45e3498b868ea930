#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stylemb/image.hpp"

namespace stylemb {

enum class TextureKind : uint8_t { Stripes = 0, NoiseGrain = 1, Blobs = 2, Crosshatch = 3 };

const char* texture_kind_name(TextureKind k);

// Pure function of its seed: the same seed always yields the same recipe.
struct StyleRecipe {
    uint64_t seed = 0;
    std::vector<std::array<float, 3>> palette;  // 3..6 colors
    TextureKind texture_kind = TextureKind::Stripes;
    float texture_scale = 1.0f;  // > 0, in pixels
    float contrast = 1.0f;       // in [0.2, 1.0]
};

StyleRecipe recipe_from_seed(uint64_t seed);

// Randomized geometric scene (2-8 shapes over a gradient background).
// Deterministic in (seed, size); size must be >= 16.
Image gen_content(uint64_t seed, int size);

// Renders the recipe derived from `seed`: palette plus one of four texture
// families. Deterministic in (seed, size); size must be >= 16.
struct StyleSample {
    Image image;
    StyleRecipe recipe;
};
StyleSample gen_style(uint64_t seed, int size);

}  // namespace stylemb
