#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stylemb/image.hpp"

namespace stylemb {

enum class StylizerKind : uint8_t { MomentMatch = 0, PaletteMap = 1, PatchBlend = 2 };

// Stable registry order: {MomentMatch, PaletteMap, PatchBlend}.
const std::vector<StylizerKind>& stylizer_registry();

const char* stylizer_name(StylizerKind k);
// Accepts "moment", "palette", "patch". Throws std::invalid_argument with the
// valid names otherwise.
StylizerKind stylizer_from_name(const std::string& name);

// Per-channel mean/std computed over a fixed 2-level Gaussian pyramid
// (original resolution plus one blurred, decimated level).
struct ChannelStats {
    std::array<double, 3> mean;
    std::array<double, 3> stddev;
};
ChannelStats pyramid_stats(const Image& img);

// Dominant k-color palette via k-means (fixed seed, 10 Lloyd iterations).
std::vector<std::array<float, 3>> kmeans_palette(const Image& img, int k);

// Deterministic feed-forward stylization. Output always has the content
// image's dimensions, values in [0,1]. The style image is resampled
// internally where a kind needs matching dimensions.
Image stylize(StylizerKind kind, const Image& content, const Image& style);

}  // namespace stylemb
