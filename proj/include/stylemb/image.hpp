#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stylemb {

constexpr int kMinImageSize = 16;

// Row-major interleaved RGB raster. Channel values live in [0, 1].
struct Image {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // size = width * height * 3

    Image() = default;
    Image(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0.0f) {}

    float* pixel(int x, int y) { return data.data() + (static_cast<size_t>(y) * width + x) * 3; }
    const float* pixel(int x, int y) const {
        return data.data() + (static_cast<size_t>(y) * width + x) * 3;
    }
    size_t num_pixels() const { return static_cast<size_t>(width) * height; }
};

// Throws std::invalid_argument unless the image satisfies the Image
// invariants (>= 16x16, all channels finite and in [0, 1]).
void validate_image(const Image& img, const char* what = "image");

// Rec. 709 luma.
inline float luma(const float* rgb) {
    return 0.2126f * rgb[0] + 0.7152f * rgb[1] + 0.0722f * rgb[2];
}

inline float clamp01(float v) { return v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v); }

Image resize_bilinear(const Image& src, int w, int h);

double mean_abs_diff(const Image& a, const Image& b);

bool images_equal(const Image& a, const Image& b);

}  // namespace stylemb
