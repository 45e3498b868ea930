#include "stylemb/stylizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stylemb/rng.hpp"

namespace stylemb {

namespace {

constexpr int kMomentMatchIterations = 4;
constexpr int kPaletteColors = 5;
constexpr int kKmeansIterations = 10;
constexpr uint64_t kKmeansSeed = 0x70616c6574746531ull;
constexpr int kPatchSize = 8;
constexpr double kSigmaFloor = 1e-6;

// 5-tap binomial blur + 2x decimation, the second pyramid level.
Image blur_downsample(const Image& src) {
    static const float kernel[5] = {1.f / 16, 4.f / 16, 6.f / 16, 4.f / 16, 1.f / 16};
    const int w = src.width, h = src.height;
    Image tmp(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float acc[3] = {0, 0, 0};
            for (int k = -2; k <= 2; ++k) {
                int xx = std::clamp(x + k, 0, w - 1);
                const float* p = src.pixel(xx, y);
                for (int c = 0; c < 3; ++c) acc[c] += kernel[k + 2] * p[c];
            }
            float* q = tmp.pixel(x, y);
            for (int c = 0; c < 3; ++c) q[c] = acc[c];
        }
    }
    int w2 = std::max(1, w / 2), h2 = std::max(1, h / 2);
    Image out(w2, h2);
    for (int y = 0; y < h2; ++y) {
        for (int x = 0; x < w2; ++x) {
            float acc[3] = {0, 0, 0};
            for (int k = -2; k <= 2; ++k) {
                int yy = std::clamp(2 * y + k, 0, h - 1);
                const float* p = tmp.pixel(std::min(2 * x, w - 1), yy);
                for (int c = 0; c < 3; ++c) acc[c] += kernel[k + 2] * p[c];
            }
            float* q = out.pixel(x, y);
            for (int c = 0; c < 3; ++c) q[c] = acc[c];
        }
    }
    return out;
}

void accumulate_stats(const Image& img, double sum[3], double sum_sq[3], size_t& n) {
    for (size_t i = 0; i < img.num_pixels(); ++i) {
        const float* p = img.data.data() + i * 3;
        for (int c = 0; c < 3; ++c) {
            sum[c] += p[c];
            sum_sq[c] += static_cast<double>(p[c]) * p[c];
        }
    }
    n += img.num_pixels();
}

Image moment_match(const Image& content, const Image& style) {
    ChannelStats target = pyramid_stats(style);
    Image out = content;
    for (int iter = 0; iter < kMomentMatchIterations; ++iter) {
        ChannelStats cur = pyramid_stats(out);
        float gain[3], bias[3];
        for (int c = 0; c < 3; ++c) {
            double g = target.stddev[c] / std::max(cur.stddev[c], kSigmaFloor);
            gain[c] = static_cast<float>(g);
            bias[c] = static_cast<float>(target.mean[c] - g * cur.mean[c]);
        }
        for (size_t i = 0; i < out.num_pixels(); ++i) {
            float* p = out.data.data() + i * 3;
            for (int c = 0; c < 3; ++c) p[c] = clamp01(p[c] * gain[c] + bias[c]);
        }
    }
    return out;
}

Image palette_map(const Image& content, const Image& style) {
    auto palette = kmeans_palette(style, kPaletteColors);
    Image out(content.width, content.height);
    for (size_t i = 0; i < content.num_pixels(); ++i) {
        const float* p = content.data.data() + i * 3;
        size_t best = 0;
        float best_d = std::numeric_limits<float>::max();
        for (size_t j = 0; j < palette.size(); ++j) {
            float d = 0;
            for (int c = 0; c < 3; ++c) {
                float diff = p[c] - palette[j][c];
                d += diff * diff;
            }
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        const auto& col = palette[best];
        float y_content = luma(p);
        float y_pal = luma(col.data());
        float* q = out.data.data() + i * 3;
        if (y_pal < 1e-4f) {
            // Near-black palette color carries no chroma; fall back to gray.
            for (int c = 0; c < 3; ++c) q[c] = y_content;
        } else {
            float s = y_content / y_pal;
            for (int c = 0; c < 3; ++c) q[c] = clamp01(col[c] * s);
        }
    }
    return out;
}

Image patch_blend(const Image& content, const Image& style) {
    Image st = resize_bilinear(style, content.width, content.height);
    const int tiles_x = (content.width + kPatchSize - 1) / kPatchSize;
    const int tiles_y = (content.height + kPatchSize - 1) / kPatchSize;
    const int src_tiles_x = std::max(1, st.width / kPatchSize);
    const int src_tiles_y = std::max(1, st.height / kPatchSize);
    const int n_src = src_tiles_x * src_tiles_y;

    Image out(content.width, content.height);
    for (int ty = 0; ty < tiles_y; ++ty) {
        for (int tx = 0; tx < tiles_x; ++tx) {
            // Deterministic patch shuffle; primes decorrelate the tiling.
            int src = static_cast<int>((tx * 7919u + ty * 104729u) % n_src);
            int sx0 = (src % src_tiles_x) * kPatchSize;
            int sy0 = (src / src_tiles_x) * kPatchSize;
            for (int dy = 0; dy < kPatchSize; ++dy) {
                int y = ty * kPatchSize + dy;
                if (y >= content.height) break;
                for (int dx = 0; dx < kPatchSize; ++dx) {
                    int x = tx * kPatchSize + dx;
                    if (x >= content.width) break;
                    const float* sp = st.pixel(std::min(sx0 + dx, st.width - 1),
                                               std::min(sy0 + dy, st.height - 1));
                    float yc = luma(content.pixel(x, y));
                    float* q = out.pixel(x, y);
                    for (int c = 0; c < 3; ++c) q[c] = 0.5f * yc + 0.5f * sp[c];
                }
            }
        }
    }

    // Contrast normalization: min-max stretch over all channels jointly.
    float lo = 1.0f, hi = 0.0f;
    for (float v : out.data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi - lo < 1e-6f) {
        std::fill(out.data.begin(), out.data.end(), 0.5f);
    } else {
        float inv = 1.0f / (hi - lo);
        for (float& v : out.data) v = clamp01((v - lo) * inv);
    }
    return out;
}

}  // namespace

const std::vector<StylizerKind>& stylizer_registry() {
    static const std::vector<StylizerKind> kinds = {
        StylizerKind::MomentMatch, StylizerKind::PaletteMap, StylizerKind::PatchBlend};
    return kinds;
}

const char* stylizer_name(StylizerKind k) {
    switch (k) {
        case StylizerKind::MomentMatch: return "moment";
        case StylizerKind::PaletteMap: return "palette";
        case StylizerKind::PatchBlend: return "patch";
    }
    return "unknown";
}

StylizerKind stylizer_from_name(const std::string& name) {
    for (StylizerKind k : stylizer_registry()) {
        if (name == stylizer_name(k)) return k;
    }
    throw std::invalid_argument("unknown stylizer '" + name +
                                "' (valid: moment, palette, patch)");
}

ChannelStats pyramid_stats(const Image& img) {
    double sum[3] = {0, 0, 0}, sum_sq[3] = {0, 0, 0};
    size_t n = 0;
    accumulate_stats(img, sum, sum_sq, n);
    Image half = blur_downsample(img);
    accumulate_stats(half, sum, sum_sq, n);

    ChannelStats st{};
    for (int c = 0; c < 3; ++c) {
        double mean = sum[c] / static_cast<double>(n);
        double var = sum_sq[c] / static_cast<double>(n) - mean * mean;
        st.mean[c] = mean;
        st.stddev[c] = std::sqrt(std::max(0.0, var));
    }
    return st;
}

std::vector<std::array<float, 3>> kmeans_palette(const Image& img, int k) {
    const size_t n = img.num_pixels();
    const float* px = img.data.data();
    std::vector<std::array<float, 3>> centers;
    centers.reserve(k);

    // k-means++ seeding with a fixed stream.
    Rng rng(kKmeansSeed);
    size_t first = rng.below(n);
    centers.push_back({px[first * 3], px[first * 3 + 1], px[first * 3 + 2]});
    std::vector<float> dist(n);
    for (int j = 1; j < k; ++j) {
        double total = 0.0;
        for (size_t i = 0; i < n; ++i) {
            float best = std::numeric_limits<float>::max();
            for (const auto& c : centers) {
                float d = 0;
                for (int ch = 0; ch < 3; ++ch) {
                    float diff = px[i * 3 + ch] - c[ch];
                    d += diff * diff;
                }
                best = std::min(best, d);
            }
            dist[i] = best;
            total += best;
        }
        size_t pick;
        if (total <= 0.0) {
            pick = rng.below(n);
        } else {
            double target = rng.uniform() * total;
            double acc = 0.0;
            pick = n - 1;
            for (size_t i = 0; i < n; ++i) {
                acc += dist[i];
                if (acc >= target) {
                    pick = i;
                    break;
                }
            }
        }
        centers.push_back({px[pick * 3], px[pick * 3 + 1], px[pick * 3 + 2]});
    }

    std::vector<size_t> assign(n, 0);
    for (int iter = 0; iter < kKmeansIterations; ++iter) {
        for (size_t i = 0; i < n; ++i) {
            float best_d = std::numeric_limits<float>::max();
            size_t best = 0;
            for (size_t j = 0; j < centers.size(); ++j) {
                float d = 0;
                for (int ch = 0; ch < 3; ++ch) {
                    float diff = px[i * 3 + ch] - centers[j][ch];
                    d += diff * diff;
                }
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
            assign[i] = best;
        }
        std::vector<std::array<double, 3>> sums(centers.size(), {0, 0, 0});
        std::vector<size_t> counts(centers.size(), 0);
        for (size_t i = 0; i < n; ++i) {
            for (int ch = 0; ch < 3; ++ch) sums[assign[i]][ch] += px[i * 3 + ch];
            counts[assign[i]]++;
        }
        for (size_t j = 0; j < centers.size(); ++j) {
            if (counts[j] == 0) {
                // Re-seed an empty cluster on the farthest pixel from its center.
                size_t far_i = 0;
                float far_d = -1.0f;
                for (size_t i = 0; i < n; ++i) {
                    float d = 0;
                    for (int ch = 0; ch < 3; ++ch) {
                        float diff = px[i * 3 + ch] - centers[assign[i]][ch];
                        d += diff * diff;
                    }
                    if (d > far_d) {
                        far_d = d;
                        far_i = i;
                    }
                }
                for (int ch = 0; ch < 3; ++ch) centers[j][ch] = px[far_i * 3 + ch];
            } else {
                for (int ch = 0; ch < 3; ++ch) {
                    centers[j][ch] = static_cast<float>(sums[j][ch] / counts[j]);
                }
            }
        }
    }
    return centers;
}

Image stylize(StylizerKind kind, const Image& content, const Image& style) {
    validate_image(content, "stylize content");
    validate_image(style, "stylize style");
    switch (kind) {
        case StylizerKind::MomentMatch: return moment_match(content, style);
        case StylizerKind::PaletteMap: return palette_map(content, style);
        case StylizerKind::PatchBlend: return patch_blend(content, style);
    }
    throw std::invalid_argument("stylize: unknown kind");
}

}  // namespace stylemb
