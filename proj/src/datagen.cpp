#include "stylemb/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stylemb/rng.hpp"

namespace stylemb {

namespace {

constexpr uint64_t kContentSalt = 0x636f6e74656e7400ull;  // "content"
constexpr uint64_t kStyleSalt = 0x7374796c65000000ull;    // "style"

void check_size(int size) {
    if (size < kMinImageSize) {
        throw std::invalid_argument("generator size must be >= 16, got " + std::to_string(size));
    }
}

std::array<float, 3> random_color(Rng& rng) {
    return {static_cast<float>(rng.uniform()), static_cast<float>(rng.uniform()),
            static_cast<float>(rng.uniform())};
}

void fill_gradient(Image& img, const std::array<float, 3>& a, const std::array<float, 3>& b,
                   int direction) {
    const int w = img.width, h = img.height;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            float t;
            switch (direction & 3) {
                case 0: t = static_cast<float>(x) / (w - 1); break;
                case 1: t = static_cast<float>(y) / (h - 1); break;
                case 2: t = static_cast<float>(x + y) / (w + h - 2); break;
                default: t = static_cast<float>((w - 1 - x) + y) / (w + h - 2); break;
            }
            float* p = img.pixel(x, y);
            for (int c = 0; c < 3; ++c) p[c] = a[c] + (b[c] - a[c]) * t;
        }
    }
}

void draw_disc(Image& img, float cx, float cy, float r, const std::array<float, 3>& color) {
    int x0 = std::max(0, static_cast<int>(cx - r) - 1);
    int x1 = std::min(img.width - 1, static_cast<int>(cx + r) + 1);
    int y0 = std::max(0, static_cast<int>(cy - r) - 1);
    int y1 = std::min(img.height - 1, static_cast<int>(cy + r) + 1);
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            float dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r * r) {
                float* p = img.pixel(x, y);
                for (int c = 0; c < 3; ++c) p[c] = color[c];
            }
        }
    }
}

void draw_rect(Image& img, float cx, float cy, float hw, float hh,
               const std::array<float, 3>& color) {
    int x0 = std::max(0, static_cast<int>(cx - hw));
    int x1 = std::min(img.width - 1, static_cast<int>(cx + hw));
    int y0 = std::max(0, static_cast<int>(cy - hh));
    int y1 = std::min(img.height - 1, static_cast<int>(cy + hh));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            float* p = img.pixel(x, y);
            for (int c = 0; c < 3; ++c) p[c] = color[c];
        }
    }
}

void draw_triangle(Image& img, float cx, float cy, float r, float rot,
                   const std::array<float, 3>& color) {
    float vx[3], vy[3];
    for (int i = 0; i < 3; ++i) {
        float a = rot + 2.0943951023931953f * i;  // 2*pi/3
        vx[i] = cx + r * std::cos(a);
        vy[i] = cy + r * std::sin(a);
    }
    auto edge = [](float ax, float ay, float bx, float by, float px, float py) {
        return (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    };
    int x0 = std::max(0, static_cast<int>(std::min({vx[0], vx[1], vx[2]})));
    int x1 = std::min(img.width - 1, static_cast<int>(std::max({vx[0], vx[1], vx[2]})) + 1);
    int y0 = std::max(0, static_cast<int>(std::min({vy[0], vy[1], vy[2]})));
    int y1 = std::min(img.height - 1, static_cast<int>(std::max({vy[0], vy[1], vy[2]})) + 1);
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            float e0 = edge(vx[0], vy[0], vx[1], vy[1], (float)x, (float)y);
            float e1 = edge(vx[1], vy[1], vx[2], vy[2], (float)x, (float)y);
            float e2 = edge(vx[2], vy[2], vx[0], vy[0], (float)x, (float)y);
            if ((e0 >= 0 && e1 >= 0 && e2 >= 0) || (e0 <= 0 && e1 <= 0 && e2 <= 0)) {
                float* p = img.pixel(x, y);
                for (int c = 0; c < 3; ++c) p[c] = color[c];
            }
        }
    }
}

// Integer lattice hash -> [0,1). Stable across platforms.
float lattice_noise(uint64_t seed, int64_t x, int64_t y) {
    uint64_t h = mix_seed(seed, (static_cast<uint64_t>(x) << 32) ^ static_cast<uint64_t>(y & 0xffffffff));
    return static_cast<float>(h >> 40) / static_cast<float>(1 << 24);
}

// Smooth value noise at a given cell scale.
float value_noise(uint64_t seed, float x, float y, float scale) {
    float fx = x / scale, fy = y / scale;
    int64_t ix = static_cast<int64_t>(std::floor(fx));
    int64_t iy = static_cast<int64_t>(std::floor(fy));
    float tx = fx - ix, ty = fy - iy;
    tx = tx * tx * (3.0f - 2.0f * tx);
    ty = ty * ty * (3.0f - 2.0f * ty);
    float v00 = lattice_noise(seed, ix, iy);
    float v10 = lattice_noise(seed, ix + 1, iy);
    float v01 = lattice_noise(seed, ix, iy + 1);
    float v11 = lattice_noise(seed, ix + 1, iy + 1);
    float top = v00 + (v10 - v00) * tx;
    float bot = v01 + (v11 - v01) * tx;
    return top + (bot - top) * ty;
}

std::array<float, 3> palette_lerp(const std::vector<std::array<float, 3>>& pal, float t) {
    t = std::clamp(t, 0.0f, 1.0f);
    float pos = t * (pal.size() - 1);
    size_t i = std::min(static_cast<size_t>(pos), pal.size() - 2);
    float f = pos - i;
    std::array<float, 3> out;
    for (int c = 0; c < 3; ++c) out[c] = pal[i][c] + (pal[i + 1][c] - pal[i][c]) * f;
    return out;
}

void apply_contrast(Image& img, float contrast) {
    for (float& v : img.data) v = clamp01(0.5f + (v - 0.5f) * contrast);
}

}  // namespace

const char* texture_kind_name(TextureKind k) {
    switch (k) {
        case TextureKind::Stripes: return "stripes";
        case TextureKind::NoiseGrain: return "noise-grain";
        case TextureKind::Blobs: return "blobs";
        case TextureKind::Crosshatch: return "crosshatch";
    }
    return "unknown";
}

Image gen_content(uint64_t seed, int size) {
    check_size(size);
    Rng rng(mix_seed(seed, kContentSalt));
    Image img(size, size);

    fill_gradient(img, random_color(rng), random_color(rng), static_cast<int>(rng.below(4)));

    int n_shapes = 2 + static_cast<int>(rng.below(7));  // 2..8
    for (int i = 0; i < n_shapes; ++i) {
        auto color = random_color(rng);
        float cx = static_cast<float>(rng.uniform(0.0, size));
        float cy = static_cast<float>(rng.uniform(0.0, size));
        float r = static_cast<float>(rng.uniform(0.08, 0.35)) * size;
        switch (rng.below(3)) {
            case 0: draw_disc(img, cx, cy, r, color); break;
            case 1: {
                float hh = static_cast<float>(rng.uniform(0.05, 0.3)) * size;
                draw_rect(img, cx, cy, r, hh, color);
                break;
            }
            default: {
                float rot = static_cast<float>(rng.uniform(0.0, 6.283185307179586));
                draw_triangle(img, cx, cy, r, rot, color);
                break;
            }
        }
    }
    return img;
}

StyleRecipe recipe_from_seed(uint64_t seed) {
    Rng rng(mix_seed(seed, kStyleSalt));
    StyleRecipe r;
    r.seed = seed;
    size_t n_colors = 3 + rng.below(4);  // 3..6
    r.palette.reserve(n_colors);
    for (size_t i = 0; i < n_colors; ++i) r.palette.push_back(random_color(rng));
    r.texture_kind = static_cast<TextureKind>(rng.below(4));
    r.texture_scale = static_cast<float>(std::exp(rng.uniform(std::log(3.0), std::log(20.0))));
    r.contrast = static_cast<float>(rng.uniform(0.2, 1.0));
    return r;
}

StyleSample gen_style(uint64_t seed, int size) {
    check_size(size);
    StyleRecipe recipe = recipe_from_seed(seed);
    // Separate stream for rendering choices so the recipe stays a pure
    // function of the seed alone.
    Rng rng(mix_seed(seed, kStyleSalt ^ 0x72656e646572ull));
    Image img(size, size);
    const auto& pal = recipe.palette;
    const float scale = recipe.texture_scale;

    switch (recipe.texture_kind) {
        case TextureKind::Stripes: {
            double angle = rng.uniform(0.0, 3.141592653589793);
            double dx = std::cos(angle), dy = std::sin(angle);
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    // Offset keeps the projection positive before flooring.
                    double t = (x * dx + y * dy) / scale + 1024.0;
                    size_t idx = static_cast<size_t>(t) % pal.size();
                    const auto& c = pal[idx];
                    float* p = img.pixel(x, y);
                    for (int ch = 0; ch < 3; ++ch) p[ch] = c[ch];
                }
            }
            break;
        }
        case TextureKind::NoiseGrain: {
            uint64_t nseed = rng.next_u64();
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    float coarse = value_noise(nseed, (float)x, (float)y, scale);
                    float grain = lattice_noise(nseed ^ 0x67726169ull, x, y);
                    float t = 0.75f * coarse + 0.25f * grain;
                    auto c = palette_lerp(pal, t);
                    float* p = img.pixel(x, y);
                    for (int ch = 0; ch < 3; ++ch) p[ch] = c[ch];
                }
            }
            break;
        }
        case TextureKind::Blobs: {
            int n_blobs = 6 + static_cast<int>(rng.below(10));
            std::vector<std::array<float, 3>> centers(n_blobs);
            std::vector<size_t> color_idx(n_blobs);
            for (int i = 0; i < n_blobs; ++i) {
                centers[i] = {static_cast<float>(rng.uniform(0.0, size)),
                              static_cast<float>(rng.uniform(0.0, size)), 0.0f};
                color_idx[i] = rng.below(pal.size());
            }
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    float best = 1e30f;
                    size_t best_i = 0;
                    for (int i = 0; i < n_blobs; ++i) {
                        float dx = x - centers[i][0], dy = y - centers[i][1];
                        float d = dx * dx + dy * dy;
                        if (d < best) {
                            best = d;
                            best_i = i;
                        }
                    }
                    const auto& c = pal[color_idx[best_i]];
                    float* p = img.pixel(x, y);
                    for (int ch = 0; ch < 3; ++ch) p[ch] = c[ch];
                }
            }
            break;
        }
        case TextureKind::Crosshatch: {
            float a1 = static_cast<float>(rng.uniform(0.2, 1.4));
            float a2 = a1 + 1.5707963f + static_cast<float>(rng.uniform(-0.3, 0.3));
            float d1x = std::cos(a1), d1y = std::sin(a1);
            float d2x = std::cos(a2), d2y = std::sin(a2);
            const auto& bg = pal[0];
            const auto& l1 = pal[1 % pal.size()];
            const auto& l2 = pal[2 % pal.size()];
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    float t1 = std::fmod(std::fabs(x * d1x + y * d1y), scale) / scale;
                    float t2 = std::fmod(std::fabs(x * d2x + y * d2y), scale) / scale;
                    float* p = img.pixel(x, y);
                    const float duty = 0.3f;
                    if (t1 < duty && t2 < duty) {
                        for (int ch = 0; ch < 3; ++ch) p[ch] = 0.5f * (l1[ch] + l2[ch]) * 0.6f;
                    } else if (t1 < duty) {
                        for (int ch = 0; ch < 3; ++ch) p[ch] = l1[ch];
                    } else if (t2 < duty) {
                        for (int ch = 0; ch < 3; ++ch) p[ch] = l2[ch];
                    } else {
                        for (int ch = 0; ch < 3; ++ch) p[ch] = bg[ch];
                    }
                }
            }
            break;
        }
    }

    apply_contrast(img, recipe.contrast);
    return {std::move(img), std::move(recipe)};
}

}  // namespace stylemb
