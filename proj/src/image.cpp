#include "stylemb/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stylemb {

void validate_image(const Image& img, const char* what) {
    if (img.width < kMinImageSize || img.height < kMinImageSize) {
        throw std::invalid_argument(std::string(what) + ": dimensions must be >= 16, got " +
                                    std::to_string(img.width) + "x" + std::to_string(img.height));
    }
    if (img.data.size() != img.num_pixels() * 3) {
        throw std::invalid_argument(std::string(what) + ": pixel buffer size mismatch");
    }
    for (float v : img.data) {
        if (!(v >= 0.0f && v <= 1.0f)) {
            throw std::invalid_argument(std::string(what) +
                                        ": channel value outside [0,1] or non-finite");
        }
    }
}

Image resize_bilinear(const Image& src, int w, int h) {
    if (w == src.width && h == src.height) return src;
    Image dst(w, h);
    const double sx = static_cast<double>(src.width) / w;
    const double sy = static_cast<double>(src.height) / h;
    for (int y = 0; y < h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        if (fy < 0) fy = 0;
        int y0 = static_cast<int>(fy);
        int y1 = y0 + 1 < src.height ? y0 + 1 : src.height - 1;
        double wy = fy - y0;
        for (int x = 0; x < w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            if (fx < 0) fx = 0;
            int x0 = static_cast<int>(fx);
            int x1 = x0 + 1 < src.width ? x0 + 1 : src.width - 1;
            double wx = fx - x0;
            const float* p00 = src.pixel(x0, y0);
            const float* p10 = src.pixel(x1, y0);
            const float* p01 = src.pixel(x0, y1);
            const float* p11 = src.pixel(x1, y1);
            float* out = dst.pixel(x, y);
            for (int c = 0; c < 3; ++c) {
                double top = p00[c] + (p10[c] - p00[c]) * wx;
                double bot = p01[c] + (p11[c] - p01[c]) * wx;
                out[c] = static_cast<float>(top + (bot - top) * wy);
            }
        }
    }
    return dst;
}

double mean_abs_diff(const Image& a, const Image& b) {
    if (a.width != b.width || a.height != b.height) {
        throw std::invalid_argument("mean_abs_diff: size mismatch");
    }
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) acc += std::fabs(a.data[i] - b.data[i]);
    return acc / static_cast<double>(a.data.size());
}

bool images_equal(const Image& a, const Image& b) {
    return a.width == b.width && a.height == b.height && a.data == b.data;
}

}  // namespace stylemb
