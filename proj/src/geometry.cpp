#include "screenkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace screenkit {

namespace {

std::string box_repr(const BoundingBox& b) {
    std::ostringstream os;
    os << "[" << b.x_min << ", " << b.y_min << ", " << b.x_max << ", " << b.y_max << "]";
    return os.str();
}

}  // namespace

bool is_valid(const BoundingBox& b) {
    return std::isfinite(b.x_min) && std::isfinite(b.y_min) && std::isfinite(b.x_max) &&
           std::isfinite(b.y_max) && b.x_min < b.x_max && b.y_min < b.y_max;
}

double area(const BoundingBox& b) {
    return (b.x_max - b.x_min) * (b.y_max - b.y_min);
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double iw = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    if (iw <= 0.0) return 0.0;
    const double ih = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (ih <= 0.0) return 0.0;
    const double inter = iw * ih;
    return inter / (area(a) + area(b) - inter);
}

BoundingBox rescale_isotropic(const BoundingBox& b, double factor) {
    if (!std::isfinite(factor) || factor <= 0.0)
        throw std::invalid_argument("rescale_isotropic: factor must be finite and > 0, got " +
                                    std::to_string(factor));
    if (factor == 1.0) return b;
    const double cx = 0.5 * (b.x_min + b.x_max);
    const double cy = 0.5 * (b.y_min + b.y_max);
    const double hw = 0.5 * factor * (b.x_max - b.x_min);
    const double hh = 0.5 * factor * (b.y_max - b.y_min);
    return {cx - hw, cy - hh, cx + hw, cy + hh};
}

BoundingBox clip_to_image(const BoundingBox& b, const ImageSize& size) {
    const double w = static_cast<double>(size.width);
    const double h = static_cast<double>(size.height);
    const BoundingBox out{std::clamp(b.x_min, 0.0, w), std::clamp(b.y_min, 0.0, h),
                          std::clamp(b.x_max, 0.0, w), std::clamp(b.y_max, 0.0, h)};
    if (!(out.x_min < out.x_max && out.y_min < out.y_max))
        throw std::domain_error("clip_to_image: box " + box_repr(b) + " has no area inside image " +
                                std::to_string(size.width) + "x" + std::to_string(size.height));
    return out;
}

BoundingBox bbox_from_mask(const Mask& mask) {
    int min_x = mask.width, min_y = mask.height, max_x = -1, max_y = -1;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.at(x, y)) continue;
            min_x = std::min(min_x, x);
            min_y = std::min(min_y, y);
            max_x = std::max(max_x, x);
            max_y = std::max(max_y, y);
        }
    }
    if (max_x < 0) throw std::invalid_argument("bbox_from_mask: mask has no positive pixels");
    return {static_cast<double>(min_x), static_cast<double>(min_y), static_cast<double>(max_x + 1),
            static_cast<double>(max_y + 1)};
}

ResizeResult resize_transform(const ImageSize& size, const ResizeSpec& spec) {
    if (size.width < 1 || size.height < 1 || spec.max_width < 1 || spec.max_height < 1)
        throw std::invalid_argument("resize_transform: dimensions must be >= 1");
    const double scale = std::min({static_cast<double>(spec.max_width) / size.width,
                                   static_cast<double>(spec.max_height) / size.height, 1.0});
    const auto scaled = [scale](int dim) {
        // round half up
        return std::max(1, static_cast<int>(std::floor(dim * scale + 0.5)));
    };
    return {scale, ImageSize{scaled(size.width), scaled(size.height)}};
}

BoundingBox transform_box(const BoundingBox& b, double scale) {
    return {b.x_min * scale, b.y_min * scale, b.x_max * scale, b.y_max * scale};
}

}  // namespace screenkit
