#pragma once

#include <cstdint>
#include <vector>

namespace screenkit {

// Axis-aligned box in image pixel coordinates.
// Half-open convention: the box covers [x_min, x_max) x [y_min, y_max),
// so a valid box has strictly positive width and height.
struct BoundingBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// True when all coordinates are finite and the box has positive area.
bool is_valid(const BoundingBox& b);

struct ImageSize {
    int width = 0;
    int height = 0;

    friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

// Resize target: images are shrunk (never enlarged) to fit within
// max_width x max_height while preserving aspect ratio.
struct ResizeSpec {
    int max_width = 0;
    int max_height = 0;
};

// Binary mask, row-major; pixel (x, y) is data[y * width + x].
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    Mask() = default;
    Mask(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}

    bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool value = true) { data[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0; }
};

double area(const BoundingBox& b);

// Intersection over union in [0, 1]; 0 for disjoint boxes and exactly 1 for
// identical ones. Symmetric in its arguments.
double iou(const BoundingBox& a, const BoundingBox& b);

// Scales width and height by `factor` about the box center. Does not clip;
// pair with clip_to_image when the result must stay inside an image.
// Throws std::invalid_argument for a non-positive or non-finite factor.
BoundingBox rescale_isotropic(const BoundingBox& b, double factor);

// Clamps the box to [0, width] x [0, height]. Throws std::domain_error when
// nothing with positive area remains (box entirely outside the image).
BoundingBox clip_to_image(const BoundingBox& b, const ImageSize& size);

// Tightest half-open box covering every positive pixel, so x_max is the
// largest positive column index plus one (same for rows).
// Throws std::invalid_argument on an all-zero mask.
BoundingBox bbox_from_mask(const Mask& mask);

struct ResizeResult {
    double scale = 1.0;  // in (0, 1]
    ImageSize new_size;
};

// Downscale factor that fits `size` inside `spec`, capped at 1 (no
// upscaling), with the resulting dimensions rounded half-up per axis and
// clamped to at least 1 pixel.
ResizeResult resize_transform(const ImageSize& size, const ResizeSpec& spec);

// Multiplies every coordinate by `scale` (> 0); keeps annotation boxes
// aligned with a resized image.
BoundingBox transform_box(const BoundingBox& b, double scale);

}  // namespace screenkit
