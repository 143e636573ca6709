#pragma once

#include <cstdint>
#include <vector>

namespace exoadapt {

template <typename T>
struct Image {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Image() = default;
  Image(int w, int h, T fill = T{}) : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  T& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  const T& at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

  std::size_t pixel_count() const { return data.size(); }
  bool same_shape(int w, int h) const { return width == w && height == h; }

  friend bool operator==(const Image&, const Image&) = default;
};

/// Depth in millimeters; 0 marks an invalid measurement.
using DepthImage = Image<std::uint16_t>;

/// Binary mask: 0 or 1 per pixel (stored as 0/255 in 8-bit PNG).
using MaskImage = Image<std::uint8_t>;

/// 8-bit RGB, interleaved.
struct ColorImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // size = width * height * 3

  ColorImage() = default;
  ColorImage(int w, int h, std::uint8_t r = 0, std::uint8_t g = 0, std::uint8_t b = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3) {
    for (std::size_t i = 0; i < data.size(); i += 3) {
      data[i] = r;
      data[i + 1] = g;
      data[i + 2] = b;
    }
  }

  std::uint8_t& at(int x, int y, int c) { return data[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
  const std::uint8_t& at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }

  friend bool operator==(const ColorImage&, const ColorImage&) = default;
};

}  // namespace exoadapt
