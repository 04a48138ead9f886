#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scmine/errors.hpp"
#include "scmine/term_vector.hpp"

namespace scmine {

/// Plain RGB raster, 8 bits per channel, row-major.
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb; // 3 * width * height bytes

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
};

/// Color bag of words: each pixel becomes a term whose id packs the three
/// channels reduced to `bits_per_channel` bits; weights are pixel counts.
inline TermVector quantize_frame(const Raster& raster, int bits_per_channel = 4) {
    if (raster.pixel_count() == 0)
        throw validation_error("quantize_frame: empty raster");
    if (bits_per_channel < 1 || bits_per_channel > 8)
        throw validation_error("quantize_frame: bits_per_channel must be in 1..8");
    const int shift = 8 - bits_per_channel;
    TermVector bag;
    const std::size_t n = raster.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const term_id r = raster.rgb[3 * i] >> shift;
        const term_id g = raster.rgb[3 * i + 1] >> shift;
        const term_id b = raster.rgb[3 * i + 2] >> shift;
        bag.add((r << (2 * bits_per_channel)) | (g << bits_per_channel) | b, 1.0);
    }
    return bag;
}

struct TimedBag {
    double timestamp = 0.0; // seconds
    TermVector bag;
};

/// Ordered, timestamped quantized frames of one video.
struct FrameSequence {
    std::string video_id;
    std::vector<TimedBag> frames; // timestamps strictly increasing
};

} // namespace scmine
