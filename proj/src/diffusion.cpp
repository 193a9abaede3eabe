#include "rachaos/diffusion.hpp"

#include <algorithm>
#include <numeric>

namespace rachaos {

namespace {

// Gray values ordered by distance from the prediction: p, p-1, p+1, p-2, ...
// skipping values outside [0, 255].
std::array<std::uint8_t, 256> slot_order(std::uint8_t prediction) {
    std::array<std::uint8_t, 256> slots{};
    std::size_t n = 0;
    const int p = prediction;
    slots[n++] = prediction;
    for (int d = 1; d < 256; ++d) {
        if (p - d >= 0) slots[n++] = std::uint8_t(p - d);
        if (p + d <= 255) slots[n++] = std::uint8_t(p + d);
    }
    return slots;
}

// All 256 gray values sorted by (count ascending, value ascending).
std::array<std::uint8_t, 256> output_order(const FrequencyTable& freq) {
    std::array<std::uint8_t, 256> order{};
    std::iota(order.begin(), order.end(), std::uint8_t(0));
    std::sort(order.begin(), order.end(), [&freq](std::uint8_t a, std::uint8_t b) {
        if (freq[a] != freq[b]) return freq[a] < freq[b];
        return a < b;
    });
    return order;
}

// Closed form of slot_order: index of value v in the outward walk from p.
std::size_t slot_index(std::uint8_t prediction, std::uint8_t value) {
    if (value == prediction) return 0;
    const int p = prediction;
    const int d = value > p ? value - p : p - value;
    std::size_t k = 1 + std::size_t(std::min(d - 1, p)) + std::size_t(std::min(d - 1, 255 - p));
    if (value > p && p - d >= 0) ++k;
    return k;
}

// Inverse of slot_index: the value sitting at slot k of the walk from p.
std::uint8_t slot_value(std::uint8_t prediction, std::size_t k) {
    if (k == 0) return prediction;
    const int p = prediction;
    const int both = 2 * std::min(p, 255 - p);  // slots filled from both sides
    if (k <= std::size_t(both)) {
        const int d = int(k + 1) / 2;
        return std::uint8_t(k % 2 == 1 ? p - d : p + d);
    }
    const int j = int(k) - both;
    const int m = std::min(p, 255 - p);
    return std::uint8_t(p <= 127 ? p + m + j : p - m - j);
}

// Frequency table plus the (count asc, value asc) order of all gray values,
// maintained incrementally: a +1 on one count only ever moves that value to
// the right. Produces bit-identical results to re-sorting from scratch
// (same comparator, counts never decrease).
struct OrderedCounts {
    FrequencyTable count;
    std::array<std::uint8_t, 256> order;  // values in (count, value) order
    std::array<std::uint8_t, 256> pos;    // pos[value] = index into order

    explicit OrderedCounts(const FrequencyTable& init) : count(init) {
        order = output_order(count);
        for (std::size_t i = 0; i < 256; ++i) pos[order[i]] = std::uint8_t(i);
    }

    void increment(std::uint8_t v) {
        count[v] += 1.0;
        std::size_t i = pos[v];
        while (i + 1 < 256) {
            const std::uint8_t w = order[i + 1];
            if (count[w] < count[v] || (count[w] == count[v] && w < v)) {
                order[i] = w;
                pos[w] = std::uint8_t(i);
                ++i;
            } else {
                break;
            }
        }
        order[i] = v;
        pos[v] = std::uint8_t(i);
    }
};

std::size_t predecessor_index(std::size_t flat, std::size_t width) {
    // Row starts are predicted from the first pixel of the previous row.
    return flat % width == 0 ? flat - width : flat - 1;
}

}  // namespace

GrayMapping build_mapping(const FrequencyTable& freq, std::uint8_t prediction) {
    const auto slots = slot_order(prediction);
    const auto outputs = output_order(freq);
    GrayMapping mapping;
    for (std::size_t k = 0; k < 256; ++k) mapping.forward[slots[k]] = outputs[k];
    return mapping;
}

GrayImage diffuse(const GrayImage& image, const FrequencyTable& init) {
    if (image.empty()) throw EmptyImage("cannot diffuse an empty image");

    OrderedCounts counts(init);
    GrayImage out(image.height(), image.width());
    const auto in = image.pixels();
    const auto dst = out.pixels();

    dst[0] = in[0];
    counts.increment(dst[0]);

    for (std::size_t i = 1; i < in.size(); ++i) {
        const std::uint8_t prediction = in[predecessor_index(i, image.width())];
        dst[i] = counts.order[slot_index(prediction, in[i])];
        counts.increment(dst[i]);
    }
    return out;
}

GrayImage undiffuse(const GrayImage& image, const FrequencyTable& init) {
    if (image.empty()) throw EmptyImage("cannot undiffuse an empty image");

    OrderedCounts counts(init);
    GrayImage out(image.height(), image.width());
    const auto in = image.pixels();
    const auto dst = out.pixels();

    dst[0] = in[0];
    counts.increment(in[0]);

    for (std::size_t i = 1; i < in.size(); ++i) {
        // Predictions come from already-recovered originals, so the counts
        // evolve exactly as they did during diffusion.
        const std::uint8_t prediction = dst[predecessor_index(i, image.width())];
        dst[i] = slot_value(prediction, counts.pos[in[i]]);
        counts.increment(in[i]);
    }
    return out;
}

}  // namespace rachaos
