#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace polsa {

/// Row-major 2-D grid, the storage shape shared by images, matrix fields
/// and detector maps.
template <typename T>
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Grid() = default;
    Grid(int w, int h, const T& fill = T{})
        : width(w), height(h), data(check_extent(w, h), fill) {}

    T& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    const T& at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }

    size_t size() const { return data.size(); }
    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width && y >= 0 && y < height;
    }

private:
    static size_t check_extent(int w, int h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("Grid: width and height must be >= 1");
        return static_cast<size_t>(w) * static_cast<size_t>(h);
    }
};

}  // namespace polsa
