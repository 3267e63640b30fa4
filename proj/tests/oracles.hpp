#pragma once

// Reference computations that do not go through the library's combinatorics.
#include <array>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// Twists on the torus acting on homology slopes, a = (1,0), b = (0,1).
using Mat = std::array<long, 4>;

inline Mat mul(const Mat& x, const Mat& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

inline Mat twist_matrix(char c, int e) {
    Mat m = c == 'a' ? Mat{1, 1, 0, 1} : Mat{1, 0, -1, 1};
    if (e < 0) m = c == 'a' ? Mat{1, -1, 0, 1} : Mat{1, 0, 1, 1};
    return m;
}

struct Letter {
    char c;
    int e;
};

// Leftmost letter acts last.
inline Mat word_matrix(const std::vector<Letter>& w) {
    Mat m{1, 0, 0, 1};
    for (const auto& l : w) m = mul(m, twist_matrix(l.c, l.e));
    return m;
}

inline std::array<long, 2> slope_of(const std::vector<Letter>& w) {
    Mat m = word_matrix(w);
    return {m[0], m[2]};
}

inline long det_oracle(const std::array<long, 2>& x, const std::array<long, 2>& y) {
    return std::labs(x[0] * y[1] - x[1] * y[0]);
}

inline std::vector<Letter> random_word(std::mt19937& rng, int maxlen) {
    std::vector<Letter> w;
    int n = static_cast<int>(rng() % (maxlen + 1));
    for (int i = 0; i < n; ++i) w.push_back({rng() % 2 ? 'a' : 'b', rng() % 2 ? 1 : -1});
    return w;
}

}  // namespace oracle
