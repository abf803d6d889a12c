#pragma once

// Seeded random {1*(k-2),2}-assignments of complete multipartite graphs,
// used by the property tests and the verify-paper report.

#include <algorithm>
#include <random>
#include <vector>

#include "strictcol/lambda.hpp"

namespace strictcol::gen {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<int> sample(std::mt19937& rng, std::vector<int> pool, int count)
{
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(count));
    return pool;
}

// Colors for a {1*(k-2),2}-assignment: a pair group of `pair_width` colors
// and k-2 singleton groups, all labels shuffled.
struct Palette {
    std::vector<int> pair_group;
    std::vector<std::vector<int>> singles;
};

inline Palette palette(std::mt19937& rng, int k, int pair_width)
{
    std::vector<int> widths{pair_width};
    for (int i = 0; i < k - 2; ++i)
        widths.push_back(uniform(rng, 1, 3));
    int total = 0;
    for (int w : widths)
        total += w;
    std::vector<int> labels(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i)
        labels[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    Palette p;
    std::size_t at = 0;
    for (std::size_t g = 0; g < widths.size(); ++g) {
        std::vector<int> colors(labels.begin() + static_cast<std::ptrdiff_t>(at),
                                labels.begin() + static_cast<std::ptrdiff_t>(at) + widths[g]);
        at += static_cast<std::size_t>(widths[g]);
        std::sort(colors.begin(), colors.end());
        if (g == 0)
            p.pair_group = colors;
        else
            p.singles.push_back(colors);
    }
    return p;
}

inline LambdaAssignment assemble(std::mt19937& rng, const Palette& p, std::vector<std::vector<int>> pair_lists, int k)
{
    std::vector<std::vector<int>> lists;
    for (auto l : pair_lists) {
        for (const auto& s : p.singles)
            l.push_back(s[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.size()) - 1))]);
        lists.push_back(l);
    }
    std::vector<std::vector<int>> groups{p.pair_group};
    for (const auto& s : p.singles)
        groups.push_back(s);
    std::shuffle(groups.begin(), groups.end(), rng);
    return LambdaAssignment{ListAssignment(std::move(lists)), ColorGrouping{std::move(groups)},
                            IntegerPartition::near_coloring(k)};
}

// Uniformly random lists within a random palette.
inline LambdaAssignment random_near_coloring(std::mt19937& rng, const PartSizes& sizes)
{
    const int k = sizes.k();
    const Palette p = palette(rng, k, uniform(rng, 2, 6));
    std::vector<std::vector<int>> pairs;
    for (int v = 0; v < sizes.total(); ++v)
        pairs.push_back(sample(rng, p.pair_group, 2));
    return assemble(rng, p, pairs, k);
}

// Lists that make the first two C_1 attempts fail: V_1 gets two disjoint
// pairs X, Y, V_2 the four mixed pairs, V_3 the mixed pairs plus (when it
// has five vertices) one random extra pair. Vertex order within parts is
// shuffled.
inline LambdaAssignment adversarial_near_coloring(std::mt19937& rng, const PartSizes& sizes)
{
    const int k = sizes.k();
    const Palette p = palette(rng, k, uniform(rng, 4, 6));
    const auto four = sample(rng, p.pair_group, 4);
    const std::vector<int> x{four[0], four[1]}, y{four[2], four[3]};
    std::vector<std::vector<int>> mixed;
    for (int a : x)
        for (int b : y)
            mixed.push_back({a, b});
    std::vector<std::vector<int>> pairs;
    std::vector<std::vector<int>> v1{x, y};
    std::shuffle(v1.begin(), v1.end(), rng);
    pairs.insert(pairs.end(), v1.begin(), v1.end());
    auto v2 = mixed;
    std::shuffle(v2.begin(), v2.end(), rng);
    pairs.insert(pairs.end(), v2.begin(), v2.end());
    auto v3 = mixed;
    for (int i = 4; i < sizes.size(2); ++i)
        v3.push_back(sample(rng, p.pair_group, 2));
    v3.resize(static_cast<std::size_t>(sizes.size(2)));
    std::shuffle(v3.begin(), v3.end(), rng);
    pairs.insert(pairs.end(), v3.begin(), v3.end());
    for (int part = 3; part < k; ++part)
        for (int j = 0; j < sizes.size(static_cast<std::size_t>(part)); ++j)
            pairs.push_back(sample(rng, p.pair_group, 2));
    return assemble(rng, p, pairs, k);
}

} // namespace strictcol::gen
