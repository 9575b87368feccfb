#pragma once

/**
 * @file partitions.hpp
 * @brief Integer partitions, rectangular partitions and the gluing map.
 *
 * Partitions are multiplicity vectors: mult[j-1] is the number of parts of
 * size j, so [1^2 2] of 4 is {2, 1, 0, 0}. Rectangular partitions are
 * multisets of l x h rectangles stored as a map (l, h) -> count, with every
 * stored count positive.
 *
 * Enumeration orders are fixed so every table the CLI prints is reproducible:
 *  - enumerate_partitions(n): ascending lexicographic order of the
 *    multiplicity vectors ([n] first, [1^n] last);
 *  - enumerate_rect_partitions(n): ascending lexicographic order of the
 *    sorted (l, h, count) block lists.
 */

#include "charvar/poly.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace charvar {

struct Partition {
    unsigned n = 0;
    std::vector<unsigned> mult;  ///< size n; mult[j-1] = k_j

    /// Checks sum j*k_j == n; throws InvalidArgument otherwise.
    Partition(unsigned n, std::vector<unsigned> mult);
    Partition() = default;

    /// The one-part partition [n].
    static Partition single(unsigned n);

    /// k_j, zero when j is out of range.
    unsigned k(unsigned j) const { return j >= 1 && j <= mult.size() ? mult[j - 1] : 0; }
    /// Number of parts, sum of k_j.
    unsigned length() const;

    /// Exponent notation, e.g. "1^2 2".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;
};

using RectKey = std::pair<unsigned, unsigned>;  // (l, h)

struct RectPartition {
    unsigned n = 0;
    std::map<RectKey, unsigned> blocks;

    RectPartition(unsigned n, std::map<RectKey, unsigned> blocks);
    RectPartition() = default;

    /// "(lxh)^k ..." in ascending (l, h) order.
    std::string to_string() const;

    friend bool operator==(const RectPartition&, const RectPartition&) = default;
};

std::vector<Partition> enumerate_partitions(unsigned n);

/// (sum parts)! / prod(parts_i!)
Integer multinomial(const std::vector<unsigned>& parts);

std::vector<RectPartition> enumerate_rect_partitions(unsigned n);

/// [m] with m_l = sum_h h * k_{l,h}.
Partition glue(const RectPartition& rp);

/// All rectangular partitions with glue(rp) == m.
std::vector<RectPartition> fiber(const Partition& m);

Integer factorial(unsigned n);

}  // namespace charvar
