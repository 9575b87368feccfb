#include "charvar/partitions.hpp"

#include "charvar/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

namespace charvar {

namespace {

void require_positive(unsigned n, const char* what) {
    if (n == 0) throw InvalidArgument(std::string(what) + " requires n >= 1");
}

void partitions_rec(unsigned n, unsigned j, unsigned rem, std::vector<unsigned>& mult,
                    std::vector<Partition>& out) {
    if (j > n) {
        if (rem == 0) out.emplace_back(n, mult);
        return;
    }
    for (unsigned k = 0; k * j <= rem; ++k) {
        mult[j - 1] = k;
        partitions_rec(n, j + 1, rem - k * j, mult, out);
    }
    mult[j - 1] = 0;
}

void rect_rec(unsigned n, const std::vector<RectKey>& types, std::size_t i, unsigned rem,
              std::map<RectKey, unsigned>& blocks, std::vector<RectPartition>& out) {
    if (rem == 0) {
        out.emplace_back(n, blocks);
        return;
    }
    if (i == types.size()) return;
    const auto [l, h] = types[i];
    const unsigned area = l * h;
    rect_rec(n, types, i + 1, rem, blocks, out);
    for (unsigned k = 1; k * area <= rem; ++k) {
        blocks[types[i]] = k;
        rect_rec(n, types, i + 1, rem - k * area, blocks, out);
    }
    blocks.erase(types[i]);
}

using BlockList = std::vector<std::tuple<unsigned, unsigned, unsigned>>;

BlockList block_list(const RectPartition& rp) {
    BlockList out;
    for (const auto& [key, k] : rp.blocks) out.emplace_back(key.first, key.second, k);
    return out;
}

}  // namespace

Partition::Partition(unsigned n_, std::vector<unsigned> mult_) : n(n_), mult(std::move(mult_)) {
    mult.resize(n, 0);
    unsigned total = 0;
    for (unsigned j = 1; j <= n; ++j) total += j * mult[j - 1];
    if (total != n) {
        throw InvalidArgument("multiplicities sum to " + std::to_string(total) + ", expected " +
                              std::to_string(n));
    }
}

Partition Partition::single(unsigned n) {
    require_positive(n, "Partition::single");
    std::vector<unsigned> mult(n, 0);
    mult[n - 1] = 1;
    return Partition(n, std::move(mult));
}

unsigned Partition::length() const {
    unsigned s = 0;
    for (unsigned k : mult) s += k;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned j = 1; j <= mult.size(); ++j) {
        const unsigned k = mult[j - 1];
        if (k == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << j;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

RectPartition::RectPartition(unsigned n_, std::map<RectKey, unsigned> blocks_)
    : n(n_), blocks(std::move(blocks_)) {
    unsigned area = 0;
    for (const auto& [key, k] : blocks) {
        if (k == 0) throw InvalidArgument("rectangular partition with a zero multiplicity");
        area += key.first * key.second * k;
    }
    if (area != n) {
        throw InvalidArgument("rectangles cover area " + std::to_string(area) + ", expected " +
                              std::to_string(n));
    }
}

std::string RectPartition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, k] : blocks) {
        if (!first) os << ' ';
        first = false;
        os << '(' << key.first << 'x' << key.second << ')';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    require_positive(n, "enumerate_partitions");
    std::vector<Partition> out;
    std::vector<unsigned> mult(n, 0);
    partitions_rec(n, 1, n, mult, out);
    return out;
}

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer multinomial(const std::vector<unsigned>& parts) {
    unsigned m = 0;
    for (unsigned p : parts) m += p;
    Integer num = factorial(m);
    for (unsigned p : parts) num /= factorial(p);
    return num;
}

std::vector<RectPartition> enumerate_rect_partitions(unsigned n) {
    require_positive(n, "enumerate_rect_partitions");
    static std::mutex mutex;
    static std::map<unsigned, std::vector<RectPartition>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    std::vector<RectKey> types;
    for (unsigned l = 1; l <= n; ++l) {
        for (unsigned h = 1; l * h <= n; ++h) types.emplace_back(l, h);
    }
    std::vector<RectPartition> out;
    std::map<RectKey, unsigned> blocks;
    rect_rec(n, types, 0, n, blocks, out);
    std::sort(out.begin(), out.end(),
              [](const RectPartition& a, const RectPartition& b) { return block_list(a) < block_list(b); });

    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(out)).first->second;
}

Partition glue(const RectPartition& rp) {
    std::vector<unsigned> mult(rp.n, 0);
    for (const auto& [key, k] : rp.blocks) mult[key.first - 1] += key.second * k;
    return Partition(rp.n, std::move(mult));
}

std::vector<RectPartition> fiber(const Partition& m) {
    std::vector<RectPartition> out;
    for (auto& rp : enumerate_rect_partitions(m.n)) {
        if (glue(rp) == m) out.push_back(std::move(rp));
    }
    return out;
}

}  // namespace charvar
