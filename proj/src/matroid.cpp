#include "logcave/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

namespace logcave {

namespace {

constexpr int kHardCap = 20;  // bitset representation bound

int rational_rank(const std::vector<std::vector<Rat>>& cols) {
    if (cols.empty()) return 0;
    std::vector<std::vector<Rat>> m = cols;  // eliminate column vectors row-wise
    const size_t height = m[0].size();
    size_t rank = 0;
    for (size_t r = 0; r < height && rank < m.size(); ++r) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][r] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][r] == 0) continue;
            Rat f = m[i][r] / m[rank][r];
            for (size_t j = r; j < height; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

void spot_check_axioms(const Matroid& m) {
    if (m.rank(0) != 0) throw std::invalid_argument("rank oracle violates rank(empty)=0");
    const int n = m.ground_size();
    if (n == 0) return;
    std::mt19937 rng(0x9e3779b9u);
    for (int trial = 0; trial < 64; ++trial) {
        uint32_t s = rng() & m.full_mask();
        int e = static_cast<int>(rng() % n);
        uint32_t se = s | (1u << e);
        int d = m.rank(se) - m.rank(s);
        if (d < 0 || d > 1) throw std::invalid_argument("rank oracle violates unit increments");
        uint32_t t = rng() & m.full_mask();
        if (m.rank(s | t) + m.rank(s & t) > m.rank(s) + m.rank(t))
            throw std::invalid_argument("rank oracle violates submodularity");
    }
}

}  // namespace

Matroid::Matroid(int ground_size, std::function<int(uint32_t)> rank_oracle)
    : ground_size_(ground_size), oracle_(std::move(rank_oracle)) {
    if (ground_size < 0 || ground_size > kHardCap)
        throw std::invalid_argument("ground size out of range");
    cache_.assign(size_t(1) << ground_size_, -1);
    spot_check_axioms(*this);
}

int Matroid::rank(uint32_t subset) const {
    subset &= full_mask();
    int8_t& slot = cache_[subset];
    if (slot < 0) slot = static_cast<int8_t>(oracle_(subset));
    return slot;
}

bool Matroid::has_loop() const {
    for (int e = 0; e < ground_size_; ++e) {
        if (is_loop(e)) return true;
    }
    return false;
}

bool Matroid::is_coloop(int e) const { return rank(full_mask() & ~(1u << e)) == rank() - 1; }

uint32_t Matroid::closure(uint32_t subset) const {
    uint32_t cl = subset;
    int r = rank(subset);
    for (int e = 0; e < ground_size_; ++e) {
        if (!(cl >> e & 1u) && rank(subset | (1u << e)) == r) cl |= 1u << e;
    }
    return cl;
}

Matroid Matroid::deleted(int e) const {
    if (e < 0 || e >= ground_size_) throw std::invalid_argument("element out of range");
    Matroid self = *this;
    auto expand = [e](uint32_t s) {
        uint32_t low = s & ((1u << e) - 1);
        return low | ((s & ~((1u << e) - 1)) << 1);
    };
    return Matroid(ground_size_ - 1, [self, expand](uint32_t s) { return self.rank(expand(s)); });
}

Matroid Matroid::contracted(int e) const {
    if (e < 0 || e >= ground_size_) throw std::invalid_argument("element out of range");
    Matroid self = *this;
    int re = rank(1u << e);
    auto expand = [e](uint32_t s) {
        uint32_t low = s & ((1u << e) - 1);
        return low | ((s & ~((1u << e) - 1)) << 1);
    };
    return Matroid(ground_size_ - 1, [self, expand, e, re](uint32_t s) {
        return self.rank(expand(s) | (1u << e)) - re;
    });
}

Matroid from_matrix(const std::vector<std::vector<Rat>>& rows) {
    size_t width = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != width) throw std::invalid_argument("ragged matrix");
    }
    // Columns are the ground set.
    auto cols = std::make_shared<std::vector<std::vector<Rat>>>();
    for (size_t c = 0; c < width; ++c) {
        std::vector<Rat> col(rows.size());
        for (size_t r = 0; r < rows.size(); ++r) col[r] = rows[r][c];
        cols->push_back(std::move(col));
    }
    return Matroid(static_cast<int>(width), [cols](uint32_t s) {
        std::vector<std::vector<Rat>> sub;
        for (size_t c = 0; c < cols->size(); ++c) {
            if (s >> c & 1u) sub.push_back((*cols)[c]);
        }
        return rational_rank(sub);
    });
}

Matroid cycle_matroid(const Graph& g) {
    auto edges = std::make_shared<std::vector<std::pair<int, int>>>(g.edges);
    int vc = g.vertex_count;
    return Matroid(static_cast<int>(g.edges.size()), [edges, vc](uint32_t s) {
        std::vector<int> parent(vc);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = vc;
        for (size_t i = 0; i < edges->size(); ++i) {
            if (!(s >> i & 1u)) continue;
            int a = find((*edges)[i].first), b = find((*edges)[i].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        return vc - comps;
    });
}

FlatLattice flat_lattice(const Matroid& m) {
    std::map<uint32_t, int> seen;
    std::vector<uint32_t> queue{m.closure(0)};
    seen.emplace(queue[0], 0);
    for (size_t head = 0; head < queue.size(); ++head) {
        uint32_t f = queue[head];
        for (int e = 0; e < m.ground_size(); ++e) {
            if (f >> e & 1u) continue;
            uint32_t cl = m.closure(f | (1u << e));
            if (seen.emplace(cl, 0).second) queue.push_back(cl);
        }
    }
    FlatLattice lat;
    lat.flats.assign(queue.begin(), queue.end());
    std::sort(lat.flats.begin(), lat.flats.end(), [&](uint32_t a, uint32_t b) {
        int ra = m.rank(a), rb = m.rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    lat.ranks.reserve(lat.flats.size());
    for (uint32_t f : lat.flats) lat.ranks.push_back(m.rank(f));
    lat.mobius.assign(lat.flats.size(), Int(0));
    for (size_t i = 0; i < lat.flats.size(); ++i) {
        if (i == 0) {
            lat.mobius[0] = 1;
            continue;
        }
        Int acc = 0;
        for (size_t j = 0; j < i; ++j) {
            if ((lat.flats[j] & lat.flats[i]) == lat.flats[j]) acc += lat.mobius[j];
        }
        lat.mobius[i] = -acc;
    }
    return lat;
}

int characteristic_ground_limit() {
    if (const char* env = std::getenv("LOGCAVE_MAX_GROUND")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, kHardCap);
    }
    return 16;
}

IntPolynomial characteristic_polynomial(const Matroid& m) {
    if (m.ground_size() > characteristic_ground_limit()) throw GroundSetTooLarge();
    if (m.has_loop()) return IntPolynomial();
    FlatLattice lat = flat_lattice(m);
    int r = m.rank();
    std::vector<Int> coeffs(r + 1, Int(0));
    for (size_t i = 0; i < lat.flats.size(); ++i) coeffs[r - lat.ranks[i]] += lat.mobius[i];
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial whitney_oracle(const Matroid& m) {
    if (m.ground_size() > 14) throw GroundSetTooLarge();
    int r = m.rank();
    std::vector<Int> coeffs(r + 1, Int(0));
    uint32_t full = m.full_mask();
    for (uint32_t s = 0;; ++s) {
        int sign = std::popcount(s) % 2 == 0 ? 1 : -1;
        coeffs[r - m.rank(s)] += sign;
        if (s == full) break;
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace logcave
