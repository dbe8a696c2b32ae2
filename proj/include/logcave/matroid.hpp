#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "logcave/graph.hpp"
#include "logcave/poly.hpp"

namespace logcave {

struct GroundSetTooLarge : std::runtime_error {
    GroundSetTooLarge() : std::runtime_error("ground set exceeds the enumeration limit") {}
};

// Matroid on ground set {0..ground_size-1}, given by a rank oracle on
// subset bitmasks. Ranks are cached; the oracle must be pure.
class Matroid {
public:
    Matroid(int ground_size, std::function<int(uint32_t)> rank_oracle);

    int ground_size() const { return ground_size_; }
    int rank(uint32_t subset) const;
    int rank() const { return rank(full_mask()); }
    uint32_t full_mask() const { return ground_size_ == 32 ? ~0u : (1u << ground_size_) - 1; }

    bool is_loop(int e) const { return rank(1u << e) == 0; }
    bool has_loop() const;
    bool is_coloop(int e) const;
    uint32_t closure(uint32_t subset) const;

    Matroid deleted(int e) const;
    Matroid contracted(int e) const;

private:
    int ground_size_;
    std::function<int(uint32_t)> oracle_;
    mutable std::vector<int8_t> cache_;
};

struct FlatLattice {
    std::vector<uint32_t> flats;    // sorted by rank, flats[0] = closure(empty)
    std::vector<int> ranks;         // rank of each flat
    std::vector<Int> mobius;        // mu(0-hat, flat)
};

Matroid from_matrix(const std::vector<std::vector<Rat>>& rows);
Matroid cycle_matroid(const Graph& g);

// Flats by closure-BFS plus top-down Moebius values.
FlatLattice flat_lattice(const Matroid& m);

// Sum over flats of mu(0,x) q^{rank(M)-rank(x)}. Zero polynomial when the
// matroid has a loop. The enumeration cap defaults to 16 and can be raised
// through the LOGCAVE_MAX_GROUND environment variable.
IntPolynomial characteristic_polynomial(const Matroid& m);

// Whitney rank expansion over all 2^|E| subsets; independent oracle.
IntPolynomial whitney_oracle(const Matroid& m);

int characteristic_ground_limit();

}  // namespace logcave
