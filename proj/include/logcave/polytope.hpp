#pragma once

#include <stdexcept>
#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

struct NotHomogeneous : std::runtime_error {
    NotHomogeneous() : std::runtime_error("polynomial is not homogeneous") {}
};

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("zero or constant polynomial has no Newton data") {}
};

using LatticePoint = std::vector<Int>;

// Convex lattice polytope in R^n, stored as its extreme points only
// (lex-sorted). Construction performs exact hull reduction.
class LatticePolytope {
public:
    LatticePolytope(int dim_ambient, std::vector<LatticePoint> points);

    int dim_ambient() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }

    bool operator==(const LatticePolytope& o) const {
        return dim_ == o.dim_ && vertices_ == o.vertices_;
    }

private:
    int dim_;
    std::vector<LatticePoint> vertices_;
};

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope dilate(const LatticePolytope& p, long k);

// Exact Euclidean n-volume; 0 for lower-dimensional polytopes.
Rat volume(const LatticePolytope& p);

// n!-normalized mixed volume of exactly n polytopes in R^n, by
// inclusion-exclusion over Minkowski subset sums; MV(simplex,...,simplex)=1.
Rat mixed_volume(const std::vector<LatticePolytope>& polytopes);

// Standard simplex conv{0, e_1..e_n}.
LatticePolytope standard_simplex(int n);

// conv{0, lambda_1 e_1, ..., lambda_n e_n}; lambda descending positive.
LatticePolytope shephard_polytope(const std::vector<long>& lambda);

struct PolyTerm {
    Rat coeff;
    std::vector<int> exponents;  // over z_0..z_n
};

// Hull in R^n of the dehomogenized exponents of all partial derivatives of
// the homogeneous polynomial h(z_0..z_n); coordinate 0 is dropped.
LatticePolytope newton_polytope_delta_h(const std::vector<PolyTerm>& h);

}  // namespace logcave
