#include "logcave/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace logcave {

namespace {

// Phase-1 simplex feasibility test for p in conv(points), exact rationals.
// On infeasibility, when sep is non-null it receives (w, w0) with
// w.q + w0 <= 0 for all points q and w.p + w0 > 0 (Farkas certificate).
bool in_convex_hull(const LatticePoint& p, const std::vector<const LatticePoint*>& points,
                    std::vector<Rat>* sep) {
    const int d = static_cast<int>(p.size());
    const int rows = d + 1;
    const int m = static_cast<int>(points.size());
    // Constraints: sum lambda_i q_i = p, sum lambda_i = 1; columns are the
    // lambdas followed by one artificial per row, then the RHS.
    const int cols = m + rows + 1;
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols, 0));
    std::vector<int> row_sign(rows, 1);
    for (int i = 0; i < rows; ++i) {
        Rat b = i < d ? Rat(p[i]) : Rat(1);
        if (b < 0) row_sign[i] = -1;
        for (int j = 0; j < m; ++j)
            t[i][j] = row_sign[i] * (i < d ? Rat((*points[j])[i]) : Rat(1));
        t[i][m + i] = 1;
        t[i][cols - 1] = row_sign[i] * b;
    }
    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i) basis[i] = m + i;
    // Objective: minimize the sum of artificials; z holds negated reduced costs.
    std::vector<Rat> z(cols, 0);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) z[j] += t[i][j];
    }
    for (int i = 0; i < rows; ++i) z[m + i] = 0;
    for (;;) {
        int enter = -1;  // Bland's rule: lowest eligible index
        for (int j = 0; j < m; ++j) {
            if (z[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols - 1] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) break;  // unbounded cannot happen in phase 1
        Rat pivot = t[leave][enter];
        for (int j = 0; j < cols; ++j) t[leave][j] /= pivot;
        for (int i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat fz = z[enter];
        if (fz != 0) {
            for (int j = 0; j < cols; ++j) z[j] -= fz * t[leave][j];
        }
        basis[leave] = enter;
    }
    Rat objective = 0;
    for (int i = 0; i < rows; ++i) {
        if (basis[i] >= m) objective += t[i][cols - 1];
    }
    if (objective == 0) return true;
    if (sep) {
        // y = c_B B^{-1}; B^{-1} sits under the artificial columns.
        sep->assign(rows, Rat(0));
        for (int i = 0; i < rows; ++i) {
            if (basis[i] < m) continue;
            for (int j = 0; j < rows; ++j) (*sep)[j] += t[i][m + j] * row_sign[j];
        }
    }
    return false;
}

// Clarkson-style output-sensitive extreme point filter.
std::vector<LatticePoint> extreme_points(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 1) return points;
    const int d = static_cast<int>(points[0].size());
    std::vector<bool> is_vertex(points.size(), false), discarded(points.size(), false);
    std::vector<const LatticePoint*> hull;
    for (size_t i = 0; i < points.size(); ++i) {
        if (discarded[i] || is_vertex[i]) continue;
        std::vector<Rat> sep;
        if (in_convex_hull(points[i], hull, &sep)) {
            discarded[i] = true;
            continue;
        }
        // The separating functional's maximizer over the whole set, with a
        // lex tie-break, is an extreme point of the full hull.
        size_t best = i;
        Rat best_val = 0;
        for (int j = 0; j < d; ++j) best_val += sep[j] * points[i][j];
        for (size_t k = 0; k < points.size(); ++k) {
            if (discarded[k] || k == best) continue;
            Rat val = 0;
            for (int j = 0; j < d; ++j) val += sep[j] * points[k][j];
            if (val > best_val || (val == best_val && points[k] > points[best])) {
                best_val = val;
                best = k;
            }
        }
        is_vertex[best] = true;
        hull.push_back(&points[best]);
        if (best != i) --i;  // retest the same point against the grown hull
    }
    std::vector<LatticePoint> out;
    for (size_t i = 0; i < points.size(); ++i) {
        if (is_vertex[i]) out.push_back(points[i]);
    }
    return out;
}

Int det(std::vector<std::vector<Int>> m) {
    // Fraction-free Bareiss elimination.
    const int n = static_cast<int>(m.size());
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Normal of the hyperplane through d affinely independent points via
// cofactor expansion; zero vector when the points are dependent.
std::vector<Int> hyperplane_normal(const std::vector<const LatticePoint*>& pts, int d) {
    std::vector<Int> w(d);
    for (int j = 0; j < d; ++j) {
        std::vector<std::vector<Int>> minor(d - 1, std::vector<Int>(d - 1));
        for (int r = 1; r < d; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = (*pts[r])[c] - (*pts[0])[c];
            }
        }
        Int dd = d >= 2 ? det(minor) : Int(1);
        w[j] = (j % 2 == 0 ? dd : -dd);
    }
    return w;
}

Rat volume_rec(const std::vector<LatticePoint>& points, int d);

Rat simplex_volume(const std::vector<LatticePoint>& pts, int d) {
    std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = pts[i + 1][j] - pts[0][j];
    }
    Int v = det(m);
    Int fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    Rat r = Rat(abs(v)) / Rat(fact);
    r.canonicalize();
    return r;
}

Rat volume_rec(const std::vector<LatticePoint>& points, int d) {
    if (d == 0) return points.empty() ? Rat(0) : Rat(1);
    if (static_cast<int>(points.size()) < d + 1) return 0;
    if (d == 1) {
        Int lo = points[0][0], hi = points[0][0];
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return Rat(hi - lo);
    }
    if (static_cast<int>(points.size()) == d + 1) return simplex_volume(points, d);
    // Facet enumeration: every supporting hyperplane is spanned by some d
    // affinely independent vertices; dedupe by the normalized (w, c) pair.
    struct Facet {
        std::vector<Int> key;
        bool decided = false, is_facet = false;
        std::vector<size_t> on;
        std::vector<Int> w;
        Int c;
    };
    std::map<std::vector<Int>, Facet> facets;
    const size_t m = points.size();
    std::vector<size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<const LatticePoint*> sub(d);
    for (;;) {
        for (int i = 0; i < d; ++i) sub[i] = &points[idx[i]];
        std::vector<Int> w = hyperplane_normal(sub, d);
        bool nonzero = std::any_of(w.begin(), w.end(), [](const Int& x) { return x != 0; });
        if (nonzero) {
            Int c = 0;
            for (int j = 0; j < d; ++j) c += w[j] * (*sub[0])[j];
            std::vector<Int> key = w;
            key.push_back(c);
            Int g = 0;
            for (const Int& x : key) g = gcd(g, x);
            int sgn_first = 0;
            for (const Int& x : key) {
                if (x != 0) {
                    sgn_first = sgn(x);
                    break;
                }
            }
            for (Int& x : key) x = x * sgn_first / g;
            auto [it, fresh] = facets.try_emplace(key);
            if (fresh) {
                Facet& f = it->second;
                f.w.assign(key.begin(), key.end() - 1);
                f.c = key.back();
                int above = 0, below = 0;
                for (size_t k = 0; k < m; ++k) {
                    Int s = -f.c;
                    for (int j = 0; j < d; ++j) s += f.w[j] * points[k][j];
                    if (s > 0)
                        ++above;
                    else if (s < 0)
                        ++below;
                    else
                        f.on.push_back(k);
                }
                f.is_facet = above == 0 || below == 0;
            }
        }
        // next d-combination of m indices
        int i = d - 1;
        while (i >= 0 && idx[i] == m - d + static_cast<size_t>(i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    // Pyramid decomposition from a fixed apex; facets through the apex
    // contribute zero height and drop out on their own.
    const LatticePoint& apex = points[0];
    Rat total = 0;
    for (auto& [key, f] : facets) {
        if (!f.is_facet) continue;
        Int h = -f.c;
        for (int j = 0; j < d; ++j) h += f.w[j] * apex[j];
        if (h == 0) continue;
        // Project out the coordinate with the largest |normal| component;
        // the height/area product stays rational: vol(pyramid) =
        // |w.a - c| * vol_{d-1}(proj_j F) / (d * |w_j|).
        int jbest = 0;
        for (int j = 1; j < d; ++j) {
            if (abs(f.w[j]) > abs(f.w[jbest])) jbest = j;
        }
        std::vector<LatticePoint> proj;
        proj.reserve(f.on.size());
        for (size_t k : f.on) {
            LatticePoint q;
            q.reserve(d - 1);
            for (int j = 0; j < d; ++j) {
                if (j != jbest) q.push_back(points[k][j]);
            }
            proj.push_back(std::move(q));
        }
        Rat contrib = Rat(abs(h)) * volume_rec(proj, d - 1) / Rat(Int(d) * abs(f.w[jbest]));
        contrib.canonicalize();
        total += contrib;
    }
    total.canonicalize();
    return total;
}

}  // namespace

LatticePolytope::LatticePolytope(int dim_ambient, std::vector<LatticePoint> points)
    : dim_(dim_ambient) {
    if (dim_ambient < 0) throw std::invalid_argument("negative ambient dimension");
    if (points.empty()) throw std::invalid_argument("empty polytope");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim_ambient)
            throw std::invalid_argument("point dimension mismatch");
    }
    vertices_ = extreme_points(std::move(points));
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim_ambient() != b.dim_ambient()) throw std::invalid_argument("dimension mismatch");
    const int d = a.dim_ambient();
    std::vector<LatticePoint> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& p : a.vertices()) {
        for (const auto& q : b.vertices()) {
            LatticePoint s(d);
            for (int j = 0; j < d; ++j) s[j] = p[j] + q[j];
            sums.push_back(std::move(s));
        }
    }
    return LatticePolytope(d, std::move(sums));
}

LatticePolytope dilate(const LatticePolytope& p, long k) {
    if (k < 0) throw std::invalid_argument("negative dilation");
    std::vector<LatticePoint> pts;
    for (const auto& v : p.vertices()) {
        LatticePoint q(v);
        for (auto& x : q) x *= k;
        pts.push_back(std::move(q));
    }
    return LatticePolytope(p.dim_ambient(), std::move(pts));
}

Rat volume(const LatticePolytope& p) { return volume_rec(p.vertices(), p.dim_ambient()); }

Rat mixed_volume(const std::vector<LatticePolytope>& polytopes) {
    const int n = static_cast<int>(polytopes.size());
    if (n == 0) throw std::invalid_argument("at least one polytope required");
    for (const auto& p : polytopes) {
        if (p.dim_ambient() != n)
            throw std::invalid_argument("need exactly n polytopes in R^n");
    }
    // MV_n = sum over nonempty S of (-1)^{n-|S|} V_n(sum_{i in S}); subset
    // sums cached so shared sub-sums are computed once.
    std::map<uint32_t, Rat> vols;
    Rat total = 0;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i) {
            if (s >> i & 1u) members.push_back(i);
        }
        LatticePolytope acc = polytopes[members[0]];
        for (size_t i = 1; i < members.size(); ++i)
            acc = minkowski_sum(acc, polytopes[members[i]]);
        Rat v = volume(acc);
        int parity = (n - static_cast<int>(members.size())) % 2;
        total += parity == 0 ? v : -v;
    }
    total.canonicalize();
    return total;
}

LatticePolytope standard_simplex(int n) {
    std::vector<LatticePoint> pts{LatticePoint(n, 0)};
    for (int i = 0; i < n; ++i) {
        LatticePoint e(n, 0);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return LatticePolytope(n, std::move(pts));
}

LatticePolytope shephard_polytope(const std::vector<long>& lambda) {
    const int n = static_cast<int>(lambda.size());
    if (n == 0) throw std::invalid_argument("empty lambda");
    for (int i = 0; i < n; ++i) {
        if (lambda[i] < 1) throw std::invalid_argument("lambda entries must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("lambda must be descending");
    }
    std::vector<LatticePoint> pts{LatticePoint(n, 0)};
    for (int i = 0; i < n; ++i) {
        LatticePoint e(n, 0);
        e[i] = lambda[i];
        pts.push_back(std::move(e));
    }
    return LatticePolytope(n, std::move(pts));
}

LatticePolytope newton_polytope_delta_h(const std::vector<PolyTerm>& h) {
    if (h.empty()) throw ZeroPolynomial();
    const int nv = static_cast<int>(h[0].exponents.size());
    int deg = -1;
    for (const auto& term : h) {
        if (term.coeff == 0) throw ZeroPolynomial();
        if (static_cast<int>(term.exponents.size()) != nv)
            throw std::invalid_argument("exponent arity mismatch");
        int d = std::accumulate(term.exponents.begin(), term.exponents.end(), 0);
        if (deg < 0) deg = d;
        if (d != deg) throw NotHomogeneous();
    }
    if (deg < 1) throw ZeroPolynomial();
    std::vector<LatticePoint> pts;
    for (const auto& term : h) {
        for (int j = 0; j < nv; ++j) {
            if (term.exponents[j] == 0) continue;
            LatticePoint p;
            p.reserve(nv - 1);
            for (int c = 1; c < nv; ++c) p.push_back(Int(term.exponents[c] - (c == j ? 1 : 0)));
            pts.push_back(std::move(p));
        }
    }
    return LatticePolytope(nv - 1, std::move(pts));
}

}  // namespace logcave
