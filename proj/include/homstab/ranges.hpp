#pragma once

// Stability range arithmetic.  Every bound is of the form "isomorphism for
// i <= (linear expression)/k" with the division taken as a floor toward
// minus infinity, shared with the connectivity checks in chains.hpp via
// floor_div.  Values below -1 are reported as -1; an answer of -1 means the
// range is empty.

#include <homstab/rat.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace homstab {

// Family selectors, one per conclusion shape.  The CLI spells them
// "A-constant", "A-abelian", "B-twisted", "B-split", "C-config",
// "D-oriented" and "F-manifold".
enum class RangeFamily {
    general_constant,  // constant coefficients, resolution slope 1/k
    general_abelian,   // abelian coefficients, slope 1/k with k >= 3
    general_twisted,   // coefficient system of degree r at N
    general_split,     // coefficient system of split degree r at N
    configurations,    // unordered configuration spaces, slope fixed by coeffs
    oriented,          // oriented configuration spaces
    manifolds          // genus stabilization for sphere-product summands
};

enum class CoeffKind { constant, abelian, twisted, split };
enum class GenusCase { equal_factors, unequal_factors };

struct RangeQuery {
    RangeFamily family = RangeFamily::general_constant;
    int n = 0;  // point count, or the genus for the manifolds family
    int k = 2;
    int r = 0;  // degree of the coefficient system
    int N = 0;  // onset of the degree; twisted bounds need n > N
    int u = 1;  // unitary stable rank input, equal-factors case
    int m = 0;  // generator count, unequal-factors case; also the
                // connectivity offset for the improved surjectivity bound
    CoeffKind coeffs = CoeffKind::constant;          // configurations only
    GenusCase gcase = GenusCase::equal_factors;      // manifolds only
    bool improved_iso = false;  // stronger resolution connectivity, k = 2
    bool improved_epi = false;  // connectivity offset m >= 3
};

struct RangeAnswer {
    int iso_max_i = -1;
    int epi_max_i = -1;  // -1 encodes an empty range
    std::string note;
};

inline const char* selector_name(RangeFamily f) {
    switch (f) {
        case RangeFamily::general_constant: return "A-constant";
        case RangeFamily::general_abelian: return "A-abelian";
        case RangeFamily::general_twisted: return "B-twisted";
        case RangeFamily::general_split: return "B-split";
        case RangeFamily::configurations: return "C-config";
        case RangeFamily::oriented: return "D-oriented";
        default: return "F-manifold";
    }
}

inline const char* coeff_name(CoeffKind c) {
    switch (c) {
        case CoeffKind::constant: return "constant";
        case CoeffKind::abelian: return "abelian";
        case CoeffKind::twisted: return "twisted";
        default: return "split";
    }
}

// Upper bound for the unitary stable rank of an integral group ring of a
// virtually polycyclic group in terms of its Hirsch length; finite groups
// have Hirsch length 0.  Input for the u parameter, never computed here.
inline int polycyclic_usr_bound(int hirsch_length) {
    if (hirsch_length < 0) throw std::invalid_argument("ranges: Hirsch length must be nonnegative");
    return hirsch_length + 3;
}

namespace detail {

inline int clamp_range(long long v) { return v < -1 ? -1 : (int)v; }

inline RangeAnswer range_pair(long long iso_num, long long epi_num, long long k, std::string note) {
    RangeAnswer a;
    a.iso_max_i = clamp_range(floor_div(iso_num, k));
    a.epi_max_i = clamp_range(floor_div(epi_num, k));
    a.note = std::move(note);
    return a;
}

}  // namespace detail

inline RangeAnswer evaluate_range(const RangeQuery& q) {
    using detail::range_pair;
    auto bad = [](const std::string& what) { throw std::invalid_argument("ranges: " + what); };
    if (q.n < 0) bad(q.family == RangeFamily::manifolds ? "genus must be nonnegative"
                                                        : "n must be nonnegative");
    bool twisted_like = q.family == RangeFamily::general_twisted ||
                        q.family == RangeFamily::general_split ||
                        (q.family == RangeFamily::configurations &&
                         (q.coeffs == CoeffKind::twisted || q.coeffs == CoeffKind::split));
    if (twisted_like || q.family == RangeFamily::manifolds) {
        if (q.r < 0) bad("degree must be nonnegative");
        if (q.N < 0) bad("onset must be nonnegative");
    }
    if (q.improved_iso && q.improved_epi) bad("choose at most one improvement");
    if (q.improved_iso &&
        !((q.family == RangeFamily::general_constant && q.k == 2) ||
          (q.family == RangeFamily::configurations && q.coeffs == CoeffKind::constant)))
        bad("improved isomorphism bound applies to constant coefficients with k = 2");
    if (q.improved_epi) {
        if (q.family != RangeFamily::general_constant && q.family != RangeFamily::general_abelian)
            bad("improved surjectivity bound applies to constant or abelian coefficients");
        if (q.m < 3) bad("improved surjectivity bound needs connectivity offset m >= 3");
    }

    long long n = q.n, k = q.k, r = q.r, u = q.u, m = q.m;
    switch (q.family) {
        case RangeFamily::general_constant: {
            if (q.k < 2) bad("k must be at least 2");
            std::string note = "constant coefficients, k=" + std::to_string(q.k);
            if (q.improved_iso)
                return range_pair(n, n, 2, note + "; improved isomorphism bound, needs the resolution connective one step further");
            if (q.improved_epi)
                return range_pair(n - m + 1, n - m + k + 1, k,
                                  note + "; surjectivity shifted for connectivity offset m=" +
                                      std::to_string(q.m));
            return range_pair(n - 1, n - 2 + k, k, note);
        }
        case RangeFamily::general_abelian: {
            if (q.k < 3) bad("k must be at least 3 for abelian coefficients");
            std::string note = "abelian coefficients, k=" + std::to_string(q.k);
            if (q.improved_epi)
                return range_pair(n - m + 3 - k, n - m + 3, k,
                                  note + "; surjectivity shifted for connectivity offset m=" +
                                      std::to_string(q.m));
            return range_pair(n + 1 - k, n, k, note);
        }
        case RangeFamily::general_twisted: {
            if (q.k < 2) bad("k must be at least 2");
            if (q.n <= q.N) {
                RangeAnswer a;
                a.note = "empty range: twisted stability needs n > N";
                return a;
            }
            return range_pair(n - r * k - k, n - r * k, k,
                              "twisted coefficients of degree " + std::to_string(q.r) + " at " +
                                  std::to_string(q.N) + ", k=" + std::to_string(q.k));
        }
        case RangeFamily::general_split: {
            if (q.k < 2) bad("k must be at least 2");
            if (q.n <= q.N) {
                RangeAnswer a;
                a.note = "empty range: twisted stability needs n > N";
                return a;
            }
            return range_pair(n - r - k, n - r, k,
                              "split degree " + std::to_string(q.r) + " at " + std::to_string(q.N) +
                                  ", k=" + std::to_string(q.k));
        }
        case RangeFamily::configurations: {
            std::string note =
                std::string("configuration spaces, ") + coeff_name(q.coeffs) + " coefficients";
            switch (q.coeffs) {
                case CoeffKind::constant:
                    if (q.improved_iso)
                        return range_pair(n, n, 2, note + "; improved isomorphism bound");
                    return range_pair(n - 1, n, 2, note);
                case CoeffKind::abelian: return range_pair(n - 2, n, 3, note);
                case CoeffKind::twisted:
                    if (q.n <= q.N) {
                        RangeAnswer a;
                        a.note = "empty range: twisted stability needs n > N";
                        return a;
                    }
                    return range_pair(n - 2 * r - 2, n - 2 * r, 2,
                                      note + " of degree " + std::to_string(q.r) + " at " +
                                          std::to_string(q.N));
                default:
                    if (q.n <= q.N) {
                        RangeAnswer a;
                        a.note = "empty range: twisted stability needs n > N";
                        return a;
                    }
                    return range_pair(n - r - 2, n - r, 2,
                                      note + " of degree " + std::to_string(q.r) + " at " +
                                          std::to_string(q.N));
            }
        }
        case RangeFamily::oriented:
            return range_pair(n - 2, n, 3, "oriented configuration spaces, integral coefficients");
        default: {
            if (q.gcase == GenusCase::equal_factors) {
                if (q.u < 1) bad("u must be at least 1");
                return range_pair(n - 2 * r - u - 3, n - 2 * r - u - 1, 2,
                                  "genus stabilization, equal sphere factors, u=" +
                                      std::to_string(q.u) +
                                      " (u is 1 when simply connected, otherwise the unitary "
                                      "stable rank of the integral fundamental group ring)");
            }
            if (q.m < 0) bad("m must be nonnegative");
            return range_pair(n - 2 * r - m - 4, n - 2 * r - m - 2, 2,
                              "genus stabilization, unequal sphere factors, m=" +
                                  std::to_string(q.m));
        }
    }
}

struct RangeRow {
    RangeQuery query;
    bool ok = false;
    RangeAnswer answer;
    std::string error;
};

// Evaluates a grid row by row; invalid rows carry their error message
// instead of aborting the sweep.  Row order follows the grid.
inline std::vector<RangeRow> range_sweep(const std::vector<RangeQuery>& grid) {
    std::vector<RangeRow> rows;
    rows.reserve(grid.size());
    for (const RangeQuery& q : grid) {
        RangeRow row;
        row.query = q;
        try {
            row.answer = evaluate_range(q);
            row.ok = true;
        } catch (const std::invalid_argument& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<RangeQuery> grid_over_n(RangeQuery base, int lo, int hi) {
    std::vector<RangeQuery> grid;
    for (int n = lo; n <= hi; ++n) {
        base.n = n;
        grid.push_back(base);
    }
    return grid;
}

}  // namespace homstab
