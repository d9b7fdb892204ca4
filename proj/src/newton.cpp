#include "bsato/newton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "bsato/error.hpp"
#include "bsato/linalg.hpp"

namespace bsato {

namespace {

// Degree-ascending, earlier variables carrying the higher exponents first
// within a degree. Same canonical order the b-function tables use.
std::vector<Monomial> monomials_up_to(int nvars, int bound) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    for (int d = 0; d <= bound; ++d) {
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == nvars - 1) {
                e[i] = left;
                out.push_back(Monomial(e));
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[i] = k;
                rec(i + 1, left - k);
            }
        };
        rec(0, d);
    }
    return out;
}

bool gen_less(const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.e > b.e; // earlier variables first, as the table enumeration does
}

// <l, v + 1>
Rational dot_shift(const std::vector<Rational>& l, const Monomial& v) {
    Rational s;
    for (size_t i = 0; i < l.size(); ++i) s += l[i] * Rational(v.e[i] + 1);
    return s;
}

bool member_closed(const NewtonPolyhedron& np, const Monomial& v, const Rational& alpha) {
    for (const auto& f : np.facets)
        if (dot_shift(f.normal, v) < alpha * f.offset) return false;
    return true;
}

// Strict interior of alpha*P at v+1. Coordinate hyperplanes are never tight
// there (v + 1 >= 1), so only positive-offset facets need the strict test.
bool strict_interior(const NewtonPolyhedron& np, const Monomial& v, const Rational& alpha) {
    for (const auto& f : np.facets) {
        if (f.offset.is_zero()) continue;
        if (!(dot_shift(f.normal, v) > alpha * f.offset)) return false;
    }
    return true;
}

// Scales to a primitive integer vector; nullopt when entries mix signs or
// the vector is zero. Output is componentwise >= 0.
std::optional<std::vector<Rational>> primitive_nonneg(const std::vector<Rational>& v) {
    mpz_class den_lcm(1);
    for (const auto& c : v) {
        mpz_class d = c.den(), g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> z(v.size());
    mpz_class content(0);
    for (size_t i = 0; i < v.size(); ++i) {
        z[i] = v[i].num() * (den_lcm / v[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content == 0) return std::nullopt;
    bool pos = false, neg = false;
    for (const auto& c : z) {
        if (c > 0) pos = true;
        if (c < 0) neg = true;
    }
    if (pos && neg) return std::nullopt;
    std::vector<Rational> out(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        mpz_class q = z[i] / content;
        out[i] = Rational(neg ? mpz_class(-q) : q);
    }
    return out;
}

int rank_of(const Matrix& rows, int ncols) {
    if (rows.empty()) return 0;
    return ncols - (int)nullspace(rows).size();
}

std::vector<Monomial> ideal_slice(const NewtonPolyhedron& np, const Rational& alpha, int bound) {
    std::vector<Monomial> out;
    for (const auto& v : monomials_up_to(np.source.nvars, bound))
        if (strict_interior(np, v, alpha)) out.push_back(v);
    return out;
}

std::vector<Monomial> minimal_gens(const std::vector<Monomial>& slice) {
    std::vector<Monomial> out;
    for (const auto& m : slice) {
        bool redundant = false;
        for (const auto& g : slice)
            if (g != m && g.divides(m)) { redundant = true; break; }
        if (!redundant) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), gen_less);
    return out;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> nm(n);
    for (int i = 0; i < n; ++i) nm[i] = "x" + std::to_string(i + 1);
    return nm;
}

} // namespace

MonomialIdeal monomial_ideal(int nvars, std::vector<Monomial> gens) {
    check_usage(nvars >= 1, "a monomial ideal needs at least one variable");
    check_usage(!gens.empty(), "a monomial ideal needs at least one generator");
    for (const auto& g : gens) {
        check_usage(g.nvars() == nvars, "generator exponent length does not match the variable count");
        for (int c : g.e) check_usage(c >= 0, "generator exponents must be nonnegative");
    }
    std::sort(gens.begin(), gens.end(), gen_less);
    MonomialIdeal a;
    a.nvars = nvars;
    for (const auto& g : gens) {
        bool covered = false;
        for (const auto& kept : a.gens)
            if (kept.divides(g)) { covered = true; break; }
        if (!covered) a.gens.push_back(g);
    }
    return a;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
    const int n = a.nvars;
    const int m = (int)a.gens.size();
    check_usage(n <= 6, "Newton polyhedra are supported up to 6 variables (the facet search is exhaustive)");
    check_usage(m >= 1, "a monomial ideal needs at least one generator");
    for (const auto& g : a.gens)
        check_usage(!g.is_one(), "the unit ideal has no jumping numbers; give a proper nonzero ideal");

    // A facet's tight set spans an (n-1)-dim affine space using generator
    // points T and coordinate rays S, so some independent choice with
    // |T| + |S| = n and nullity 1 recovers its normal. Enumerate all such.
    std::set<std::pair<std::vector<Rational>, Rational>> seen;
    std::vector<Facet> facets;

    std::vector<int> pick;
    std::function<void(int, int)> choose_gens = [&](int start, int need) {
        if (need == 0) {
            for (int smask = 0; smask < (1 << n); ++smask) {
                if (__builtin_popcount((unsigned)smask) + (int)pick.size() != n) continue;
                Matrix rows;
                const Monomial& g0 = a.gens[pick[0]];
                for (size_t t = 1; t < pick.size(); ++t) {
                    std::vector<Rational> row(n);
                    for (int i = 0; i < n; ++i)
                        row[i] = Rational(a.gens[pick[t]].e[i] - g0.e[i]);
                    rows.push_back(std::move(row));
                }
                for (int j = 0; j < n; ++j) {
                    if (!(smask & (1 << j))) continue;
                    std::vector<Rational> row(n);
                    row[j] = Rational(1);
                    rows.push_back(std::move(row));
                }
                auto basis = rows.empty() ? Matrix{std::vector<Rational>{Rational(1)}} : nullspace(rows);
                if (basis.size() != 1) continue;
                auto norm = primitive_nonneg(basis[0]);
                if (!norm) continue;
                Rational c;
                for (int i = 0; i < n; ++i) c += (*norm)[i] * Rational(g0.e[i]);
                bool valid = true;
                for (const auto& g : a.gens) {
                    Rational s;
                    for (int i = 0; i < n; ++i) s += (*norm)[i] * Rational(g.e[i]);
                    if (s < c) { valid = false; break; }
                }
                if (!valid) continue;
                if (!seen.insert({*norm, c}).second) continue;
                // facet test: tight generators plus rays in the hyperplane
                // must span dimension n-1
                Matrix span;
                const Monomial* first_tight = nullptr;
                for (const auto& g : a.gens) {
                    Rational s;
                    for (int i = 0; i < n; ++i) s += (*norm)[i] * Rational(g.e[i]);
                    if (s != c) continue;
                    if (!first_tight) { first_tight = &g; continue; }
                    std::vector<Rational> row(n);
                    for (int i = 0; i < n; ++i) row[i] = Rational(g.e[i] - first_tight->e[i]);
                    span.push_back(std::move(row));
                }
                for (int j = 0; j < n; ++j) {
                    if (!(*norm)[j].is_zero()) continue;
                    std::vector<Rational> row(n);
                    row[j] = Rational(1);
                    span.push_back(std::move(row));
                }
                if (rank_of(span, n) != n - 1) continue;
                Facet f;
                f.normal = *norm;
                f.offset = c;
                f.coordinate = c.is_zero();
                facets.push_back(std::move(f));
            }
            return;
        }
        for (int i = start; i <= m - need; ++i) {
            pick.push_back(i);
            choose_gens(i + 1, need - 1);
            pick.pop_back();
        }
    };
    for (int k = 1; k <= std::min(n, m); ++k) choose_gens(0, k);

    std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) {
        if (x.coordinate != y.coordinate) return !x.coordinate;
        if (x.normal != y.normal) return x.normal < y.normal;
        return x.offset < y.offset;
    });

    NewtonPolyhedron np;
    np.source = a;
    np.facets = std::move(facets);

    bool has_proper = false;
    for (const auto& f : np.facets) {
        if (f.coordinate) continue;
        has_proper = true;
        bool tight = false;
        for (const auto& g : a.gens) {
            Rational s;
            for (int i = 0; i < n; ++i) s += f.normal[i] * Rational(g.e[i]);
            check_internal(s >= f.offset, "generator outside its own Newton polyhedron");
            if (s == f.offset) tight = true;
        }
        check_internal(tight, "non-coordinate facet with no tight generator");
    }
    check_internal(has_proper, "proper ideal lost all non-coordinate facets");
    return np;
}

std::vector<Monomial> multiplier_ideal_monomial(const MonomialIdeal& a, const Rational& alpha,
                                                int degree_bound) {
    check_usage(alpha > Rational(0), "the multiplier ideal is defined for alpha > 0");
    check_usage(degree_bound >= 0, "degree bound must be nonnegative");
    return ideal_slice(newton_polyhedron(a), alpha, degree_bound);
}

MultiplierTable jumping_numbers_monomial(const MonomialIdeal& a, const Rational& alpha_max,
                                         int degree_bound) {
    check_usage(alpha_max > Rational(0), "alpha_max must be positive");
    check_usage(degree_bound >= 0, "degree bound must be nonnegative");
    NewtonPolyhedron np = newton_polyhedron(a);

    std::set<Rational> candidates;
    auto monos = monomials_up_to(a.nvars, degree_bound);
    for (const auto& f : np.facets) {
        if (f.coordinate) continue;
        for (const auto& v : monos) {
            Rational cand = dot_shift(f.normal, v) / f.offset;
            if (cand > Rational(0) && cand <= alpha_max) candidates.insert(cand);
        }
    }

    MultiplierTable table;
    std::vector<Monomial> prev = monos; // alpha -> 0+ gives the whole ring
    for (const auto& alpha : candidates) {
        std::vector<Monomial> cur = ideal_slice(np, alpha, degree_bound);
        if (cur == prev) continue;
        for (const auto& v : cur)
            check_internal(std::find(prev.begin(), prev.end(), v) != prev.end(),
                           "multiplier ideals failed to decrease");
        table.rows.push_back({alpha, minimal_gens(cur)});
        prev = std::move(cur);
    }
    return table;
}

Rational lct_monomial(const MonomialIdeal& a) {
    NewtonPolyhedron np = newton_polyhedron(a);
    std::optional<Rational> best;
    Monomial origin = Monomial::one(a.nvars);
    for (const auto& f : np.facets) {
        if (f.coordinate) continue;
        Rational cand = dot_shift(f.normal, origin) / f.offset;
        if (!best || cand < *best) best = cand;
    }
    check_internal(best.has_value() && *best > Rational(0), "log canonical threshold not positive");
    return *best;
}

int inner_jumping_multiplicity(const MonomialIdeal& a, const Rational& alpha,
                               const std::vector<std::string>& names) {
    check_usage(alpha > Rational(0), "jumping numbers are positive");
    NewtonPolyhedron np = newton_polyhedron(a);
    const int n = a.nvars;
    std::vector<std::string> nm = names.empty() ? default_names(n) : names;
    check_usage((int)nm.size() == n, "variable-name list does not match the ambient dimension");

    // The jump at alpha consists of the monomials v with v+1 on the boundary
    // of alpha*P. It is origin-supported iff no facet with a zero coordinate
    // carries a tight lattice point: such a point rides the facet to infinity
    // along the zero directions.
    for (const auto& f : np.facets) {
        if (f.offset.is_zero()) continue;
        std::vector<int> bounded, free_dirs;
        for (int i = 0; i < n; ++i)
            (f.normal[i].is_zero() ? free_dirs : bounded).push_back(i);
        if (free_dirs.empty()) continue;
        Rational target = alpha * f.offset;
        if (!target.is_integer()) continue;

        std::vector<int> v(n, 0);
        bool found = false;
        std::function<void(size_t, Rational)> scan = [&](size_t bi, Rational left) {
            if (found) return;
            if (bi == bounded.size()) {
                if (!left.is_zero()) return;
                // facets living entirely on the bounded coordinates must
                // already hold; the rest can be pushed up the free directions
                for (const auto& g : np.facets) {
                    bool uses_free = false;
                    for (int j : free_dirs)
                        if (!g.normal[j].is_zero()) { uses_free = true; break; }
                    if (uses_free) continue;
                    if (dot_shift(g.normal, Monomial(v)) < alpha * g.offset) return;
                }
                found = true;
                return;
            }
            int k = bounded[bi];
            for (int ek = 0;; ++ek) {
                Rational used = f.normal[k] * Rational(ek + 1);
                if (used > left) break;
                v[k] = ek;
                scan(bi + 1, left - used);
                if (found) return; // keep the witness assignment in v
            }
            v[k] = 0;
        };
        scan(0, target);
        if (!found) continue;

        // raise the free coordinates until the witness clears every facet
        long lift = 0;
        for (const auto& g : np.facets) {
            Rational fixed, slope;
            for (int i = 0; i < n; ++i) fixed += g.normal[i] * Rational(v[i] + 1);
            for (int j : free_dirs) slope += g.normal[j];
            if (slope.is_zero()) continue;
            Rational deficit = alpha * g.offset - fixed;
            if (deficit > Rational(0)) {
                mpz_class steps = (deficit / slope).ceil();
                if (steps > lift) lift = steps.get_si();
            }
        }
        for (int j : free_dirs) v[j] += (int)lift;
        throw usage_error("the multiplier jump at alpha = " + alpha.str() +
                          " is not supported at the origin alone: " +
                          monomial_str(Monomial(v), nm) + " lies in the jump and stays in it along " +
                          nm[free_dirs.front()]);
    }

    // every boundary monomial is now tight on an all-positive facet
    std::set<Monomial> boundary;
    for (const auto& f : np.facets) {
        if (f.offset.is_zero()) continue;
        bool all_pos = true;
        for (const auto& c : f.normal)
            if (c.is_zero()) { all_pos = false; break; }
        if (!all_pos) continue;
        Rational target = alpha * f.offset;
        if (!target.is_integer()) continue;
        std::vector<int> v(n, 0);
        std::function<void(int, Rational)> scan = [&](int k, Rational left) {
            if (k == n) {
                if (!left.is_zero()) return;
                Monomial mono(v);
                if (member_closed(np, mono, alpha)) boundary.insert(mono);
                return;
            }
            for (int ek = 0;; ++ek) {
                Rational used = f.normal[k] * Rational(ek + 1);
                if (used > left) break;
                v[k] = ek;
                scan(k + 1, left - used);
            }
            v[k] = 0;
        };
        scan(0, target);
    }
    return (int)boundary.size();
}

} // namespace bsato
