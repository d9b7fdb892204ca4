#include "bsato/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bsato/error.hpp"

namespace bsato {

Polynomial poly_normal_form(const Polynomial& p, const std::vector<Polynomial>& gens,
                            MonomialOrder ord) {
    Polynomial rem(p.ring());
    Polynomial work = p;
    while (!work.is_zero()) {
        Monomial lm = work.leading_monomial(ord);
        bool reduced = false;
        for (const Polynomial& g : gens) {
            if (g.is_zero()) continue;
            Monomial glm = g.leading_monomial(ord);
            if (!glm.divides(lm)) continue;
            Rational c = work.leading_coeff(ord) / g.leading_coeff(ord);
            Polynomial shift = Polynomial::monomial(work.ring(), lm / glm, c);
            work = work - shift * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            Rational c = work.leading_coeff(ord);
            rem.add_term(lm, c);
            work.add_term(lm, -c);
        }
    }
    return rem;
}

namespace {

Polynomial s_poly(const Polynomial& f, const Polynomial& g, MonomialOrder ord) {
    Monomial lf = f.leading_monomial(ord);
    Monomial lg = g.leading_monomial(ord);
    Monomial l = Monomial::lcm(lf, lg);
    Polynomial mf = Polynomial::monomial(f.ring(), l / lf, f.leading_coeff(ord).inv());
    Polynomial mg = Polynomial::monomial(g.ring(), l / lg, g.leading_coeff(ord).inv());
    return mf * f - mg * g;
}

struct Pair {
    int i, j;
    int lcm_deg;
    long stamp;
};

struct PairCmp {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg > b.lcm_deg; // min-heap by degree
        return a.stamp > b.stamp;
    }
};

} // namespace

std::vector<Polynomial> poly_groebner(std::vector<Polynomial> gens, MonomialOrder ord) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return {};
    PolyRingPtr ring = basis[0].ring();

    std::vector<Pair> queue;
    long stamp = 0;
    auto push_pair = [&](int i, int j) {
        Monomial l = Monomial::lcm(basis[i].leading_monomial(ord), basis[j].leading_monomial(ord));
        queue.push_back({i, j, l.deg(), stamp++});
        std::push_heap(queue.begin(), queue.end(), PairCmp{});
    };
    for (int i = 0; i < (int)basis.size(); ++i)
        for (int j = i + 1; j < (int)basis.size(); ++j) push_pair(i, j);

    auto chain_drops = [&](int i, int j) {
        // Buchberger chain criterion: some k with lm(k) | lcm(i,j) and both
        // (i,k), (j,k) lcms strictly smaller than lcm(i,j).
        Monomial lij = Monomial::lcm(basis[i].leading_monomial(ord), basis[j].leading_monomial(ord));
        for (int k = 0; k < (int)basis.size(); ++k) {
            if (k == i || k == j) continue;
            Monomial lk = basis[k].leading_monomial(ord);
            if (!lk.divides(lij)) continue;
            Monomial lik = Monomial::lcm(basis[i].leading_monomial(ord), lk);
            Monomial ljk = Monomial::lcm(basis[j].leading_monomial(ord), lk);
            if (lik != lij && ljk != lij) return true;
        }
        return false;
    };

    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), PairCmp{});
        Pair pr = queue.back();
        queue.pop_back();
        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        if (f.leading_monomial(ord).coprime(g.leading_monomial(ord))) continue;
        if (chain_drops(pr.i, pr.j)) continue;
        Polynomial r = poly_normal_form(s_poly(f, g, ord), basis, ord);
        if (r.is_zero()) continue;
        int idx = (int)basis.size();
        basis.push_back(r);
        for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    for (int i = 0; i < (int)basis.size(); ++i) {
        Monomial li = basis[i].leading_monomial(ord);
        bool keep = true;
        for (int j = 0; j < (int)basis.size(); ++j) {
            if (i == j) continue;
            Monomial lj = basis[j].leading_monomial(ord);
            if (lj.divides(li) && (lj != li || j < i)) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // Reduce tails against the rest, make monic.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = poly_normal_form(minimal[i], others, ord);
        check_internal(!r.is_zero(), "reduced basis element vanished");
        reduced.push_back(r * r.leading_coeff(ord).inv());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return cmp_monomial(a.leading_monomial(ord), b.leading_monomial(ord), ord) < 0;
    });
    return reduced;
}

bool poly_ideal_member(const Polynomial& p, const std::vector<Polynomial>& gb,
                       MonomialOrder ord) {
    return poly_normal_form(p, gb, ord).is_zero();
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Polynomial>& gb,
                                                        MonomialOrder ord) {
    check_usage(!gb.empty(), "standard_monomials: empty basis");
    int n = (int)gb[0].ring()->nvars();
    std::vector<Monomial> leads;
    for (const auto& g : gb) leads.push_back(g.leading_monomial(ord));

    // Zero-dimensionality: a pure power of each variable among the leads.
    std::vector<int> cap(n, -1);
    for (const Monomial& l : leads) {
        int var = -1, pure = 1;
        for (int i = 0; i < n; ++i) {
            if (l.e[i] == 0) continue;
            if (var >= 0) {
                pure = 0;
                break;
            }
            var = i;
        }
        if (pure && var >= 0 && (cap[var] < 0 || l.e[var] < cap[var])) cap[var] = l.e[var];
        if (pure && var < 0) return std::vector<Monomial>{}; // 1 in ideal
    }
    for (int i = 0; i < n; ++i)
        if (cap[i] < 0) return std::nullopt;

    std::vector<Monomial> out;
    Monomial m = Monomial::one(n);
    // Enumerate the box below the caps, keeping monomials no lead divides.
    while (true) {
        bool in_ideal = false;
        for (const Monomial& l : leads)
            if (l.divides(m)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) out.push_back(m);
        int i = 0;
        while (i < n) {
            ++m.e[i];
            if (m.e[i] < cap[i]) break;
            m.e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return cmp_monomial(a, b, ord) < 0; });
    return out;
}

} // namespace bsato
