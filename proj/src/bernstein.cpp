#include "bsato/bernstein.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <sstream>

#include "bsato/error.hpp"
#include "bsato/spectrum.hpp"

namespace bsato {

namespace {

// ---------- ring plumbing ----------

struct DsRing {
    WeylRingPtr weyl; // pairs (x_i, dx_i), parameter s
    PolyRingPtr poly; // x variables then s
};

DsRing make_ds(const PolyRingPtr& xring) {
    std::vector<std::string> xs = xring->vars(), ds;
    for (const auto& v : xs) ds.push_back("d" + v);
    std::vector<std::string> pv = xs;
    pv.push_back("s");
    return {WeylRing::make(xs, ds, {"s"}), std::make_shared<PolyRing>(pv)};
}

// Re-embed into a ring whose variable list starts with p's variables.
Polynomial pad_poly(const Polynomial& p, const PolyRingPtr& big) {
    check_internal(p.ring() != nullptr && big->nvars() >= p.ring()->nvars(),
                   "pad into a smaller ring");
    for (int i = 0; i < p.ring()->nvars(); ++i)
        check_internal(big->vars()[i] == p.ring()->vars()[i], "ring extension mismatch");
    Polynomial out(big);
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = Monomial::one(big->nvars());
        std::copy(m.e.begin(), m.e.end(), mm.e.begin());
        out.add_term(mm, c);
    }
    return out;
}

// A_{n+1} over f's variables plus (t, dt), with optional central u, v.
struct TRing {
    WeylRingPtr ring;
    int n; // pairs before (t, dt)
    int t_slot, dt_slot;
};

TRing make_tring(const PolyRingPtr& xring, bool with_uv) {
    std::vector<std::string> xs = xring->vars(), ds;
    for (const auto& v : xs) ds.push_back("d" + v);
    int n = (int)xs.size();
    xs.push_back("@t");
    ds.push_back("@dt");
    std::vector<std::string> params;
    if (with_uv) params = {"@u", "@v"};
    auto r = WeylRing::make(xs, ds, params);
    return {r, n, r->x_slot(n), r->d_slot(n)};
}

// Weight of a (t:-1, dt:+1)-homogeneous element; asserts homogeneity.
int tdt_weight(const WeylElement& g, const TRing& tr) {
    int m = 0;
    bool first = true;
    for (const auto& [mon, c] : g.terms()) {
        int w = mon.e[tr.dt_slot] - mon.e[tr.t_slot];
        check_internal(first || w == m, "expected a t-weight homogeneous element");
        m = w;
        first = false;
    }
    return m;
}

// Multiply g by t^m (m >= 0) or dt^{-m} on the left so the weight becomes 0,
// then rewrite each term c x^a t^j d^b dt^j as c x^a d^b prod_{k<j} factor(k)
// inside the target ring (same x/d pairs, factors central).
template <typename FactorFn>
WeylElement rewrite_weight_zero(const WeylElement& g0, const TRing& tr,
                                const WeylRingPtr& target, FactorFn factor) {
    int m = tdt_weight(g0, tr);
    WeylElement g = m >= 0 ? WeylElement::generator(tr.ring, tr.t_slot, m) * g0
                           : WeylElement::generator(tr.ring, tr.dt_slot, -m) * g0;
    WeylElement out(target);
    for (const auto& [mon, c] : g.terms()) {
        int j = mon.e[tr.t_slot];
        check_internal(j == mon.e[tr.dt_slot], "weight adjustment failed");
        Monomial mm = Monomial::one(target->nslots());
        for (int i = 0; i < tr.n; ++i) {
            mm.e[target->x_slot(i)] = mon.e[tr.ring->x_slot(i)];
            mm.e[target->d_slot(i)] = mon.e[tr.ring->d_slot(i)];
        }
        WeylElement term = WeylElement::term(target, mm, c);
        for (int k = 0; k < j; ++k) term = term * factor(k);
        out += term;
    }
    return out;
}

// ---------- rank-3 module Groebner engine ----------
//
// Elements of D[s]^3 ordered position-over-term, component 0 highest, ties
// by an order eliminating every x and d slot (so pure-s monomials come
// last). Tracks the transporter { (R, Q) : (R h + Q f h) f^s = 0 } as the
// components 1 and 2 of elements whose component 0 vanished.

using Vec3 = std::array<WeylElement, 3>;

struct ModCtx {
    WeylRingPtr ring;
    OrderSpec ord;
};

bool vec_zero(const Vec3& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

const Monomial& lead_mon(const WeylElement& f, const OrderSpec& ord) {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || cmp_weyl_monomial(*best, m, ord) < 0) best = &m;
    return *best;
}

struct ModLead {
    int comp;
    Monomial mono;
};

ModLead lead_of(const Vec3& v, const ModCtx& cx) {
    for (int k = 0; k < 3; ++k)
        if (!v[k].is_zero()) return {k, lead_mon(v[k], cx.ord)};
    check_internal(false, "leading term of zero vector");
    return {};
}

Vec3 term_times(const WeylRingPtr& ring, const Monomial& q, const Rational& c, const Vec3& v) {
    WeylElement t = WeylElement::term(ring, q, c);
    return {t * v[0], t * v[1], t * v[2]};
}

void vec_sub(Vec3& a, const Vec3& b) {
    for (int k = 0; k < 3; ++k) a[k] -= b[k];
}

Vec3 reduce_vec(Vec3 p, const std::vector<Vec3>& gens, const ModCtx& cx) {
    Vec3 rem = {WeylElement(cx.ring), WeylElement(cx.ring), WeylElement(cx.ring)};
    while (!vec_zero(p)) {
        ModLead l = lead_of(p, cx);
        Rational c = p[l.comp].terms().at(l.mono);
        bool reduced = false;
        for (const Vec3& g : gens) {
            if (g[l.comp].is_zero()) continue;
            bool earlier = false;
            for (int k = 0; k < l.comp; ++k)
                if (!g[k].is_zero()) earlier = true;
            if (earlier) continue; // lead of g sits in an earlier component
            const Monomial& gl = lead_mon(g[l.comp], cx.ord);
            if (!gl.divides(l.mono)) continue;
            Rational gc = g[l.comp].terms().at(gl);
            vec_sub(p, term_times(cx.ring, l.mono / gl, c / gc, g));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[l.comp].add_term(l.mono, c);
            p[l.comp].add_term(l.mono, -c);
        }
    }
    return rem;
}

// Buchberger over the free module; no pair-dropping shortcuts (safety over
// speed: the commutative criteria are unsound here and the module rank is
// tiny anyway).
std::vector<Vec3> module_groebner(std::vector<Vec3> basis, const ModCtx& cx) {
    struct Pair {
        int i, j, deg;
        long stamp;
    };
    struct Cmp {
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.deg != b.deg) return a.deg > b.deg;
            return a.stamp > b.stamp;
        }
    };
    std::erase_if(basis, vec_zero);
    std::vector<Pair> queue;
    long stamp = 0;
    auto push_pairs = [&](int j) {
        ModLead lj = lead_of(basis[j], cx);
        for (int i = 0; i < j; ++i) {
            ModLead li = lead_of(basis[i], cx);
            if (li.comp != lj.comp) continue;
            queue.push_back({i, j, Monomial::lcm(li.mono, lj.mono).deg(), stamp++});
            std::push_heap(queue.begin(), queue.end(), Cmp{});
        }
    };
    for (int j = 0; j < (int)basis.size(); ++j) push_pairs(j);
    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), Cmp{});
        Pair pr = queue.back();
        queue.pop_back();
        ModLead li = lead_of(basis[pr.i], cx), lj = lead_of(basis[pr.j], cx);
        Monomial l = Monomial::lcm(li.mono, lj.mono);
        Vec3 s = term_times(cx.ring, l / li.mono,
                            basis[pr.i][li.comp].terms().at(li.mono).inv(), basis[pr.i]);
        vec_sub(s, term_times(cx.ring, l / lj.mono,
                              basis[pr.j][lj.comp].terms().at(lj.mono).inv(), basis[pr.j]));
        Vec3 r = reduce_vec(std::move(s), basis, cx);
        if (vec_zero(r)) continue;
        basis.push_back(std::move(r));
        push_pairs((int)basis.size() - 1);
    }
    // minimalize by leading term, then autoreduce and normalize
    std::vector<Vec3> minimal;
    for (int i = 0; i < (int)basis.size(); ++i) {
        ModLead li = lead_of(basis[i], cx);
        bool keep = true;
        for (int j = 0; j < (int)basis.size() && keep; ++j) {
            if (i == j) continue;
            ModLead lj = lead_of(basis[j], cx);
            if (lj.comp == li.comp && lj.mono.divides(li.mono) &&
                (lj.mono != li.mono || j < i))
                keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }
    std::vector<Vec3> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vec3> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Vec3 r = reduce_vec(minimal[i], others, cx);
        check_internal(!vec_zero(r), "autoreduction removed a minimal element");
        ModLead l = lead_of(r, cx);
        Rational c = r[l.comp].terms().at(l.mono).inv();
        for (int k = 0; k < 3; ++k) r[k] *= c;
        out.push_back(std::move(r));
    }
    return out;
}

// ---------- conversions ----------

UnivariatePoly pure_param_to_univariate(const WeylElement& g, int param_slot) {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : g.terms()) {
        for (size_t s = 0; s < m.e.size(); ++s)
            check_internal((int)s == param_slot || m.e[s] == 0,
                           "element is not a pure parameter polynomial");
        int k = m.e[param_slot];
        if ((int)coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
        coeffs[k] = c;
    }
    return UnivariatePoly(std::move(coeffs));
}

std::vector<int> all_pair_slots(const WeylRingPtr& w) {
    std::vector<int> slots;
    for (int i = 0; i < w->npairs(); ++i) {
        slots.push_back(w->x_slot(i));
        slots.push_back(w->d_slot(i));
    }
    return slots;
}

// Monomials of the x-ring with degree <= bound, by (degree, earlier
// variables first).
std::vector<Monomial> monomials_up_to(int nvars, int bound) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    for (int d = 0; d <= bound; ++d) {
        std::vector<Monomial> level;
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == nvars - 1) {
                e[i] = left;
                level.push_back(Monomial(e));
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[i] = k;
                rec(i + 1, left - k);
            }
        };
        if (nvars == 0) {
            if (d == 0) out.push_back(Monomial(e));
            continue;
        }
        rec(0, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace

// ---------- annihilator of f^s ----------

std::vector<WeylElement> ann_fs(const Polynomial& f) {
    check_usage(f.ring() != nullptr && !f.is_constant(), "f must be nonconstant");
    auto xring = f.ring();
    int n = xring->nvars();
    TRing tr = make_tring(xring, true);
    auto t = WeylElement::generator(tr.ring, tr.t_slot);
    auto dt = WeylElement::generator(tr.ring, tr.dt_slot);
    auto u = WeylElement::generator(tr.ring, tr.ring->p_slot(0));
    auto v = WeylElement::generator(tr.ring, tr.ring->p_slot(1));
    std::vector<WeylElement> J = {t - u * WeylElement::from_poly(tr.ring, f)};
    for (int i = 0; i < n; ++i)
        J.push_back(WeylElement::generator(tr.ring, tr.ring->d_slot(i)) +
                    u * WeylElement::from_poly(tr.ring, f.derivative(i)) * dt);
    J.push_back(u * v - WeylElement(tr.ring, Rational(1)));
    auto E = eliminate(J, {tr.ring->p_slot(0), tr.ring->p_slot(1)});
    check_internal(!E.empty(), "annihilator elimination returned nothing");

    DsRing ds = make_ds(xring);
    auto s_elem = WeylElement::generator(ds.weyl, ds.weyl->p_slot(0));
    // theta = t dt acts on f^s as -s-1, so t^j dt^j contributes
    // prod_{k<j} (-s-1-k).
    auto factor = [&](int k) { return WeylElement(ds.weyl, Rational(-1 - k)) - s_elem; };
    std::vector<WeylElement> out;
    for (const auto& g : E) {
        auto h = rewrite_weight_zero(g, tr, ds.weyl, factor);
        if (!h.is_zero()) out.push_back(h);
    }
    check_internal(!out.empty(), "empty annihilator basis");
    auto base = FsElement::power(ds.poly, n, {pad_poly(f, ds.poly)});
    for (const auto& g : out)
        check_internal(apply_to_fs(g, base).is_zero(),
                       "annihilator generator does not kill f^s");
    return out;
}

// ---------- b-function with certificate ----------

BFunction bernstein_sato(const Polynomial& f, const Polynomial& h) {
    check_usage(f.ring() != nullptr && !f.is_constant(), "f must be nonconstant");
    check_usage(h.ring() != nullptr && !h.is_zero(), "h must be nonzero");
    check_usage(h.ring() == f.ring() || h.ring()->vars() == f.ring()->vars(),
                "f and h must share a ring");
    auto ann = ann_fs(f);
    WeylRingPtr W = ann[0].ring();
    ModCtx cx{W, OrderSpec::elim_order(all_pair_slots(W))};

    auto zero = WeylElement(W);
    std::vector<Vec3> gens;
    for (const auto& a : ann) gens.push_back({a, zero, zero});
    auto one = WeylElement(W, Rational(1));
    gens.push_back({WeylElement::from_poly(W, f * h), zero, one});
    gens.push_back({WeylElement::from_poly(W, h), one, zero});

    auto gb = module_groebner(std::move(gens), cx);

    int s_slot = W->p_slot(0);
    const Vec3* best = nullptr;
    int best_deg = -1;
    for (const auto& v : gb) {
        if (!v[0].is_zero() || v[1].is_zero()) continue;
        const Monomial& lm = lead_mon(v[1], cx.ord);
        bool pure = true;
        for (int i = 0; i < W->npairs(); ++i)
            if (lm.e[W->x_slot(i)] || lm.e[W->d_slot(i)]) pure = false;
        if (!pure) continue;
        int deg = lm.e[s_slot];
        if (!best || deg < best_deg) {
            best = &v;
            best_deg = deg;
        }
    }
    check_internal(best != nullptr, "no univariate element in the transporter");

    UnivariatePoly b = pure_param_to_univariate((*best)[1], s_slot);
    Rational lc = b.leading();
    b = b.monic();
    WeylElement P = -((*best)[2] * lc.inv());

    BFunction out;
    out.f = f;
    out.h = h;
    out.poly = b;
    out.roots = rational_roots(b);
    check_internal(out.roots.cofactor.degree() == 0, "b-function did not split over Q");
    for (const auto& [r, m] : out.roots.roots)
        check_internal(r < Rational(0), "non-negative b-function root");
    out.cert = Certificate{{f}, h, b, {P}};
    auto vr = verify_certificate(out.cert);
    check_internal(vr.valid, "functional equation certificate failed to verify");
    return out;
}

BFunction bernstein_sato(const Polynomial& f) {
    check_usage(f.ring() != nullptr, "f must carry a ring");
    return bernstein_sato(f, Polynomial(f.ring(), Rational(1)));
}

// ---------- certificate verification ----------

VerifyResult verify_certificate(const Certificate& c) {
    check_usage(!c.fs.empty(), "certificate needs at least one f");
    check_usage(c.ops.size() == c.fs.size(), "one operator per f required");
    auto xring = c.fs[0].ring();
    check_usage(xring != nullptr, "certificate polynomials must carry a ring");
    for (const auto& f : c.fs) {
        check_usage(!f.is_constant(), "certificate f must be nonconstant");
        check_usage(f.ring() == xring || f.ring()->vars() == xring->vars(),
                    "certificate polynomials must share a ring");
    }
    check_usage(!c.h.is_zero(), "certificate h must be nonzero");
    int n = xring->nvars(), r = (int)c.fs.size();
    std::vector<std::string> pv = xring->vars();
    if (r == 1)
        pv.push_back("s");
    else
        for (int j = 1; j <= r; ++j) pv.push_back("s" + std::to_string(j));
    auto big = std::make_shared<PolyRing>(pv);
    std::vector<Polynomial> fs_big;
    for (const auto& f : c.fs) fs_big.push_back(pad_poly(f, big));
    auto base = FsElement::power(big, n, fs_big);

    Polynomial sigma(big);
    for (int j = 0; j < r; ++j) sigma += Polynomial::variable(big, n + j);
    Polynomial bs(big);
    for (int k = c.b.degree(); k >= 0; --k)
        bs = bs * sigma + Polynomial(big, c.b.coeff(k));

    Polynomial hb = pad_poly(c.h, big);
    FsElement residual = base;
    residual.mul_poly(bs * hb);
    for (int j = 0; j < r; ++j) {
        FsElement vj = base;
        vj.mul_poly(fs_big[j] * hb);
        residual = residual - apply_to_fs(c.ops[j], vj);
    }
    if (residual.is_zero()) return {true, ""};
    return {false, residual.str()};
}

// ---------- independent initial-ideal route (h = 1) ----------

UnivariatePoly bfunction_via_initial_ideal(const Polynomial& f) {
    check_usage(f.ring() != nullptr && !f.is_constant(), "f must be nonconstant");
    auto xring = f.ring();
    int n = xring->nvars();
    TRing tr = make_tring(xring, false);
    auto t = WeylElement::generator(tr.ring, tr.t_slot);
    auto dt = WeylElement::generator(tr.ring, tr.dt_slot);
    std::vector<WeylElement> I = {t - WeylElement::from_poly(tr.ring, f)};
    for (int i = 0; i < n; ++i)
        I.push_back(WeylElement::generator(tr.ring, tr.ring->d_slot(i)) +
                    WeylElement::from_poly(tr.ring, f.derivative(i)) * dt);
    std::vector<Rational> w(tr.ring->nslots(), Rational(0));
    w[tr.t_slot] = Rational(-1);
    w[tr.dt_slot] = Rational(1);
    auto G = left_groebner(I, OrderSpec::weight_order(w));

    std::vector<std::string> ds_names;
    for (const auto& v : xring->vars()) ds_names.push_back("d" + v);
    auto Dtheta = WeylRing::make(xring->vars(), ds_names, {"@theta"});
    auto theta = WeylElement::generator(Dtheta, Dtheta->p_slot(0));
    auto factor = [&](int k) { return theta - WeylElement(Dtheta, Rational(k)); };
    std::vector<WeylElement> forms;
    for (const auto& g : G) {
        auto h = rewrite_weight_zero(initial_form(g, w), tr, Dtheta, factor);
        if (!h.is_zero()) forms.push_back(h);
    }
    check_internal(!forms.empty(), "empty initial ideal");
    auto inter = eliminate(forms, all_pair_slots(Dtheta));
    check_internal(inter.size() == 1, "initial ideal did not meet Q[theta] in a principal ideal");
    UnivariatePoly bt = pure_param_to_univariate(inter[0], Dtheta->p_slot(0));
    // b(s) = m * bt(-s-1), normalized monic
    UnivariatePoly sub({Rational(-1), Rational(-1)});
    UnivariatePoly b;
    for (int k = bt.degree(); k >= 0; --k)
        b = b * sub + UnivariatePoly::constant(bt.coeff(k));
    return b.monic();
}

// ---------- jump values and tables ----------

Rational jump_alpha(const BFunction& b) {
    check_internal(!b.roots.roots.empty(), "b-function without roots");
    return -b.roots.roots.back().first;
}

Rational lct_from_bfunction(const Polynomial& f) {
    auto b = bernstein_sato(f);
    Rational a = jump_alpha(b);
    check_internal(a > Rational(0) && a <= Rational(1), "log canonical threshold out of (0, 1]");
    return a;
}

bool multiplier_membership(const Polynomial& f, const Polynomial& h, const Rational& alpha) {
    check_usage(alpha > Rational(0), "alpha must be positive");
    return alpha < jump_alpha(bernstein_sato(f, h));
}

VFiltTable v_filtration_table(const Polynomial& f, int degree_bound, const Rational& alpha_max,
                              int threads) {
    check_usage(degree_bound >= 0, "degree bound must be non-negative");
    check_usage(alpha_max > Rational(0), "alpha bound must be positive");
    check_usage(f.ring() != nullptr && !f.is_constant(), "f must be nonconstant");
    auto xring = f.ring();
    int n = xring->nvars();
    auto monos = monomials_up_to(n, degree_bound);

    std::vector<Rational> alpha(monos.size());
    auto work = [&](size_t idx) {
        return jump_alpha(bernstein_sato(f, Polynomial::monomial(xring, monos[idx])));
    };
    int T = std::max(1, threads);
    if (T == 1 || monos.size() <= 1) {
        for (size_t i = 0; i < monos.size(); ++i) alpha[i] = work(i);
    } else {
        std::vector<std::future<std::vector<std::pair<size_t, Rational>>>> futs;
        for (int k = 0; k < T; ++k)
            futs.push_back(std::async(std::launch::async, [&, k] {
                std::vector<std::pair<size_t, Rational>> part;
                for (size_t i = k; i < monos.size(); i += (size_t)T)
                    part.emplace_back(i, work(i));
                return part;
            }));
        for (auto& fu : futs)
            for (auto& [i, a] : fu.get()) alpha[i] = a;
    }

    VFiltTable out;
    out.complete = true;
    std::vector<Rational> jumps;
    for (size_t i = 0; i < monos.size(); ++i) {
        out.entries.emplace_back(monos[i], alpha[i]);
        if (alpha[i] <= alpha_max) {
            if (monos[i].deg() == degree_bound) out.complete = false;
            jumps.push_back(alpha[i]);
        }
    }
    std::sort(jumps.begin(), jumps.end());
    jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
    for (const auto& a : jumps) {
        MultiplierRow row;
        row.alpha = a;
        std::vector<Monomial> members;
        for (size_t i = 0; i < monos.size(); ++i)
            if (alpha[i] > a) members.push_back(monos[i]);
        for (const auto& m : members) {
            bool minimal = true;
            for (const auto& d : members)
                if (d != m && d.divides(m)) minimal = false;
            if (minimal) row.gens.push_back(m);
        }
        out.table.rows.push_back(std::move(row));
    }
    return out;
}

int inner_jumping_principal(const Polynomial& f, const Rational& alpha) {
    check_usage(alpha > Rational(0), "alpha must be positive");
    infer_weights(f); // quasi-homogeneous or usage error
    auto basis = milnor_basis(f); // isolated or usage error
    check_usage(!basis.empty(),
                "f is nonsingular at the origin, so the jump is not point-supported");
    // At every integer alpha the multiplier jump contains the divisor f = 0
    // itself (the colength of J(alpha) in J(alpha - eps) is infinite), so
    // only the range below 1 is point-supported.
    check_usage(alpha < Rational(1),
                "the jump at alpha >= 1 has a divisorial part and is not point-supported");
    auto xring = f.ring();
    int n = xring->nvars();
    int count = 0;
    constexpr int kDegreeCap = 64;
    for (int d = 0; d <= kDegreeCap; ++d) {
        auto level = monomials_up_to(n, d);
        std::erase_if(level, [&](const Monomial& m) { return m.deg() != d; });
        bool all_above = true;
        for (const auto& m : level) {
            Rational a = jump_alpha(bernstein_sato(f, Polynomial::monomial(xring, m)));
            if (a == alpha) ++count;
            if (a <= alpha) all_above = false;
        }
        // every degree-(d+1) monomial is x_i times one of these, and jumps
        // only grow along divisibility, so the scan can stop
        if (all_above) return count;
    }
    check_internal(false, "inner multiplicity scan exceeded the degree cap");
    return -1;
}

std::string bfunction_display(const BFunction& b) {
    std::vector<std::pair<Rational, int>> factors; // (c, mult) of (s+c)^mult
    for (const auto& [r, m] : b.roots.roots) factors.emplace_back(-r, m);
    std::sort(factors.begin(), factors.end(), [](const auto& u, const auto& v) {
        bool u1 = u.first == Rational(1), v1 = v.first == Rational(1);
        if (u1 != v1) return u1;
        return u.first < v.first;
    });
    std::ostringstream os;
    for (const auto& [c, m] : factors) {
        os << "(s+" << c.str() << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

} // namespace bsato
