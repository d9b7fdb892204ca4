#include "bsato/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "bsato/error.hpp"

namespace bsato {

WeylRing::WeylRing(std::vector<std::string> x, std::vector<std::string> d,
                   std::vector<std::string> params)
    : nx_(x.size()), np_(params.size()) {
    check_usage(x.size() == d.size(), "x and d variable lists must pair by index");
    names_ = std::move(x);
    names_.insert(names_.end(), d.begin(), d.end());
    names_.insert(names_.end(), params.begin(), params.end());
    for (size_t i = 0; i < names_.size(); ++i) {
        check_usage(!names_[i].empty(), "empty generator name");
        for (size_t j = i + 1; j < names_.size(); ++j)
            check_usage(names_[i] != names_[j], "duplicate generator name '" + names_[i] + "'");
    }
}

int WeylRing::find(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return (int)i;
    return -1;
}

WeylRingPtr WeylRing::make(std::vector<std::string> x, std::vector<std::string> d,
                           std::vector<std::string> params) {
    return std::make_shared<WeylRing>(std::move(x), std::move(d), std::move(params));
}

WeylRingPtr WeylRing::homogenized() const {
    check_internal(!homog_, "ring is already homogenized");
    auto r = std::make_shared<WeylRing>(*this);
    r->homog_ = true;
    r->names_.push_back("h");
    return r;
}

WeylElement::WeylElement(WeylRingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_[Monomial::one(ring_->nslots())] = c;
}

WeylElement WeylElement::generator(WeylRingPtr ring, int slot, int exp) {
    check_internal(slot >= 0 && slot < ring->nslots(), "slot out of range");
    Monomial m = Monomial::one(ring->nslots());
    m.e[slot] = exp;
    return term(std::move(ring), m, Rational(1));
}

WeylElement WeylElement::term(WeylRingPtr ring, const Monomial& m, const Rational& c) {
    WeylElement e(std::move(ring));
    check_internal(m.nvars() == e.ring_->nslots(), "term arity mismatch");
    if (!c.is_zero()) e.terms_[m] = c;
    return e;
}

WeylElement WeylElement::from_poly(WeylRingPtr ring, const Polynomial& p) {
    check_internal(p.ring() != nullptr, "polynomial without ring");
    std::vector<int> slot_of;
    for (const auto& v : p.ring()->vars()) {
        int s = ring->find(v);
        check_usage(s >= 0, "variable '" + v + "' does not name a ring generator");
        slot_of.push_back(s);
    }
    WeylElement e(ring);
    for (const auto& [m, c] : p.terms()) {
        Monomial t = Monomial::one(ring->nslots());
        for (size_t i = 0; i < slot_of.size(); ++i) t.e[slot_of[i]] += m.e[i];
        e.add_term(t, c);
    }
    return e;
}

bool WeylElement::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void WeylElement::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

namespace {
void require_same_ring(const WeylElement& a, const WeylElement& b) {
    check_internal(a.ring() && b.ring(), "element without ring");
    check_usage(a.ring() == b.ring() || a.ring()->same_layout(*b.ring()),
                "operator ring mismatch");
}
} // namespace

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    require_same_ring(a, b);
    return a.terms_ == b.terms_;
}

WeylElement normal_order_product(const WeylElement& A, const WeylElement& B) {
    require_same_ring(A, B);
    const WeylRing& R = *A.ring();
    const int n = R.npairs();
    WeylElement out(A.ring());
    for (const auto& [ma, ca] : A.terms()) {
        for (const auto& [mb, cb] : B.terms()) {
            // x^a1 d^b1 p^c1 * x^a2 d^b2 p^c2: commute d^b1 past x^a2.
            std::vector<int> cap(n);
            for (int i = 0; i < n; ++i)
                cap[i] = std::min(ma.e[R.d_slot(i)], mb.e[R.x_slot(i)]);
            std::vector<int> k(n, 0);
            while (true) {
                Rational coef = ca * cb;
                int ktot = 0;
                for (int i = 0; i < n; ++i) {
                    ktot += k[i];
                    // per pair: k! C(b1,k) C(a2,k) = prod_j (b1-j)(a2-j)/(j+1)
                    int b1 = ma.e[R.d_slot(i)], a2 = mb.e[R.x_slot(i)];
                    for (int j = 0; j < k[i]; ++j)
                        coef *= Rational((long)(b1 - j) * (a2 - j), (long)(j + 1));
                }
                Monomial m = ma * mb;
                for (int i = 0; i < n; ++i) {
                    m.e[R.x_slot(i)] -= k[i];
                    m.e[R.d_slot(i)] -= k[i];
                }
                if (R.homog()) m.e[R.h_slot()] += 2 * ktot;
                out.add_term(m, coef);
                int i = 0;
                while (i < n) {
                    if (++k[i] <= cap[i]) break;
                    k[i] = 0;
                    ++i;
                }
                if (i == n) break;
            }
        }
    }
    return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return cmp_monomial(a->first, b->first, MonomialOrder::grevlex) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << monomial_str(m, ring_->names());
        }
    }
    return os.str();
}

namespace {

// Full comparison chain used internally. The public OrderSpec kinds are the
// degree_first = false cases; homogenized Buchberger prepends the total
// degree over x, d and h slots so the order restricts correctly after h := 1.
struct MonoCmp {
    const WeylRing* ring;
    const OrderSpec* spec;
    bool degree_first = false;

    int cmp(const Monomial& a, const Monomial& b) const {
        if (degree_first) {
            int da = 0, db = 0;
            for (int s = 0; s < ring->nslots(); ++s) {
                if (ring->is_param(s)) continue;
                da += a.e[s];
                db += b.e[s];
            }
            if (da != db) return da < db ? -1 : 1;
        }
        switch (spec->kind) {
        case OrderSpec::Kind::lex:
            return cmp_monomial(a, b, MonomialOrder::lex);
        case OrderSpec::Kind::weight: {
            Rational wa(0), wb(0);
            size_t lim = std::min(spec->weights.size(), a.e.size());
            for (size_t s = 0; s < lim; ++s) {
                if (a.e[s]) wa += spec->weights[s] * Rational(a.e[s]);
                if (b.e[s]) wb += spec->weights[s] * Rational(b.e[s]);
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            break;
        }
        case OrderSpec::Kind::elim: {
            int da = 0, db = 0;
            for (int s : spec->elim_slots) {
                da += a.e[s];
                db += b.e[s];
            }
            if (da != db) return da < db ? -1 : 1;
            break;
        }
        case OrderSpec::Kind::grevlex:
            break;
        }
        return cmp_monomial(a, b, MonomialOrder::grevlex);
    }
};

const Monomial& lead_monomial(const WeylElement& f, const MonoCmp& cmp) {
    check_internal(!f.is_zero(), "leading term of zero element");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || cmp.cmp(*best, m) < 0) best = &m;
    return *best;
}

WeylElement reduce_full(const WeylElement& p, const std::vector<WeylElement>& gens,
                        const MonoCmp& cmp) {
    WeylElement rem(p.ring());
    WeylElement work = p;
    while (!work.is_zero()) {
        Monomial lm = lead_monomial(work, cmp);
        bool reduced = false;
        for (const WeylElement& g : gens) {
            if (g.is_zero()) continue;
            Monomial glm = lead_monomial(g, cmp);
            if (!glm.divides(lm)) continue;
            Rational c = work.terms().at(lm) / g.terms().at(glm);
            work -= WeylElement::term(p.ring(), lm / glm, c) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            Rational c = work.terms().at(lm);
            rem.add_term(lm, c);
            work.add_term(lm, -c);
        }
    }
    return rem;
}

struct Pair {
    int i, j;
    int lcm_deg;
    long stamp;
};
struct PairCmp {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg > b.lcm_deg;
        return a.stamp > b.stamp;
    }
};

// Buchberger closure; basis entries stay unnormalized until the final pass.
std::vector<WeylElement> buchberger(std::vector<WeylElement> basis, const MonoCmp& cmp) {
    WeylRingPtr ring = basis.at(0).ring();
    std::vector<Pair> queue;
    long stamp = 0;
    auto push_pair = [&](int i, int j) {
        Monomial l = Monomial::lcm(lead_monomial(basis[i], cmp), lead_monomial(basis[j], cmp));
        queue.push_back({i, j, l.deg(), stamp++});
        std::push_heap(queue.begin(), queue.end(), PairCmp{});
    };
    for (int i = 0; i < (int)basis.size(); ++i)
        for (int j = i + 1; j < (int)basis.size(); ++j) push_pair(i, j);

    auto chain_drops = [&](int i, int j) {
        Monomial lij = Monomial::lcm(lead_monomial(basis[i], cmp), lead_monomial(basis[j], cmp));
        for (int k = 0; k < (int)basis.size(); ++k) {
            if (k == i || k == j) continue;
            Monomial lk = lead_monomial(basis[k], cmp);
            if (!lk.divides(lij)) continue;
            Monomial lik = Monomial::lcm(lead_monomial(basis[i], cmp), lk);
            Monomial ljk = Monomial::lcm(lead_monomial(basis[j], cmp), lk);
            if (lik != lij && ljk != lij) return true;
        }
        return false;
    };

    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), PairCmp{});
        Pair pr = queue.back();
        queue.pop_back();
        const WeylElement& f = basis[pr.i];
        const WeylElement& g = basis[pr.j];
        Monomial lf = lead_monomial(f, cmp), lg = lead_monomial(g, cmp);
        // The commutative product criterion is unsound here ({d, x} has
        // coprime leads but S-pair -1); it applies only when the commutator
        // vanishes outright.
        if (lf.coprime(lg) && commutator(f, g).is_zero()) continue;
        if (chain_drops(pr.i, pr.j)) continue;
        Monomial l = Monomial::lcm(lf, lg);
        WeylElement s = WeylElement::term(ring, l / lf, f.terms().at(lf).inv()) * f -
                        WeylElement::term(ring, l / lg, g.terms().at(lg).inv()) * g;
        WeylElement r = reduce_full(s, basis, cmp);
        if (r.is_zero()) continue;
        int idx = (int)basis.size();
        basis.push_back(r);
        for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }
    return basis;
}

std::vector<WeylElement> minimalize(const std::vector<WeylElement>& basis, const MonoCmp& cmp) {
    std::vector<WeylElement> minimal;
    for (int i = 0; i < (int)basis.size(); ++i) {
        Monomial li = lead_monomial(basis[i], cmp);
        bool keep = true;
        for (int j = 0; j < (int)basis.size(); ++j) {
            if (i == j) continue;
            Monomial lj = lead_monomial(basis[j], cmp);
            if (lj.divides(li) && (lj != li || j < i)) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }
    return minimal;
}

std::vector<WeylElement> finalize_basis(std::vector<WeylElement> basis, const MonoCmp& cmp,
                                        bool tail_reduce) {
    basis = minimalize(basis, cmp);
    std::vector<WeylElement> out;
    for (size_t i = 0; i < basis.size(); ++i) {
        WeylElement r = basis[i];
        if (tail_reduce) {
            std::vector<WeylElement> others;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            r = reduce_full(r, others, cmp);
            check_internal(!r.is_zero(), "reduced basis element vanished");
        }
        out.push_back(r * r.terms().at(lead_monomial(r, cmp)).inv());
    }
    std::sort(out.begin(), out.end(), [&](const WeylElement& a, const WeylElement& b) {
        return cmp.cmp(lead_monomial(a, cmp), lead_monomial(b, cmp)) < 0;
    });
    return out;
}

void check_spec_shape(const WeylRing& ring, const OrderSpec& ord) {
    if (ord.kind == OrderSpec::Kind::weight) {
        check_usage((int)ord.weights.size() == ring.nslots(),
                    "weight vector length must match the ring");
        for (int i = 0; i < ring.npairs(); ++i)
            check_usage(ord.weights[ring.x_slot(i)] + ord.weights[ring.d_slot(i)] >=
                            Rational(0),
                        "inadmissible order: weight(x_i) + weight(d_i) < 0");
        for (int k = 0; k < ring.nparams(); ++k)
            check_usage(ord.weights[ring.p_slot(k)] >= Rational(0),
                        "inadmissible order: negative parameter weight");
    }
    if (ord.kind == OrderSpec::Kind::elim)
        for (int s : ord.elim_slots)
            check_usage(s >= 0 && s < ring.nslots(), "elimination slot out of range");
}

} // namespace

int cmp_weyl_monomial(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
    MonoCmp cmp{nullptr, &ord, false};
    return cmp.cmp(a, b);
}

WeylElement normal_form(const WeylElement& p, const std::vector<WeylElement>& gb,
                        const OrderSpec& ord) {
    if (p.is_zero()) return p;
    check_spec_shape(*p.ring(), ord);
    if (ord.kind == OrderSpec::Kind::weight)
        for (const auto& w : ord.weights)
            check_usage(w >= Rational(0),
                        "normal_form needs a well-order (non-negative weights)");
    MonoCmp cmp{p.ring().get(), &ord, false};
    return reduce_full(p, gb, cmp);
}

std::vector<WeylElement> left_groebner(const std::vector<WeylElement>& gens,
                                       const OrderSpec& ord) {
    std::vector<WeylElement> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    check_usage(!nz.empty(), "left_groebner: no nonzero generators");
    WeylRingPtr ring = nz[0].ring();
    check_spec_shape(*ring, ord);

    bool needs_homog = false;
    if (ord.kind == OrderSpec::Kind::weight)
        for (const auto& w : ord.weights)
            if (w < Rational(0)) needs_homog = true;

    if (!needs_homog) {
        MonoCmp cmp{ring.get(), &ord, false};
        return finalize_basis(buchberger(std::move(nz), cmp), cmp, true);
    }

    // Mixed-sign weight order: not a well-order, so run the computation in
    // the homogenized ring under (total x/d/h degree, weight, grevlex) and
    // set h = 1 afterwards. Tail reduction is skipped downstairs (it need
    // not terminate); minimality and monicity still hold.
    check_internal(!ring->homog(), "nested homogenization");
    WeylRingPtr hring = ring->homogenized();
    OrderSpec hord = ord;
    hord.weights.push_back(Rational(0)); // h
    std::vector<WeylElement> hgens;
    for (const auto& g : nz) {
        int maxdeg = 0;
        for (const auto& [m, c] : g.terms()) {
            int d = 0;
            for (int i = 0; i < ring->npairs(); ++i)
                d += m.e[ring->x_slot(i)] + m.e[ring->d_slot(i)];
            maxdeg = std::max(maxdeg, d);
        }
        WeylElement hg(hring);
        for (const auto& [m, c] : g.terms()) {
            int d = 0;
            for (int i = 0; i < ring->npairs(); ++i)
                d += m.e[ring->x_slot(i)] + m.e[ring->d_slot(i)];
            Monomial hm = m;
            hm.e.push_back(maxdeg - d);
            hg.add_term(hm, c);
        }
        hgens.push_back(hg);
    }
    MonoCmp hcmp{hring.get(), &hord, true};
    std::vector<WeylElement> hgb =
        finalize_basis(buchberger(std::move(hgens), hcmp), hcmp, true);

    std::vector<WeylElement> out;
    for (const auto& hg : hgb) {
        WeylElement g(ring);
        for (const auto& [m, c] : hg.terms()) {
            Monomial dm = m;
            dm.e.pop_back();
            g.add_term(dm, c);
        }
        check_internal(!g.is_zero(), "dehomogenization collapsed an element");
        out.push_back(g);
    }
    MonoCmp cmp{ring.get(), &ord, false};
    return finalize_basis(std::move(out), cmp, false);
}

std::vector<WeylElement> eliminate(const std::vector<WeylElement>& gens,
                                   const std::vector<int>& kill) {
    check_usage(!gens.empty(), "eliminate: empty generator list");
    const WeylRing& ring = *gens[0].ring();
    for (int s : kill) {
        check_usage(s >= 0 && s < ring.nslots(), "elimination slot out of range");
        check_usage(!ring.is_h(s), "cannot eliminate the homogenization slot");
        if (ring.is_x(s))
            check_usage(std::count(kill.begin(), kill.end(), ring.d_slot(s)) > 0,
                        "eliminating " + ring.slot_name(s) + " requires eliminating " +
                            ring.slot_name(ring.d_slot(s)) + " too");
        if (ring.is_d(s)) {
            int i = s - ring.npairs();
            check_usage(std::count(kill.begin(), kill.end(), ring.x_slot(i)) > 0,
                        "eliminating " + ring.slot_name(s) + " requires eliminating " +
                            ring.slot_name(ring.x_slot(i)) + " too");
        }
    }
    auto gb = left_groebner(gens, OrderSpec::elim_order(kill));
    std::vector<WeylElement> out;
    for (const auto& g : gb) {
        bool free = true;
        for (const auto& [m, c] : g.terms())
            for (int s : kill)
                if (m.e[s] != 0) free = false;
        if (free) out.push_back(g);
    }
    return out;
}

WeylElement initial_form(const WeylElement& g, const std::vector<Rational>& w) {
    check_usage(!g.is_zero(), "initial form of zero");
    check_usage((int)w.size() == g.ring()->nslots(), "weight vector length mismatch");
    bool first = true;
    Rational best(0);
    for (const auto& [m, c] : g.terms()) {
        Rational v(0);
        for (size_t s = 0; s < w.size(); ++s)
            if (m.e[s]) v += w[s] * Rational(m.e[s]);
        if (first || v > best) best = v;
        first = false;
    }
    WeylElement out(g.ring());
    for (const auto& [m, c] : g.terms()) {
        Rational v(0);
        for (size_t s = 0; s < w.size(); ++s)
            if (m.e[s]) v += w[s] * Rational(m.e[s]);
        if (v == best) out.add_term(m, c);
    }
    return out;
}

} // namespace bsato
