#include "bsato/fs_action.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bsato/error.hpp"

namespace bsato {

FsElement::FsElement(PolyRingPtr ring, int nx, std::vector<Polynomial> fs, Polynomial numer,
                     std::vector<int> denom)
    : ring_(std::move(ring)), nx_(nx), fs_(std::move(fs)), numer_(std::move(numer)),
      denom_(std::move(denom)) {
    check_usage(nx_ >= 0 && nx_ + (int)fs_.size() == ring_->nvars(),
                "ring must carry the x block then one s variable per f");
    check_usage(denom_.size() == fs_.size(), "denominator exponent per f required");
    for (int d : denom_) check_usage(d >= 0, "negative denominator exponent");
    for (const auto& f : fs_) {
        check_usage(!f.is_zero(), "zero polynomial in the f list");
        for (const auto& [m, c] : f.terms())
            for (int k = nx_; k < ring_->nvars(); ++k)
                check_usage(m.e[k] == 0, "f may not involve the s variables");
    }
    normalize();
}

FsElement FsElement::power(PolyRingPtr ring, int nx, std::vector<Polynomial> fs) {
    Polynomial one(ring, Rational(1));
    std::vector<int> d(fs.size(), 0);
    return FsElement(std::move(ring), nx, std::move(fs), std::move(one), std::move(d));
}

void FsElement::normalize() {
    if (numer_.is_zero()) {
        std::fill(denom_.begin(), denom_.end(), 0);
        return;
    }
    for (size_t i = 0; i < fs_.size(); ++i)
        while (denom_[i] > 0) {
            auto q = try_divide(numer_, fs_[i]);
            if (!q) break;
            numer_ = *q;
            --denom_[i];
        }
}

void FsElement::mul_poly(const Polynomial& p) {
    numer_ = numer_ * p;
    normalize();
}

void FsElement::apply_partial(int xk) {
    check_internal(xk >= 0 && xk < nx_, "derivative slot out of range");
    Polynomial out = numer_.derivative(xk);
    for (size_t j = 0; j < fs_.size(); ++j) out = out * fs_[j];
    for (size_t i = 0; i < fs_.size(); ++i) {
        Polynomial term = numer_ * fs_[i].derivative(xk);
        term = term * (Polynomial::variable(ring_, nx_ + (int)i) -
                       Polynomial(ring_, Rational(denom_[i])));
        for (size_t j = 0; j < fs_.size(); ++j)
            if (j != i) term = term * fs_[j];
        out += term;
    }
    numer_ = std::move(out);
    for (auto& d : denom_) ++d;
    normalize();
}

void FsElement::apply_t(int i) {
    check_internal(i >= 0 && i < nf(), "shift index out of range");
    numer_ = numer_.shift_var(nx_ + i, Rational(1));
    if (denom_[i] > 0)
        --denom_[i];
    else
        numer_ = numer_ * fs_[i];
    normalize();
}

void FsElement::apply_t_inv(int i) {
    check_internal(i >= 0 && i < nf(), "shift index out of range");
    numer_ = numer_.shift_var(nx_ + i, Rational(-1));
    ++denom_[i];
    normalize();
}

void FsElement::apply_sij(int i, int j) {
    apply_t(j);
    apply_t_inv(i);
    mul_poly(Polynomial::variable(ring_, nx_ + i));
}

namespace {
void require_compatible(const FsElement& a, const FsElement& b) {
    check_internal(a.ring() == b.ring() || a.ring()->vars() == b.ring()->vars(),
                   "mixed rings");
    check_usage(a.nx() == b.nx() && a.fs() == b.fs(), "mixed f lists");
}
} // namespace

FsElement operator+(const FsElement& a, const FsElement& b) {
    require_compatible(a, b);
    std::vector<int> d(a.nf());
    Polynomial na = a.numer_, nb = b.numer_;
    for (int i = 0; i < a.nf(); ++i) {
        d[i] = std::max(a.denom_[i], b.denom_[i]);
        na = na * a.fs_[i].pow(d[i] - a.denom_[i]);
        nb = nb * a.fs_[i].pow(d[i] - b.denom_[i]);
    }
    return FsElement(a.ring_, a.nx_, a.fs_, na + nb, d);
}

FsElement operator-(const FsElement& a, const FsElement& b) {
    FsElement nb = b;
    nb.numer_ = -nb.numer_;
    return a + nb;
}

bool operator==(const FsElement& a, const FsElement& b) { return (a - b).is_zero(); }

std::string FsElement::str() const {
    if (numer_.is_zero()) return "0";
    std::ostringstream os;
    os << "(" << numer_.str() << ")";
    for (size_t i = 0; i < fs_.size(); ++i)
        if (denom_[i] > 0) {
            os << " / (" << fs_[i].str() << ")";
            if (denom_[i] > 1) os << "^" << denom_[i];
        }
    for (size_t i = 0; i < fs_.size(); ++i)
        os << " * (" << fs_[i].str() << ")^" << ring_->vars()[nx_ + (int)i];
    return os.str();
}

FsElement apply_to_fs(const WeylElement& op, const FsElement& v) {
    check_internal(op.ring() != nullptr, "operator without ring");
    const WeylRing& R = *op.ring();
    check_usage(!R.homog(), "homogenized operators do not act on f^s");

    std::vector<int> xvar(R.npairs());
    for (int k = 0; k < R.npairs(); ++k) {
        int idx = v.ring()->var_index(R.slot_name(R.x_slot(k)));
        check_usage(idx >= 0 && idx < v.nx(),
                    "operator variable '" + R.slot_name(R.x_slot(k)) +
                        "' is not an x variable of the module");
        xvar[k] = idx;
    }
    struct ParamAction {
        bool shift = false; // false: multiply by var, true: s_{ij}
        int var = -1;       // multiplication target
        int i = -1, j = -1; // shift indices (0-based)
    };
    std::vector<ParamAction> pact(R.nparams());
    for (int k = 0; k < R.nparams(); ++k) {
        const std::string& nm = R.slot_name(R.p_slot(k));
        int idx = v.ring()->var_index(nm);
        if (idx >= v.nx()) {
            pact[k] = {false, idx, -1, -1};
            continue;
        }
        bool sij = nm.size() == 3 && nm[0] == 's' && isdigit(nm[1]) && isdigit(nm[2]);
        if (sij) {
            int i = nm[1] - '1', j = nm[2] - '1';
            check_usage(i >= 0 && i < v.nf() && j >= 0 && j < v.nf() && i != j,
                        "shift generator '" + nm + "' out of range");
            pact[k] = {true, -1, i, j};
            continue;
        }
        check_usage(false, "parameter '" + nm + "' has no action on f^s");
    }

    FsElement out(v.ring(), v.nx(), v.fs(), Polynomial(v.ring()), std::vector<int>(v.nf(), 0));
    for (const auto& [m, c] : op.terms()) {
        FsElement w = v;
        // shift generators first, sorted rightmost-first
        std::vector<std::tuple<int, int, int>> shifts; // (i, j, exponent)
        for (int k = 0; k < R.nparams(); ++k)
            if (pact[k].shift && m.e[R.p_slot(k)] > 0)
                shifts.emplace_back(pact[k].i, pact[k].j, m.e[R.p_slot(k)]);
        std::sort(shifts.begin(), shifts.end());
        for (auto it = shifts.rbegin(); it != shifts.rend(); ++it)
            for (int r = 0; r < std::get<2>(*it); ++r)
                w.apply_sij(std::get<0>(*it), std::get<1>(*it));
        for (int k = 0; k < R.nparams(); ++k)
            if (!pact[k].shift && m.e[R.p_slot(k)] > 0)
                w.mul_poly(Polynomial::variable(v.ring(), pact[k].var, m.e[R.p_slot(k)]));
        for (int k = 0; k < R.npairs(); ++k)
            for (int r = 0; r < m.e[R.d_slot(k)]; ++r) w.apply_partial(xvar[k]);
        Polynomial xmono(v.ring(), c);
        for (int k = 0; k < R.npairs(); ++k)
            if (m.e[R.x_slot(k)] > 0)
                xmono = xmono * Polynomial::variable(v.ring(), xvar[k], m.e[R.x_slot(k)]);
        w.mul_poly(xmono);
        out = out + w;
    }
    return out;
}

} // namespace bsato
