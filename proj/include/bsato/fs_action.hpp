#pragma once

#include <string>
#include <vector>

#include "bsato/polynomial.hpp"
#include "bsato/weyl.hpp"

namespace bsato {

// Element N / (f_1^{d_1} ... f_r^{d_r}) * f_1^{s_1} ... f_r^{s_r} of the
// localized module Q[x, s, 1/f] f^s. The polynomial ring carries the x
// variables first, then one s variable per f_i; the f_i themselves must not
// involve the s block. Zero iff the numerator is zero.
class FsElement {
public:
    FsElement(PolyRingPtr ring, int nx, std::vector<Polynomial> fs, Polynomial numer,
              std::vector<int> denom);
    // The bare symbol f_1^{s_1} ... f_r^{s_r}.
    static FsElement power(PolyRingPtr ring, int nx, std::vector<Polynomial> fs);

    const PolyRingPtr& ring() const { return ring_; }
    int nx() const { return nx_; }
    int nf() const { return (int)fs_.size(); }
    const std::vector<Polynomial>& fs() const { return fs_; }
    const Polynomial& numer() const { return numer_; }
    const std::vector<int>& denom() const { return denom_; }
    bool is_zero() const { return numer_.is_zero(); }

    void mul_poly(const Polynomial& p);
    // d/dx_k by the quotient rule; xk indexes the polynomial ring.
    void apply_partial(int xk);
    // t_i: s_i -> s_i + 1 in the numerator, then multiply by f_i.
    void apply_t(int i);
    // t_i^{-1}: s_i -> s_i - 1, then divide by f_i.
    void apply_t_inv(int i);
    // s_{ij} = s_i t_i^{-1} t_j (rightmost acts first).
    void apply_sij(int i, int j);

    friend FsElement operator+(const FsElement& a, const FsElement& b);
    friend FsElement operator-(const FsElement& a, const FsElement& b);
    friend bool operator==(const FsElement& a, const FsElement& b);
    friend bool operator!=(const FsElement& a, const FsElement& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();

    PolyRingPtr ring_;
    int nx_ = 0;
    std::vector<Polynomial> fs_;
    Polynomial numer_;
    std::vector<int> denom_;
};

// Action of an operator on the module above. The operator's x/d pairs must
// name x variables of v's ring; a parameter must either name an s variable
// (multiplication) or be one of the shift generators "sij" (digits i != j,
// acting as s_i t_i^{-1} t_j). Each normally ordered term acts right to
// left: shift generators, then s multiplications, then derivatives, then the
// x monomial.
FsElement apply_to_fs(const WeylElement& op, const FsElement& v);

} // namespace bsato
