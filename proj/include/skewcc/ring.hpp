#pragma once

// The finite commutative non-chain ring R = F_{p^m}[v]/(v^3 - v).
//
// With zeta = inv(2) in F_p (p odd), the primitive orthogonal idempotents are
//   eta0 = 1 - v^2,   eta1 = zeta (v^2 + v),   eta2 = zeta (v^2 - v),
// and every r = a + b v + c v^2 decomposes uniquely as
// r = beta0 eta0 + beta1 eta1 + beta2 eta2. Evaluating r at v = 0, 1, -1
// (the roots of v^3 - v) forces
//   beta0 = a,   beta1 = a + b + c,   beta2 = a - b + c,
// which is the CRT isomorphism R ~ F_q^3 used throughout: multiplication,
// units (all three coordinates nonzero) and the extended automorphism
// sigma(a + bv + cv^2) = Theta(a) + Theta(b)v + Theta(c)v^2 all act
// coordinatewise through it.

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>

#include "finite_field.hpp"

namespace skewcc {

struct CrtCoords {
    FieldElement beta0, beta1, beta2;

    bool operator==(const CrtCoords& o) const {
        return beta0 == o.beta0 && beta1 == o.beta1 && beta2 == o.beta2;
    }
    bool operator!=(const CrtCoords& o) const { return !(*this == o); }
};

class RingElement {
   public:
    RingElement(FieldElement a, FieldElement b, FieldElement c) : a_(a), b_(b), c_(c) {
        detail::common_field(a_, b_);
        detail::common_field(a_, c_);
    }

    static RingElement zero(const Field& f) { return RingElement(f.zero(), f.zero(), f.zero()); }
    static RingElement one(const Field& f) { return RingElement(f.one(), f.zero(), f.zero()); }
    static RingElement from_field(FieldElement a) {
        const Field& f = a.field();
        return RingElement(a, f.zero(), f.zero());
    }
    static RingElement v(const Field& f) { return RingElement(f.zero(), f.one(), f.zero()); }

    const Field& field() const { return a_.field(); }
    const FieldElement& a() const { return a_; }  // constant component
    const FieldElement& b() const { return b_; }  // v component
    const FieldElement& c() const { return c_; }  // v^2 component

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

    friend RingElement operator+(const RingElement& r, const RingElement& s) {
        return RingElement(r.a_ + s.a_, r.b_ + s.b_, r.c_ + s.c_);
    }
    friend RingElement operator-(const RingElement& r, const RingElement& s) {
        return RingElement(r.a_ - s.a_, r.b_ - s.b_, r.c_ - s.c_);
    }
    RingElement operator-() const { return RingElement(-a_, -b_, -c_); }

    // Product reduced by v^3 = v (hence v^4 = v^2).
    friend RingElement operator*(const RingElement& r, const RingElement& s) {
        FieldElement s0 = r.a_ * s.a_;
        FieldElement s1 = r.a_ * s.b_ + r.b_ * s.a_;
        FieldElement s2 = r.a_ * s.c_ + r.b_ * s.b_ + r.c_ * s.a_;
        FieldElement s3 = r.b_ * s.c_ + r.c_ * s.b_;
        FieldElement s4 = r.c_ * s.c_;
        return RingElement(s0, s1 + s3, s2 + s4);
    }

    friend RingElement operator*(const FieldElement& x, const RingElement& r) {
        return RingElement(x * r.a_, x * r.b_, x * r.c_);
    }

    bool operator==(const RingElement& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

   private:
    FieldElement a_, b_, c_;
};

// (eta0, eta1, eta2) with zeta = inv(2) computed in the prime subfield.
inline std::array<RingElement, 3> idempotents(const Field& f) {
    FieldElement zeta = f.from_int(2).inv();
    RingElement eta0(f.one(), f.zero(), -f.one());
    RingElement eta1(f.zero(), zeta, zeta);
    RingElement eta2(f.zero(), -zeta, zeta);
    return {eta0, eta1, eta2};
}

inline CrtCoords to_crt(const RingElement& r) {
    return {r.a(), r.a() + r.b() + r.c(), r.a() - r.b() + r.c()};
}

inline RingElement from_crt(const Field& f, const CrtCoords& c) {
    auto eta = idempotents(f);
    return c.beta0 * eta[0] + c.beta1 * eta[1] + c.beta2 * eta[2];
}

// Units are exactly the elements with all three CRT coordinates nonzero.
inline bool is_unit(const RingElement& r) {
    CrtCoords c = to_crt(r);
    return !c.beta0.is_zero() && !c.beta1.is_zero() && !c.beta2.is_zero();
}

inline RingElement ring_inv(const RingElement& r) {
    if (!is_unit(r)) throw std::invalid_argument("inversion of a non-unit ring element");
    CrtCoords c = to_crt(r);
    return from_crt(r.field(), {c.beta0.inv(), c.beta1.inv(), c.beta2.inv()});
}

// sigma^k: componentwise Frobenius power.
inline RingElement sigma(const RingElement& r, int twist) {
    const Field& f = r.field();
    return RingElement(f.frobenius(r.a(), twist), f.frobenius(r.b(), twist), f.frobenius(r.c(), twist));
}

// "a + b v + c v^2" with zero components omitted; multi-term field
// coefficients are parenthesized.
inline std::string to_string(const RingElement& r) {
    auto piece = [](const FieldElement& x, const std::string& vs) {
        std::string c = to_string(x);
        if (vs.empty()) return c;
        if (x.is_one()) return vs;
        if (c.size() > 1) c = "(" + c + ")";
        return c + vs;
    };
    std::string out;
    if (!r.a().is_zero()) out = piece(r.a(), "");
    if (!r.b().is_zero()) out += (out.empty() ? "" : " + ") + piece(r.b(), "v");
    if (!r.c().is_zero()) out += (out.empty() ? "" : " + ") + piece(r.c(), "v^2");
    return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const RingElement& r) { return os << to_string(r); }

}  // namespace skewcc
