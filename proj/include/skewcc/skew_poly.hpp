#pragma once

// The skew polynomial ring F_{p^m}[x; sigma] where sigma = Theta^twist is a
// power of the Frobenius automorphism. Multiplication is twisted by
// (a x^i)(b x^j) = a sigma^i(b) x^{i+j}, so the ring is non-commutative for
// a non-trivial twist.
//
// Division conventions in this file are RIGHT division with the quotient on
// the LEFT: right_divmod(f, g) returns (q, r) with f = q*g + r and
// deg r < deg g. "g right-divides f" therefore means f = q*g exactly. Every
// operation name says "right" explicitly to keep the orientation straight.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "finite_field.hpp"

namespace skewcc {

class SkewPoly {
   public:
    // Zero polynomial: empty coefficient list, degree() == -1 sentinel.
    SkewPoly(const Field& f, int twist) : field_(&f), twist_(twist) {}

    SkewPoly(const Field& f, int twist, std::vector<FieldElement> coeffs)
        : field_(&f), twist_(twist), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (&c.field() != field_ && !field_->same_params(c.field()))
                throw std::invalid_argument("coefficient from a different field");
        trim();
    }

    static SkewPoly zero(const Field& f, int twist) { return SkewPoly(f, twist); }
    static SkewPoly one(const Field& f, int twist) { return SkewPoly(f, twist, {f.one()}); }
    static SkewPoly constant(const Field& f, int twist, FieldElement c) { return SkewPoly(f, twist, {c}); }

    // x^n - lambda, the modulus of a length-n skew lambda-constacyclic code.
    static SkewPoly x_pow_minus(const Field& f, int twist, int n, FieldElement lambda) {
        std::vector<FieldElement> cs(n + 1, f.zero());
        cs[0] = -lambda;
        cs[n] = f.one();
        return SkewPoly(f, twist, std::move(cs));
    }

    static SkewPoly monomial(const Field& f, int twist, FieldElement c, int degree) {
        std::vector<FieldElement> cs(degree + 1, f.zero());
        cs[degree] = c;
        return SkewPoly(f, twist, std::move(cs));
    }

    const Field& field() const { return *field_; }
    int twist() const { return twist_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    FieldElement coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
        return coeffs_[i];
    }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    FieldElement leading() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    // Coefficient vector padded with zeros to the given length; the word form
    // of a codeword polynomial.
    std::vector<FieldElement> word(int n) const {
        if (degree() >= n) throw std::invalid_argument("polynomial degree exceeds word length");
        std::vector<FieldElement> out(n, field_->zero());
        for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
        return out;
    }

    static SkewPoly from_word(const Field& f, int twist, const std::vector<FieldElement>& w) {
        return SkewPoly(f, twist, w);
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        a.check_ring(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        a.check_ring(b);
        std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_->zero());
        for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return SkewPoly(*a.field_, a.twist_, std::move(out));
    }

    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

    SkewPoly operator-() const {
        std::vector<FieldElement> out = coeffs_;
        for (auto& c : out) c = -c;
        return SkewPoly(*field_, twist_, std::move(out));
    }

    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) { return skew_mul(a, b); }

    // (a x^i)(b x^j) = a sigma^i(b) x^{i+j}
    friend SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) {
        a.check_ring(b);
        if (a.is_zero() || b.is_zero()) return SkewPoly(*a.field_, a.twist_);
        const Field& F = *a.field_;
        std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out[i + j] = out[i + j] + a.coeffs_[i] * F.frobenius(b.coeffs_[j], static_cast<int>(i) * a.twist_);
            }
        }
        return SkewPoly(F, a.twist_, std::move(out));
    }

    // Left-scale by a constant: c * f (degree-0 left factor, no twisting).
    SkewPoly scaled(FieldElement c) const {
        std::vector<FieldElement> out = coeffs_;
        for (auto& x : out) x = c * x;
        return SkewPoly(*field_, twist_, std::move(out));
    }

    // Left-multiply by the leading coefficient's inverse; generates the same
    // left ideal.
    SkewPoly monic_normalized() const { return scaled(leading().inv()); }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    void check_ring(const SkewPoly& other) const {
        if (twist_ != other.twist_) throw std::invalid_argument("skew polynomials with different twists");
        if (field_ != other.field_ && !field_->same_params(*other.field_))
            throw std::invalid_argument("skew polynomials over different fields");
    }

    const Field* field_;
    int twist_;
    std::vector<FieldElement> coeffs_;
};

struct SkewDivMod {
    SkewPoly quotient;
    SkewPoly remainder;
};

// Right division: f = quotient * g + remainder with deg remainder < deg g.
// The divisor sits on the right, the quotient on the left.
inline SkewDivMod right_divmod(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("right division by zero polynomial");
    const Field& F = f.field();
    int tw = f.twist();
    SkewPoly q = SkewPoly::zero(F, tw);
    SkewPoly r = f;
    // Each step clears the current leading term of r with a left monomial:
    // (c x^d) * g has leading coefficient c * sigma^d(lead g).
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int d = r.degree() - g.degree();
        FieldElement c = r.leading() * F.frobenius(g.leading(), d * tw).inv();
        SkewPoly mono = SkewPoly::monomial(F, tw, c, d);
        q = q + mono;
        r = r - skew_mul(mono, g);
    }
    return {q, r};
}

// True iff f = q * g exactly for some left quotient q.
inline bool right_divides(const SkewPoly& g, const SkewPoly& f) {
    return right_divmod(f, g).remainder.is_zero();
}

// h(x) = sum h_j x^j of degree k maps to h*(x) = sum sigma^j(h_{k-j}) x^j.
inline SkewPoly skew_reciprocal(const SkewPoly& h) {
    if (h.is_zero()) throw std::invalid_argument("skew reciprocal of zero polynomial");
    const Field& F = h.field();
    int k = h.degree();
    std::vector<FieldElement> out(k + 1, F.zero());
    for (int j = 0; j <= k; ++j) out[j] = F.frobenius(h.coeff(k - j), j * h.twist());
    return SkewPoly(F, h.twist(), std::move(out));
}

// x^n - delta is central iff sigma fixes delta and the order of sigma
// divides n. Only then is the quotient by <x^n - delta> a ring and right
// division by it unambiguous.
inline bool is_central_modulus(int n, const FieldElement& delta_component, int twist) {
    const Field& F = delta_component.field();
    if (n <= 0) return false;
    if (n % F.automorphism_order(twist) != 0) return false;
    return F.frobenius(delta_component, twist) == delta_component;
}

// All monic degree-d right divisors of x^n - lambda, by exhaustive test of
// every coefficient tuple. Tuples are enumerated with the constant
// coefficient most significant, i.e. output is ordered lexicographically by
// (c_0, c_1, ..., c_{d-1}) in element-index order.
inline std::vector<SkewPoly> enumerate_monic_right_divisors(const Field& F, int n, FieldElement lambda,
                                                            int degree, int twist,
                                                            long long candidate_bound = 10000000) {
    if (degree < 0) throw std::invalid_argument("negative divisor degree");
    long long count = 1;
    for (int i = 0; i < degree; ++i) {
        count *= F.q();
        if (count > candidate_bound) throw std::invalid_argument("divisor enumeration bound exceeded");
    }
    SkewPoly modulus = SkewPoly::x_pow_minus(F, twist, n, lambda);
    std::vector<SkewPoly> out;
    std::vector<FieldElement> cs(degree + 1, F.zero());
    cs[degree] = F.one();
    std::vector<int> odo(degree, 0);
    for (long long it = 0; it < count; ++it) {
        long long v = it;
        for (int i = degree - 1; i >= 0; --i) {  // c_0 most significant
            odo[i] = static_cast<int>(v % F.q());
            v /= F.q();
        }
        for (int i = 0; i < degree; ++i) cs[i] = F.from_index(odo[i]);
        SkewPoly g(F, twist, cs);
        if (right_divides(g, modulus)) out.push_back(g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text formats.
//
// Coefficient-string convention (used by the bundled catalog): ascending
// coefficients, one token each; a bare digit is a single coefficient and a
// parenthesized expression is a single coefficient. "(12)(2t+4)(5t)01" means
// 12 + (2t+4)x + 5t x^2 + 0 x^3 + x^4.
//
// Display convention: descending powers with every multi-character
// coefficient (including constants) parenthesized, e.g.
// "x^2 + (2t+3)x + (3t+3)". Both round-trip with their parsers.
// ---------------------------------------------------------------------------

inline std::string to_coeff_string(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        std::string c = to_string(f.coeff(i));
        if (c.size() == 1)
            out += c;
        else
            out += "(" + c + ")";
    }
    return out;
}

inline SkewPoly parse_coeff_string(const Field& F, int twist, std::string_view text) {
    std::vector<FieldElement> cs;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '(') {
            size_t j = text.find(')', i);
            if (j == std::string_view::npos)
                throw std::invalid_argument("unbalanced parenthesis in coefficient string");
            cs.push_back(F.parse(text.substr(i + 1, j - i - 1)));
            i = j + 1;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            cs.push_back(F.from_int(ch - '0'));
            ++i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + ch + "' in coefficient string");
        }
    }
    if (cs.empty()) throw std::invalid_argument("empty coefficient string");
    return SkewPoly(F, twist, std::move(cs));
}

inline std::string to_display_string(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        std::string xs = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (i == 0) {
            out += cs.size() == 1 ? cs : "(" + cs + ")";
        } else if (c.is_one()) {
            out += xs;
        } else {
            out += (cs.size() == 1 ? cs : "(" + cs + ")") + xs;
        }
    }
    return out.empty() ? "0" : out;
}

inline SkewPoly parse_display(const Field& F, int twist, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    // split into signed terms at depth 0
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1, depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty()) {
            terms.emplace_back(sign, cur);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
        } else if ((ch == '+' || ch == '-') && depth == 0) {
            sign = ch == '-' ? -sign : sign;
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) terms.emplace_back(sign, cur);
    std::vector<FieldElement> cs;
    auto ensure = [&](int e) {
        while (static_cast<int>(cs.size()) <= e) cs.push_back(F.zero());
    };
    for (auto& [sg, t] : terms) {
        size_t xpos = t.rfind('x');
        std::string coeff_part, exp_part;
        int e = 0;
        if (xpos != std::string::npos && (xpos + 1 == t.size() || t[xpos + 1] == '^')) {
            coeff_part = t.substr(0, xpos);
            e = 1;
            if (xpos + 1 < t.size()) e = std::stoi(t.substr(xpos + 2));
        } else {
            coeff_part = t;
        }
        if (!coeff_part.empty() && coeff_part.front() == '(' && coeff_part.back() == ')')
            coeff_part = coeff_part.substr(1, coeff_part.size() - 2);
        FieldElement c = coeff_part.empty() ? F.one() : F.parse(coeff_part);
        if (sg < 0) c = -c;
        ensure(e);
        cs[e] = cs[e] + c;
    }
    return SkewPoly(F, twist, std::move(cs));
}

inline std::ostream& operator<<(std::ostream& os, const SkewPoly& f) { return os << to_display_string(f); }

}  // namespace skewcc
