#pragma once

// Exact arithmetic in F_{p^m} for an odd prime p, with the Frobenius
// automorphism and its powers.
//
// A Field is described by (p, m, modulus) where the modulus is a monic
// irreducible polynomial of degree m over F_p, stored as an ascending
// coefficient list. Elements are polynomials in the residue class t of x,
// i.e. ascending coefficient vectors of length m over F_p.
//
// Internally each element is kept as a packed radix-p index
// c0 + c1*p + ... + c_{m-1}*p^{m-1}. The Field precomputes dense
// add/mul/neg/inv/Frobenius tables at construction time from plain integer
// coefficient arithmetic, so element operations are table lookups. The
// tables are direct operation tables, not discrete-log tables. Everything
// is exact integer arithmetic; there is no floating point in this library.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewcc {

class Field;

class FieldElement {
   public:
    FieldElement() : field_(nullptr), idx_(0) {}

    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }
    int index() const { return idx_; }
    const Field& field() const;

    // Ascending coefficient vector of length exactly m, entries in [0, p).
    std::vector<int> coeffs() const;

    FieldElement operator-() const;
    FieldElement inv() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend class Field;

   private:
    FieldElement(const Field* f, int idx) : field_(f), idx_(idx) {}

    const Field* field_;
    uint16_t idx_;
};

class Field {
   public:
    // Fields larger than this would need multi-megabyte operation tables;
    // the library targets small fields (everything shipped uses q <= 169).
    static constexpr int kMaxSize = 1024;

    Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
        if (p_ < 3 || !is_prime(p_)) throw std::invalid_argument("field characteristic must be an odd prime");
        if (m_ < 1) throw std::invalid_argument("extension degree must be >= 1");
        q_ = 1;
        for (int i = 0; i < m_; ++i) {
            q_ *= p_;
            if (q_ > kMaxSize) throw std::invalid_argument("field size p^m exceeds supported bound");
        }
        if (static_cast<int>(modulus_.size()) != m_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree m (ascending coefficients)");
        for (int c : modulus_)
            if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
        if (!is_irreducible(modulus_, p_)) throw std::invalid_argument("modulus is not irreducible over F_p");
        build_tables();
    }

    // Prime field F_p represented with modulus x (t = 0, never used for m = 1).
    explicit Field(int p) : Field(p, 1, {0, 1}) {}

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }

    // Residue class of x; the polynomial generator written t in element syntax.
    FieldElement gen() const {
        if (m_ < 2) throw std::invalid_argument("prime field has no polynomial generator t");
        return FieldElement(this, p_);
    }

    // Embed an integer through the prime subfield (reduced mod p).
    FieldElement from_int(long long v) const {
        long long r = v % p_;
        if (r < 0) r += p_;
        return FieldElement(this, static_cast<int>(r));
    }

    // Element from an ascending coefficient list of length <= m; entries are
    // reduced mod p.
    FieldElement element(const std::vector<int>& coeffs) const {
        if (static_cast<int>(coeffs.size()) > m_)
            throw std::invalid_argument("coefficient list longer than extension degree");
        int idx = 0;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
            int c = coeffs[i] % p_;
            if (c < 0) c += p_;
            idx = idx * p_ + c;
        }
        return FieldElement(this, idx);
    }

    FieldElement from_index(int idx) const {
        if (idx < 0 || idx >= q_) throw std::invalid_argument("element index out of range");
        return FieldElement(this, idx);
    }

    // All q elements, each exactly once, in packed-index order (coefficient
    // tuples ordered with the highest-degree coefficient most significant).
    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> out;
        out.reserve(q_);
        for (int i = 0; i < q_; ++i) out.emplace_back(FieldElement(this, i));
        return out;
    }

    // Multiplicative order of Theta^k, i.e. m / gcd(m, k).
    int automorphism_order(int k) const {
        int r = ((k % m_) + m_) % m_;
        return m_ / std::gcd(m_, r);  // gcd(m, 0) == m, so k = 0 gives order 1
    }

    // Theta^k(a) = a^(p^k), by k applications of the p-th power table.
    FieldElement frobenius(FieldElement a, int k) const {
        check_same(a);
        int r = ((k % m_) + m_) % m_;
        int idx = a.idx_;
        for (int i = 0; i < r; ++i) idx = frob_[idx];
        return FieldElement(this, idx);
    }

    FieldElement pow(FieldElement a, long long e) const {
        check_same(a);
        if (e < 0) throw std::invalid_argument("negative exponent");
        FieldElement acc = one();
        FieldElement base = a;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Parse element syntax: sums of terms c, ct, ct^k (e.g. "4t+1", "12t+11",
    // "t^2", "-2"). Whitespace is ignored; the result is reduced.
    FieldElement parse(std::string_view text) const;

    bool same_params(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    friend class FieldElement;

   private:
    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    // Plain commutative polynomial arithmetic over F_p, used only for setup.
    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& mod, int p) {
        int dm = static_cast<int>(mod.size()) - 1;
        for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
            int c = a[d];
            if (c == 0) continue;
            a[d] = 0;
            for (int i = 0; i < dm; ++i) a[d - dm + i] = ((a[d - dm + i] - c * mod[i]) % p + p) % p;
        }
        a.resize(dm);
        return a;
    }

    static bool divides_poly(const std::vector<int>& g, std::vector<int> f, int p) {
        // monic g; long division remainder check
        int dg = static_cast<int>(g.size()) - 1;
        for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
            int c = f[d];
            if (c == 0) continue;
            for (int i = 0; i <= dg; ++i) f[d - dg + i] = ((f[d - dg + i] - c * g[i]) % p + p) % p;
        }
        for (int i = 0; i < dg && i < static_cast<int>(f.size()); ++i)
            if (f[i] != 0) return false;
        return true;
    }

    // Exhaustive divisor check; fine for the small degrees used here.
    static bool is_irreducible(const std::vector<int>& mod, int p) {
        int m = static_cast<int>(mod.size()) - 1;
        if (m == 1) return true;
        for (int d = 1; 2 * d <= m; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long long packed = 0; packed < count; ++packed) {
                std::vector<int> g(d + 1, 0);
                long long v = packed;
                for (int i = 0; i < d; ++i) {
                    g[i] = static_cast<int>(v % p);
                    v /= p;
                }
                g[d] = 1;
                if (divides_poly(g, mod, p)) return false;
            }
        }
        return true;
    }

    void unpack(int idx, std::vector<int>& out) const {
        out.assign(m_, 0);
        for (int i = 0; i < m_; ++i) {
            out[i] = idx % p_;
            idx /= p_;
        }
    }

    void build_tables() {
        add_.assign(static_cast<size_t>(q_) * q_, 0);
        mul_.assign(static_cast<size_t>(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        frob_.assign(q_, 0);
        std::vector<int> ca, cb, prod;
        for (int a = 0; a < q_; ++a) {
            unpack(a, ca);
            int nidx = 0;
            for (int i = m_ - 1; i >= 0; --i) nidx = nidx * p_ + (p_ - ca[i]) % p_;
            neg_[a] = static_cast<uint16_t>(nidx);
            for (int b = 0; b <= a; ++b) {
                unpack(b, cb);
                int sidx = 0;
                for (int i = m_ - 1; i >= 0; --i) sidx = sidx * p_ + (ca[i] + cb[i]) % p_;
                add_[static_cast<size_t>(a) * q_ + b] = add_[static_cast<size_t>(b) * q_ + a] =
                    static_cast<uint16_t>(sidx);
                prod.assign(2 * m_ - 1, 0);
                for (int i = 0; i < m_; ++i)
                    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
                prod = poly_mod(std::move(prod), modulus_, p_);
                int pidx = 0;
                for (int i = m_ - 1; i >= 0; --i) pidx = pidx * p_ + prod[i];
                mul_[static_cast<size_t>(a) * q_ + b] = mul_[static_cast<size_t>(b) * q_ + a] =
                    static_cast<uint16_t>(pidx);
            }
        }
        for (int a = 1; a < q_; ++a) {
            for (int b = 1; b < q_; ++b) {
                if (mul_[static_cast<size_t>(a) * q_ + b] == 1) {
                    inv_[a] = static_cast<uint16_t>(b);
                    break;
                }
            }
            if (inv_[a] == 0) throw std::logic_error("element without inverse; modulus not irreducible");
        }
        for (int a = 0; a < q_; ++a) {
            int acc = 1;
            for (int e = 0; e < p_; ++e) acc = mul_[static_cast<size_t>(acc) * q_ + a];
            frob_[a] = static_cast<uint16_t>(acc);
        }
    }

    void check_same(const FieldElement& a) const {
        if (a.field_ == this) return;
        if (a.field_ == nullptr || !same_params(*a.field_))
            throw std::invalid_argument("field element belongs to a different field");
    }

    int p_, m_, q_;
    std::vector<int> modulus_;
    std::vector<uint16_t> add_, mul_, neg_, inv_, frob_;

    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
};

inline const Field& FieldElement::field() const {
    if (!field_) throw std::logic_error("default-constructed field element has no field");
    return *field_;
}

inline std::vector<int> FieldElement::coeffs() const {
    const Field& f = field();
    std::vector<int> out(f.m(), 0);
    int idx = idx_;
    for (int i = 0; i < f.m(); ++i) {
        out[i] = idx % f.p();
        idx /= f.p();
    }
    return out;
}

namespace detail {
inline const Field& common_field(const FieldElement& a, const FieldElement& b) {
    const Field& fa = a.field();
    const Field& fb = b.field();
    if (&fa != &fb && !fa.same_params(fb))
        throw std::invalid_argument("field elements belong to different fields");
    return fa;
}
}  // namespace detail

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const Field& f = detail::common_field(a, b);
    return FieldElement(&f, f.add_[static_cast<size_t>(a.idx_) * f.q_ + b.idx_]);
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const Field& f = detail::common_field(a, b);
    return FieldElement(&f, f.add_[static_cast<size_t>(a.idx_) * f.q_ + f.neg_[b.idx_]]);
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const Field& f = detail::common_field(a, b);
    return FieldElement(&f, f.mul_[static_cast<size_t>(a.idx_) * f.q_ + b.idx_]);
}

inline FieldElement FieldElement::operator-() const {
    const Field& f = field();
    return FieldElement(&f, f.neg_[idx_]);
}

inline FieldElement FieldElement::inv() const {
    const Field& f = field();
    if (is_zero()) throw std::invalid_argument("inversion of zero");
    return FieldElement(&f, f.inv_[idx_]);
}

inline bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ == nullptr || b.field_ == nullptr) return a.field_ == b.field_ && a.idx_ == b.idx_;
    detail::common_field(a, b);
    return a.idx_ == b.idx_;
}

inline FieldElement frobenius(const FieldElement& a, int k) { return a.field().frobenius(a, k); }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }

// Canonical element syntax, descending powers of t: "4t+1", "2t", "3t^2+2", "0".
inline std::string to_string(const FieldElement& a) {
    std::vector<int> cs = a.coeffs();
    std::string out;
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
        if (cs[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(cs[i]);
        } else {
            if (cs[i] != 1) out += std::to_string(cs[i]);
            out += 't';
            if (i >= 2) out += '^' + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << to_string(a); }

inline FieldElement Field::parse(std::string_view text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty field element");
    FieldElement val = zero();
    size_t i = 0;
    bool any = false;
    int sign = 1;
    while (i < s.size()) {
        if (s[i] == '+') {
            sign = 1;
            ++i;
            continue;
        }
        if (s[i] == '-') {
            sign = -1;
            ++i;
            continue;
        }
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        bool have_digits = j > i;
        long long c = have_digits ? std::stoll(s.substr(i, j - i)) : 1;
        i = j;
        int e = 0;
        if (i < s.size() && s[i] == 't') {
            e = 1;
            ++i;
            if (i < s.size() && s[i] == '^') {
                size_t k = i + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i + 1) throw std::invalid_argument("malformed exponent in field element '" + s + "'");
                e = std::stoi(s.substr(i + 1, k - i - 1));
                i = k;
            }
        } else if (!have_digits) {
            throw std::invalid_argument("cannot parse field element '" + s + "'");
        }
        FieldElement term = from_int(sign * c);
        if (e > 0) {
            if (m_ < 2) throw std::invalid_argument("generator t is undefined in a prime field");
            term = term * pow(gen(), e);
        }
        val = val + term;
        any = true;
        sign = 1;
    }
    if (!any) throw std::invalid_argument("cannot parse field element '" + s + "'");
    return val;
}

}  // namespace skewcc
