#pragma once

// Linear codes over F_{p^m} and over R, held as generator matrices with the
// parity-check matrix derived once at construction. Codewords are rows and
// duality uses the Euclidean inner product, so c in C iff c H^T = 0.
//
// An R-linear code is stored through its CRT components (A0, A1, A2); all
// ring-level questions are answered componentwise. The eta-weighted stacked
// generator over R exists only as a display form.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"
#include "skew_poly.hpp"

namespace skewcc {

class LinearCode {
   public:
    // Generator rows must be linearly independent; the parity check is the
    // deterministic nullspace basis.
    static LinearCode from_generator(const Matrix& gen) {
        if (gen.rank() != gen.rows()) throw std::invalid_argument("generator matrix does not have full row rank");
        return LinearCode(gen, gen.nullspace_basis());
    }

    // Reduce an arbitrary spanning set to a canonical basis first.
    static LinearCode from_span(const Matrix& rows) {
        return from_generator(rows.row_space_canonical());
    }

    // Trusted constructor for callers that already hold both matrices (e.g.
    // a Gray image paired with the Gray image of the component duals). Cheap
    // orthogonality and dimension checks only; rank is the caller's contract.
    static LinearCode from_generator_and_parity(const Matrix& gen, const Matrix& par) {
        if (gen.cols() != par.cols()) throw std::invalid_argument("generator/parity length mismatch");
        if (gen.rows() + par.rows() != gen.cols())
            throw std::invalid_argument("generator/parity dimensions do not add to n");
        if (!(gen * par.transposed()).is_zero())
            throw std::invalid_argument("generator and parity check are not orthogonal");
        return LinearCode(gen, par);
    }

    const Field& field() const { return gen_.field(); }
    int n() const { return static_cast<int>(gen_.cols()); }
    int k() const { return static_cast<int>(gen_.rows()); }
    const Matrix& generator() const { return gen_; }
    const Matrix& parity_check() const { return par_; }

    std::vector<FieldElement> encode(const std::vector<FieldElement>& message) const {
        return message * gen_;
    }

    bool contains_word(const std::vector<FieldElement>& w) const {
        if (static_cast<int>(w.size()) != n()) throw std::invalid_argument("word length mismatch");
        const Field& F = field();
        for (size_t r = 0; r < par_.rows(); ++r) {
            FieldElement s = F.zero();
            for (size_t j = 0; j < par_.cols(); ++j) s = s + w[j] * par_.at(r, j);
            if (!s.is_zero()) return false;
        }
        return true;
    }

    LinearCode dual() const { return LinearCode(par_, gen_); }

    bool same_code(const LinearCode& other) const {
        if (n() != other.n()) return false;
        return gen_.row_space_canonical() == other.gen_.row_space_canonical();
    }

   private:
    LinearCode(Matrix gen, Matrix par) : gen_(std::move(gen)), par_(std::move(par)) {}

    Matrix gen_;
    Matrix par_;
};

// True iff every codeword of inner lies in outer.
inline bool contains(const LinearCode& outer, const LinearCode& inner) {
    if (outer.n() != inner.n()) throw std::invalid_argument("code length mismatch");
    return row_space_contains(outer.generator(), inner.generator());
}

// The skew constacyclic shift tau(c) = (sigma(delta c_{n-1}), sigma(c_0),
// ..., sigma(c_{n-2})). Closure of a code under this map is what "skew
// (sigma, delta)-constacyclic" means.
inline std::vector<FieldElement> tau_shift(const std::vector<FieldElement>& word, const FieldElement& delta,
                                           int twist) {
    if (word.empty()) return word;
    const Field& F = delta.field();
    std::vector<FieldElement> out(word.size(), F.zero());
    out[0] = F.frobenius(delta * word.back(), twist);
    for (size_t i = 1; i < word.size(); ++i) out[i] = F.frobenius(word[i - 1], twist);
    return out;
}

// Ring version of the shift, with sigma acting componentwise.
inline std::vector<RingElement> tau_shift(const std::vector<RingElement>& word, const RingElement& delta,
                                          int twist) {
    if (word.empty()) return word;
    std::vector<RingElement> out;
    out.reserve(word.size());
    out.push_back(sigma(delta * word.back(), twist));
    for (size_t i = 0; i + 1 < word.size(); ++i) out.push_back(sigma(word[i], twist));
    return out;
}

// tau is additive and sigma-semilinear, so a code is closed under it iff
// every generator row maps back into the code.
inline bool closed_under_tau(const LinearCode& code, const FieldElement& lambda, int twist) {
    for (size_t i = 0; i < code.generator().rows(); ++i)
        if (!code.contains_word(tau_shift(code.generator().row(i), lambda, twist))) return false;
    return true;
}

// The skew (Theta^twist, lambda)-constacyclic code generated by a monic
// right divisor f of x^n - lambda. Row j of the generator is the coefficient
// vector of x^j * f, i.e. the Theta^j-twisted coefficients of f shifted j
// places; the staircase of leading ones makes the rows independent by
// construction.
inline LinearCode from_skew_generator(const SkewPoly& f, int n, const FieldElement& lambda, int twist) {
    const Field& F = f.field();
    if (!f.is_monic()) throw std::invalid_argument("generator polynomial must be monic");
    if (f.degree() > n) throw std::invalid_argument("generator degree exceeds code length");
    if (!is_central_modulus(n, lambda, twist))
        throw std::invalid_argument("x^n - lambda is not central: sigma must fix lambda and ord(sigma) | n");
    SkewPoly modulus = SkewPoly::x_pow_minus(F, twist, n, lambda);
    if (!right_divides(f, modulus))
        throw std::invalid_argument("generator polynomial is not a right divisor of x^n - lambda");
    int k = n - f.degree();
    Matrix gen(F, k, n);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i <= f.degree(); ++i) gen.at(j, i + j) = F.frobenius(f.coeff(i), j * twist);
    return LinearCode::from_generator(gen);
}

// An R-linear code eta0 A0 + eta1 A1 + eta2 A2 via its CRT components,
// optionally carrying the generator polynomials it was built from.
struct RCode {
    std::array<LinearCode, 3> components;
    std::optional<std::array<SkewPoly, 3>> generators;
    std::optional<std::array<FieldElement, 3>> lambdas;

    const Field& field() const { return components[0].field(); }
    int n() const { return components[0].n(); }
    int dimension_sum() const { return components[0].k() + components[1].k() + components[2].k(); }
    // |C| = q^(k0+k1+k2); returned as the exponent of p.
    int log_p_cardinality() const { return field().m() * dimension_sum(); }
};

inline RCode assemble_r_code(LinearCode a0, LinearCode a1, LinearCode a2) {
    if (a0.n() != a1.n() || a0.n() != a2.n()) throw std::invalid_argument("component length mismatch");
    return RCode{{std::move(a0), std::move(a1), std::move(a2)}, std::nullopt, std::nullopt};
}

inline RCode r_dual(const RCode& code) {
    return RCode{{code.components[0].dual(), code.components[1].dual(), code.components[2].dual()},
                 std::nullopt,
                 std::nullopt};
}

// Membership over R: CRT coordinates of the word must land componentwise in
// A0, A1, A2.
inline bool r_code_contains(const RCode& code, const std::vector<RingElement>& word) {
    if (static_cast<int>(word.size()) != code.n()) throw std::invalid_argument("word length mismatch");
    const Field& F = code.field();
    std::array<std::vector<FieldElement>, 3> comps;
    for (auto& c : comps) c.assign(word.size(), F.zero());
    for (size_t i = 0; i < word.size(); ++i) {
        CrtCoords crt = to_crt(word[i]);
        comps[0][i] = crt.beta0;
        comps[1][i] = crt.beta1;
        comps[2][i] = crt.beta2;
    }
    for (int l = 0; l < 3; ++l)
        if (!code.components[l].contains_word(comps[l])) return false;
    return true;
}

// Display form: the stacked eta-weighted generator rows over R.
inline std::vector<std::vector<RingElement>> r_generator_rows(const RCode& code) {
    const Field& F = code.field();
    auto eta = idempotents(F);
    std::vector<std::vector<RingElement>> rows;
    for (int l = 0; l < 3; ++l) {
        const Matrix& gen = code.components[l].generator();
        for (size_t i = 0; i < gen.rows(); ++i) {
            std::vector<RingElement> row;
            row.reserve(gen.cols());
            for (size_t j = 0; j < gen.cols(); ++j) row.push_back(gen.at(i, j) * eta[l]);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// Closure of the assembled R-code under tau_{sigma,delta}, checked on the
// stacked generator rows with ring arithmetic (not through the component
// shortcut), so it exercises the CRT decomposition independently.
inline bool r_closed_under_tau(const RCode& code, const RingElement& delta, int twist) {
    for (const auto& row : r_generator_rows(code))
        if (!r_code_contains(code, tau_shift(row, delta, twist))) return false;
    return true;
}

}  // namespace skewcc
