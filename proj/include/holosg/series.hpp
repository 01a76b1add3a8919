#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace holosg {

using cplx = std::complex<double>;

// Taylor coefficients a_0..a_N about 0, truncated at a fixed degree N.
// All arithmetic keeps the degree of the left operand and never reads past
// it; mixed-degree binary operations throw DegreeMismatch.
class SeriesFn {
public:
    /// Zero series of degree n.
    explicit SeriesFn(std::size_t degree = 0) : coeffs_(degree + 1, cplx(0.0)) {}
    /// Degree is coeffs.size() - 1; an empty list is rejected.
    explicit SeriesFn(std::vector<cplx> coeffs);

    static SeriesFn constant(cplx c, std::size_t degree);
    /// z, or c + z when a center is given.
    static SeriesFn identity(std::size_t degree, cplx center = 0.0);
    static SeriesFn monomial(std::size_t k, std::size_t degree);

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx operator[](std::size_t k) const { return coeffs_[k]; }
    cplx& operator[](std::size_t k) { return coeffs_[k]; }

    /// Same coefficients up to min(N, new degree), zero-padded.
    SeriesFn resized(std::size_t degree) const;

    /// Value of the truncated polynomial at z (Horner).
    cplx evaluate(cplx z) const;

    /// Coefficients (k+1) a_{k+1}; degree is kept, top coefficient becomes 0.
    SeriesFn derivative() const;

    SeriesFn& operator+=(const SeriesFn& rhs);
    SeriesFn& operator-=(const SeriesFn& rhs);
    SeriesFn& operator*=(cplx s);

    friend SeriesFn operator+(SeriesFn a, const SeriesFn& b) { return a += b; }
    friend SeriesFn operator-(SeriesFn a, const SeriesFn& b) { return a -= b; }
    friend SeriesFn operator*(SeriesFn a, cplx s) { return a *= s; }
    friend SeriesFn operator*(cplx s, SeriesFn a) { return a *= s; }
    friend SeriesFn operator-(SeriesFn a) { return a *= -1.0; }

    /// Truncated Cauchy product.
    friend SeriesFn operator*(const SeriesFn& a, const SeriesFn& b);

    /// Truncated quotient a / b; throws PoleError if |b_0| is below the pole threshold.
    friend SeriesFn operator/(const SeriesFn& a, const SeriesFn& b);

    bool operator==(const SeriesFn&) const = default;

private:
    std::vector<cplx> coeffs_;
};

/// exp of a series, via the recurrence n e_n = sum_k k s_k e_{n-k}.
SeriesFn exp(const SeriesFn& s);

/// Coefficients of f∘g truncated to degree N (Horner with truncated products).
/// No convergence check is made when g has a nonzero constant term: the
/// result is then only the truncation-consistent value.
SeriesFn series_compose(const SeriesFn& f, const SeriesFn& g);

/// Largest coefficient-wise modulus of a - b; degrees must match.
double max_abs_diff(const SeriesFn& a, const SeriesFn& b);

} // namespace holosg
