#pragma once

#include <divcalc/errors.hpp>
#include <divcalc/rational.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace divcalc {

/// A divisor class in a fixed lattice basis, with exact rational coordinates.
/// Integral classes are DivisorClass values whose coordinates happen to be
/// integers; call is_integral() where integrality is a contract.
class DivisorClass {
  public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rat> coords) : coords_(std::move(coords)) {}

    static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Rat>(rank)); }

    static DivisorClass from_ints(const std::vector<long long>& v) {
        std::vector<Rat> c(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
        return DivisorClass(std::move(c));
    }

    std::size_t rank() const { return coords_.size(); }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_integral() const {
        for (const auto& c : coords_)
            if (!is_integer(c)) return false;
        return true;
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r = a;
        for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r = a;
        for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
        return r;
    }
    friend DivisorClass operator*(const Rat& s, const DivisorClass& a) {
        DivisorClass r = a;
        for (auto& c : r.coords_) c *= s;
        return r;
    }
    DivisorClass operator-() const { return Rat(-1) * *this; }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coords_ == b.coords_;
    }
    /// Lexicographic coordinate order; used for deterministic witness choice.
    friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
        return a.coords_ < b.coords_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ", ";
            os << coords_[i].str();
        }
        os << ")";
        return os.str();
    }

  private:
    std::vector<Rat> coords_;
};

/// Outcome of checking a symmetric matrix for signature (1, n-1).
struct SignatureCheck {
    enum class Status { ok, asymmetric, degenerate, wrong_signature };
    Status status = Status::ok;
    int positives = 0, negatives = 0, zeros = 0;
    std::string description;  // human-readable violation detail
    bool ok() const { return status == Status::ok; }
};

namespace detail {

/// Diagonalizes a symmetric rational matrix by congruence and counts the
/// diagonal signs (Sylvester's law makes the counts well defined).
inline void count_signature(std::vector<std::vector<Rat>> a, int& pos, int& neg, int& zero) {
    const std::size_t n = a.size();
    pos = neg = zero = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_j = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (a[j][j] != 0) { swap_j = j; break; }
            if (swap_j < n) {
                std::swap(a[k], a[swap_j]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][swap_j]);
            } else {
                std::size_t mix_j = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (a[k][j] != 0) { mix_j = j; break; }
                if (mix_j == n) {
                    ++zero;  // row is zero on the remaining block
                    continue;
                }
                // No nonzero diagonal available: fold row/col mix_j into k,
                // making a[k][k] = 2 a[k][mix_j] != 0.
                for (std::size_t i = 0; i < n; ++i) a[k][i] += a[mix_j][i];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][mix_j];
            }
        }
        const Rat pivot = a[k][k];
        if (pivot > 0) ++pos; else ++neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rat f = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) {  // symmetric column update
            if (a[k][i] == 0) continue;
            const Rat f = a[k][i] / pivot;
            for (std::size_t j = k; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
}

}  // namespace detail

/// Checks that a square integer matrix is symmetric, nondegenerate and of
/// signature (1, n-1). Each failure mode is reported distinctly.
inline SignatureCheck validate_signature(const std::vector<std::vector<Int>>& q) {
    SignatureCheck r;
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i].size() != n) {
            r.status = SignatureCheck::Status::asymmetric;
            r.description = "matrix is not square";
            return r;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (q[i][j] != q[j][i]) {
                r.status = SignatureCheck::Status::asymmetric;
                r.description = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") differs from its transpose";
                return r;
            }
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = q[i][j];
    detail::count_signature(std::move(a), r.positives, r.negatives, r.zeros);
    if (r.zeros > 0) {
        r.status = SignatureCheck::Status::degenerate;
        r.description = "form is degenerate (radical of dimension " + std::to_string(r.zeros) + ")";
        return r;
    }
    if (r.positives != 1) {
        r.status = SignatureCheck::Status::wrong_signature;
        r.description = "signature (" + std::to_string(r.positives) + "," +
                        std::to_string(r.negatives) + ")";
        return r;
    }
    return r;
}

/// Symmetric integer bilinear form of signature (1, rank-1); the intersection
/// pairing on the Neron-Severi lattice. Signature is enforced at construction.
class IntersectionForm {
  public:
    static IntersectionForm create(std::vector<std::vector<Int>> q) {
        const SignatureCheck check = validate_signature(q);
        if (!check.ok()) throw SignatureViolation(check.description);
        return IntersectionForm(std::move(q));
    }

    std::size_t rank() const { return q_.size(); }
    const Int& entry(std::size_t i, std::size_t j) const { return q_[i][j]; }
    const std::vector<std::vector<Int>>& matrix() const { return q_; }

    /// The intersection number a . b = a^T Q b; symmetric and bilinear.
    Rat pair(const DivisorClass& a, const DivisorClass& b) const {
        if (a.rank() != rank()) throw DimensionMismatch(rank(), a.rank());
        if (b.rank() != rank()) throw DimensionMismatch(rank(), b.rank());
        Rat total = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            Rat row = 0;
            for (std::size_t j = 0; j < rank(); ++j) {
                if (b[j] == 0) continue;
                row += Rat(q_[i][j]) * b[j];
            }
            total += a[i] * row;
        }
        return total;
    }

    friend bool operator==(const IntersectionForm& a, const IntersectionForm& b) {
        return a.q_ == b.q_;
    }

  private:
    explicit IntersectionForm(std::vector<std::vector<Int>> q) : q_(std::move(q)) {}
    std::vector<std::vector<Int>> q_;
};

namespace detail {

/// LDL^T-style elimination for a symmetric rational matrix. Returns the pivot
/// list; negative definiteness is equivalent to all pivots < 0. On failure
/// `bad_minor` receives the 1-based index of the first leading principal
/// minor breaking the alternation, together with its determinant.
struct DefinitenessScan {
    bool negative_definite;
    std::size_t bad_minor = 0;
    Rat bad_minor_det;
};

inline DefinitenessScan scan_negative_definite(std::vector<std::vector<Rat>> g) {
    const std::size_t n = g.size();
    DefinitenessScan out{true};
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Rat pivot = g[k][k];
        det *= pivot;
        if (pivot >= 0) {
            out.negative_definite = false;
            out.bad_minor = k + 1;
            out.bad_minor_det = det;
            return out;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (g[i][k] == 0) continue;
            const Rat f = g[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return out;
}

}  // namespace detail

/// Gram matrix of a list of classes under the form.
inline std::vector<std::vector<Rat>> gram_matrix(const std::vector<DivisorClass>& support,
                                                 const IntersectionForm& form) {
    const std::size_t k = support.size();
    std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) g[i][j] = g[j][i] = form.pair(support[i], support[j]);
    return g;
}

/// True iff the Gram matrix of `support` is negative definite. The empty
/// support is negative definite by convention.
inline bool is_negative_definite(const std::vector<DivisorClass>& support,
                                 const IntersectionForm& form) {
    return detail::scan_negative_definite(gram_matrix(support, form)).negative_definite;
}

/// Solves sum_j a_j (C_j . C_i) = target_i on a negative definite support;
/// the solution is unique and exact. Throws GramNotNegativeDefinite with the
/// offending principal minor otherwise.
inline std::vector<Rat> solve_gram(const std::vector<DivisorClass>& support,
                                   const std::vector<Rat>& targets,
                                   const IntersectionForm& form) {
    const std::size_t k = support.size();
    if (targets.size() != k) throw DimensionMismatch(k, targets.size());
    auto g = gram_matrix(support, form);
    {
        const auto scan = detail::scan_negative_definite(g);
        if (!scan.negative_definite)
            throw GramNotNegativeDefinite(scan.bad_minor, scan.bad_minor_det.str());
    }
    // Gaussian elimination with exact rationals; pivots are nonzero because
    // the matrix is definite.
    std::vector<Rat> rhs = targets;
    for (std::size_t col = 0; col < k; ++col) {
        const Rat pivot = g[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (g[row][col] == 0) continue;
            const Rat f = g[row][col] / pivot;
            for (std::size_t j = col; j < k; ++j) g[row][j] -= f * g[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(k);
    for (std::size_t i = k; i-- > 0;) {
        Rat acc = rhs[i];
        for (std::size_t j = i + 1; j < k; ++j) acc -= g[i][j] * x[j];
        x[i] = acc / g[i][i];
    }
    return x;
}

}  // namespace divcalc
