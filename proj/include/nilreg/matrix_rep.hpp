#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nilreg/element.hpp"
#include "nilreg/linalg.hpp"
#include "nilreg/report.hpp"

namespace nilreg {

/// R = F<a, b | a^(n-1) = 0>, the entry ring for the model of S with x^n = 0.
RewriteSystem entry_ring(std::uint32_t n);

/// 2x2 matrix over R. Indices are 0-based.
class MatrixElement {
  public:
    MatrixElement(RewriteSystem ring, Field field);  // zero matrix

    static MatrixElement identity(RewriteSystem ring, Field field);
    // e_ij * r
    static MatrixElement unit(std::size_t i, std::size_t j, const AlgebraElement& r);

    const RewriteSystem& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return field_; }

    AlgebraElement& at(std::size_t i, std::size_t j) { return entries_[2 * i + j]; }
    const AlgebraElement& at(std::size_t i, std::size_t j) const { return entries_[2 * i + j]; }

    bool is_zero() const;
    std::size_t degree() const;

    MatrixElement& operator+=(const MatrixElement& o);
    MatrixElement& operator-=(const MatrixElement& o);
    MatrixElement scaled(const Scalar& c) const;

    friend MatrixElement operator+(MatrixElement p, const MatrixElement& r) { return p += r; }
    friend MatrixElement operator-(MatrixElement p, const MatrixElement& r) { return p -= r; }
    friend MatrixElement operator*(const MatrixElement& p, const MatrixElement& r);
    friend bool operator==(const MatrixElement& p, const MatrixElement& r);

    // "[[e11, e12], [e21, e22]]"
    std::string to_string() const;
    nlohmann::json to_json() const;
    static MatrixElement from_json(const nlohmann::json& j, RewriteSystem ring, Field field);

  private:
    RewriteSystem ring_;
    Field field_;
    std::vector<AlgebraElement> entries_;
};

MatrixElement parse_matrix(std::string_view text, RewriteSystem ring, Field field);

/// X = [[a, 0], [1, 0]] and Q = [[b, 1 - ba], [0, 0]].
MatrixElement generator_X(RewriteSystem ring, Field field);
MatrixElement generator_Q(RewriteSystem ring, Field field);

class DegreeBoundExceeded : public std::runtime_error {
  public:
    DegreeBoundExceeded(std::size_t needed, std::size_t cap);
    std::size_t needed() const noexcept { return needed_; }
    std::size_t cap() const noexcept { return cap_; }

  private:
    std::size_t needed_;
    std::size_t cap_;
};

/// Certificates for T = [[R, I], [R, F + I]], I = R(1 - ba).
struct TMembership {
    bool in_T = false;
    std::optional<AlgebraElement> s12;  // entry(0,1) = s12 (1 - ba)
    std::optional<Scalar> c22;          // entry(1,1) = c22 + s22 (1 - ba)
    std::optional<AlgebraElement> s22;
    std::string reason;  // which entry failed, when not in T

    nlohmann::json to_json() const;
};

/// Solves s (1 - ba) = entry (plus a free constant when `allow_constant`)
/// with s supported on R-basis words of length <= deg(entry) + 2.
/// Throws DegreeBoundExceeded when that bound exceeds max_degree.
struct IdealSolution {
    Scalar constant;
    AlgebraElement s;
};
std::optional<IdealSolution> solve_in_ideal(const AlgebraElement& entry, bool allow_constant,
                                            std::size_t max_degree = 12);

TMembership membership_T(const MatrixElement& m, std::size_t max_degree = 12);

/// x -> X, q -> Q extended to S (x^n = 0) with values in M2(R), m = n - 1.
class PhiMap {
  public:
    PhiMap(std::uint32_t n, Field field);

    const RewriteSystem& source() const noexcept { return source_; }
    const RewriteSystem& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return field_; }

    // Product of generator images; w need not be in normal form.
    MatrixElement of_word(const Word& w) const;
    MatrixElement operator()(const AlgebraElement& e) const;

  private:
    const MatrixElement& generator_power(Letter l, std::uint32_t e) const;

    RewriteSystem source_;
    RewriteSystem ring_;
    Field field_;
    // powers_[0][k] = X^k, powers_[1][k] = Q^k, filled up to kCachedPowers.
    std::array<std::vector<MatrixElement>, 2> powers_;
};

MatrixElement phi(const AlgebraElement& e);

/// a -> [[0, 0], [1, 0]], b -> [[0, 1], [0, 0]]. Needs a^m = 0 with m >= 2.
ScalarMatrix pi_eval(const AlgebraElement& r);

/// Exact-rank independence of phi-images of all S-basis words of length <=
/// max_len, with corner checks. For n = 2 the kernel is nonzero and the
/// report fails with a kernel element as witness.
VerificationReport verify_phi_faithful(std::size_t max_len, const Field& field, std::uint32_t n = 3,
                                       unsigned workers = 1);

/// det pi(1 - ba) = 0, and random C, D never give C pi(1 - ba) D = I.
VerificationReport check_determinant_obstruction(std::uint64_t seed, std::size_t trials = 1000,
                                                 const Field& field = Field::prime(2));

/// n = 2: relations in M2(F[b]) x F, e = 1 - qx - xq + xq^2x central
/// idempotent in S with image (0, 1).
VerificationReport n2_variant_check(const Field& field);

}  // namespace nilreg
