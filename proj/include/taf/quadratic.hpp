#pragma once

// Ideal arithmetic in quadratic orders Z[sqrt d] and Z[(1+sqrt d)/2], with a
// bridge to the finite engine through the quotients D/I.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taf/factorize.hpp"
#include "taf/finite_ring.hpp"

namespace taf {

enum class QuadBasis { Sqrt, Half };

/// Z + Z*beta with beta = sqrt(d) (Sqrt) or (1 + sqrt(d))/2 (Half).
class QuadOrder {
 public:
  /// Throws InputError unless d is square-free, d != 0, 1, and (for Half)
  /// d = 1 mod 4.
  explicit QuadOrder(int64_t d, QuadBasis basis = QuadBasis::Sqrt);

  int64_t d() const { return d_; }
  QuadBasis basis() const { return basis_; }

  // beta^2 = beta_sq[0] + beta_sq[1] * beta
  const std::array<int64_t, 2>& beta_square() const { return beta_sq_; }

 private:
  int64_t d_;
  QuadBasis basis_;
  std::array<int64_t, 2> beta_sq_;
};

struct QuadElement {
  int64_t x = 0, y = 0;  // x + y*beta
  bool operator==(const QuadElement&) const = default;
};

QuadElement quad_add(const QuadElement& u, const QuadElement& v);
QuadElement quad_mul(const QuadOrder& D, const QuadElement& u, const QuadElement& v);

/// Nonzero ideal with Z-basis {a, b + c*beta}; a, c >= 1, 0 <= b < a.
struct QuadIdeal {
  int64_t a = 1, b = 0, c = 1;
  bool operator==(const QuadIdeal&) const = default;
  auto operator<=>(const QuadIdeal&) const = default;
};

QuadIdeal quad_unit_ideal();

/// HNF of the lattice spanned by g and g*beta over all generators. Throws
/// InputError("zero ideal not representable") when every generator is 0.
QuadIdeal ideal_from_gens(const QuadOrder& D, const std::vector<QuadElement>& gens);
QuadIdeal ideal_mul(const QuadOrder& D, const QuadIdeal& i, const QuadIdeal& j);
int64_t ideal_norm(const QuadIdeal& i);
bool contains(const QuadIdeal& i, const QuadElement& x);
bool subset(const QuadIdeal& i, const QuadIdeal& j);
bool is_proper(const QuadIdeal& i);

/// The representative x + y*beta with 0 <= y < c and 0 <= x < a.
QuadElement reduce(const QuadIdeal& i, const QuadElement& e);

/// D/I as a finite ring with the reduction map.
struct QuadQuotient {
  QuadIdeal ideal;
  LatticeRing lattice;

  const FiniteRing& ring() const { return lattice.ring; }
  Elem image(const QuadElement& e) const { return lattice.image({e.x, e.y}); }
  /// Canonical representative in D of a residue.
  QuadElement lift(Elem x) const;
  /// The ideal of D containing I whose image is `j`.
  QuadIdeal preimage(const FinIdeal& j) const;
};

/// Throws LimitExceeded when norm(I) is beyond the enumeration guard.
QuadQuotient quotient_finite(const QuadOrder& D, const QuadIdeal& i, const Limits& limits = {});

struct QuadTAWitness {
  QuadElement a, b, c;
};

struct QuadTAResult {
  bool is_ta = false;
  std::optional<QuadTAWitness> witness;
};

/// TA status of I via the zero ideal of D/I; witnesses are canonical
/// representatives. Throws InputError for I = D.
QuadTAResult ta_check_quad(const QuadOrder& D, const QuadIdeal& i, const Limits& limits = {});

bool verify_quad_witness(const QuadOrder& D, const QuadIdeal& i, const QuadTAWitness& w);

struct QuadFactorization {
  std::vector<QuadIdeal> factors;
};

/// Ideals J with I inside J inside D, in canonical order of their images in D/I.
std::vector<QuadIdeal> ideals_above_quad(const QuadOrder& D, const QuadIdeal& i, const Limits& limits = {});

/// Search over the ideals above I with products taken exactly in D.
std::optional<QuadFactorization> ta_factorization_quad(const QuadOrder& D, const QuadIdeal& i,
                                                       const Limits& limits = {}, bool shortest = false);

/// Re-multiplies exactly in D and re-checks every factor is proper and TA.
bool verify_quad_factorization(const QuadOrder& D, const QuadIdeal& i, const QuadFactorization& f,
                               const Limits& limits = {});

std::vector<QuadIdeal> min_primes_quad(const QuadOrder& D, const QuadIdeal& i, const Limits& limits = {});

// ---------------------------------------------------------------- classification

enum class QuadVerdict { TAF, NotTAF };

/// TAF branch: D'/M is a field for M = (2, 1+sqrt d) in the maximal order,
/// checked once through X^2 + X + (1-d)/4 over Z/2 and once through the
/// quotient of D'. Not-TAF branch: sqrt d -> 1+x is a surjective
/// homomorphism from Z[sqrt d] onto T = Z/8[x]/(x^2, 2x), which is not TAF.
struct QuadClassification {
  int64_t d = 0;
  QuadVerdict verdict = QuadVerdict::NotTAF;
  // TAF branch
  int64_t residue_constant = 0;  // (1-d)/4
  bool field_by_polynomial = false;
  bool field_by_quotient = false;
  // not-TAF branch
  bool homomorphism_well_defined = false;
  bool homomorphism_surjective = false;
  std::optional<NonTAFCertificate> target_certificate;
};

/// Requires d square-free, d != 0, 1, d = 1 mod 4; otherwise InputError
/// ("outside the d = 1 mod 4 scope").
QuadClassification classify_quadratic_order(int64_t d);

/// Re-derives every check recorded in the classification.
bool verify_classification(const QuadClassification& c);

const char* to_string(QuadVerdict v);

/// The ring T = Z/8[x]/(x^2, 2x) used by the not-TAF branch.
const FiniteRing& non_taf_target();

// ---------------------------------------------------------------- text

/// Parses "3+w", "2*w - 1", "sqrt", "5". `w` and `sqrt` name beta.
QuadElement parse_quad_element(std::string_view text);
std::vector<QuadElement> parse_quad_elements(std::string_view text);
std::string format(const QuadElement& e);
/// "(a, b+c*w)" form, or "(a)" when the ideal is principal over Z.
std::string format(const QuadIdeal& i);

}  // namespace taf
