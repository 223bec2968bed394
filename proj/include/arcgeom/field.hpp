#pragma once

#include <cstdint>
#include <vector>

#include "arcgeom/errors.hpp"

namespace arcgeom {

/// Element code in 0..q-1.  The base-p digits of a code, least significant
/// first, are the coefficients (c0, ..., c_{e-1}) of the element in the
/// polynomial basis.  Code 0 is the additive identity, code 1 the
/// multiplicative identity.
using felt = std::uint16_t;

/// Exact arithmetic in GF(p^e) for prime p, q = p^e <= 2^16.
///
/// Multiplication and inversion go through log/antilog tables built from a
/// generator of the (cyclic) multiplicative group; direct polynomial
/// arithmetic is used only while the tables are constructed.  A Field is
/// immutable after construction and safe to share across threads.
class Field {
 public:
  /// Builds GF(p^e) with the monic irreducible degree-e modulus whose
  /// coefficient vector (c0, ..., c_{e-1}) has the smallest base-p integer
  /// encoding.  Deterministic.
  static Field make(std::uint32_t p, std::uint32_t e);

  /// Builds GF(p^e) with an explicit modulus, given as the coefficient
  /// vector (c0, ..., ce) with ce = 1.  Irreducibility is verified by an
  /// exhaustive factor scan; a reducible or malformed modulus is rejected.
  static Field make(std::uint32_t p, std::uint32_t e, const std::vector<std::uint32_t>& modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  felt add(felt a, felt b) const;
  felt sub(felt a, felt b) const;
  felt neg(felt a) const;
  felt mul(felt a, felt b) const;
  felt div(felt a, felt b) const;  // throws on zero divisor
  felt inv(felt a) const;          // throws on zero
  felt pow(felt a, std::uint64_t n) const;

  /// Order of a in the multiplicative group; throws on zero.
  std::uint64_t element_order(felt a) const;

  /// A fixed generator of the multiplicative group (1 when q = 2).
  felt generator() const { return generator_; }

  /// Same field contents: p, e and modulus all agree.
  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  Field() = default;
  void init(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
  void build_tables();
  felt mul_direct(felt a, felt b) const;  // polynomial route, table-free
  felt pow_direct(felt a, std::uint64_t n) const;

  // Rejects codes that do not belong to this field (e.g. elements of a
  // larger field passed by mistake).
  void check(felt a) const {
    if (a >= q_) throw InputError("element code " + std::to_string(a) + " outside GF(" + std::to_string(q_) + ")");
  }

  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;  // length e+1, monic
  std::vector<felt> log_;               // q entries; log_[0] unused
  std::vector<felt> exp_;               // 2(q-1) entries to skip a mod in mul
  std::vector<felt> neg_tab_;           // q entries (identity map when p = 2)
  std::vector<felt> add_tab_;           // q*q entries for odd p with q <= 512
  felt generator_ = 1;
};

}  // namespace arcgeom
