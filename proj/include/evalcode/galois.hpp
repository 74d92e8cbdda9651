#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace evalcode {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// GF(p^r). Elements are integers in [0, q): the base-p digits of an element
/// are the coefficients of its polynomial representative, lowest degree first.
class GaloisField {
 public:
  using Elem = std::uint64_t;

  /// Cached: repeated calls with the same (p, r) return the same object.
  static FieldPtr make(std::uint64_t p, unsigned r);

  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint64_t q() const { return q_; }
  /// Monic modulus, ascending degree, length r+1. For r = 1 this is x.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (r_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b, false);
  }
  Elem neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    if (r_ == 1) return p_ - a;
    if (!neg_table_.empty()) return neg_table_[a];
    return add_digits(0, a, true);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
      std::uint64_t s = log_[a] + log_[b];
      if (s >= q_ - 1) s -= q_ - 1;
      return exp_[s];
    }
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// x^(p^k)
  Elem frobenius(Elem x, unsigned k) const;
  /// Absolute trace down to GF(p).
  Elem trace(Elem x) const { return relative_trace(x, 1); }
  /// Trace down to the subfield GF(p^s); s must divide r.
  Elem relative_trace(Elem x, unsigned s) const;
  bool in_subfield(Elem x, unsigned s) const { return frobenius(x, s) == x; }

  Elem primitive() const { return primitive_; }
  std::uint64_t order(Elem x) const;
  /// Discrete log base primitive(); x must be nonzero.
  std::uint64_t log(Elem x) const;

  /// The n-th roots of unity as g^(k(q-1)/n), k = 0..n-1.
  std::vector<Elem> roots_of_unity(std::uint64_t n) const;

  std::vector<std::uint64_t> coefficients(Elem x) const;
  Elem from_coefficients(std::span<const std::uint64_t> c) const;
  std::string to_string(Elem x) const;

  bool same_as(const GaloisField& o) const {
    return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
  }

  GaloisField(std::uint64_t p, unsigned r);

 private:
  Elem add_digits(Elem a, Elem b, bool negate_b) const;
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint64_t p_;
  unsigned r_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> factors_;  // distinct primes dividing q-1
  Elem primitive_ = 1;
  std::vector<std::uint32_t> exp_, log_;
  std::vector<std::uint32_t> add_table_, neg_table_;
};

FieldPtr make_field(std::uint64_t p, unsigned r);
/// Field of order q; q must be a prime power.
FieldPtr make_field_of_order(std::uint64_t q);

/// Value-semantics wrapper used at API boundaries and in tests.
class FieldElement {
 public:
  using Elem = GaloisField::Elem;
  FieldElement(FieldPtr f, Elem v);
  static FieldElement from_coefficients(FieldPtr f, std::span<const std::uint64_t> c);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<std::uint64_t> coefficients() const { return field_->coefficients(v_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  Elem v_;
};

FieldElement trace_to_prime(const FieldElement& x);
FieldElement primitive_element(const FieldPtr& f);
std::vector<FieldElement> subgroup_roots(const FieldPtr& f, std::uint64_t n);

/// Embedding of GF(p^s) into GF(p^r) (s | r), fixed by sending the subfield's
/// generator x to the least root of its modulus in the big field.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr big, unsigned s);
  const FieldPtr& big() const { return big_; }
  const FieldPtr& sub() const { return sub_; }
  GaloisField::Elem up(GaloisField::Elem x) const { return up_[x]; }
  /// Throws if y is not in the image.
  GaloisField::Elem down(GaloisField::Elem y) const;

 private:
  FieldPtr big_, sub_;
  std::vector<GaloisField::Elem> up_;
  std::vector<std::uint32_t> down_;  // only filled when big q <= 2^22
};

// number theory helpers shared by several modules
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Returns (p, r) with q = p^r, or throws.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

}  // namespace evalcode
