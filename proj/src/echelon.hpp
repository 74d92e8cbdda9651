#pragma once
// Incremental row echelon forms used by the code operations. Rows are kept in
// "leading-term" form: each stored row has a 1 at its pivot and zeros at the
// pivots of rows stored before it, which is enough to reduce any vector by a
// single left-to-right sweep.

#include <bit>
#include <cstdint>
#include <vector>

#include "evalcode/galois.hpp"
#include "evalcode/linear_code.hpp"

namespace evalcode::detail {

class Echelon {
 public:
  Echelon(const GaloisField& f, std::size_t n) : f_(f), n_(n), pivot_row_(n, -1) {
    if (f_.q() <= 4096) {
      small_ = true;
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return n_; }

  /// Reduces v in place; returns the first column where v is nonzero but no
  /// stored row has its pivot, or n if v reduced to zero.
  std::size_t reduce(Word& v) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (v[c] == 0) continue;
      int ri = pivot_row_[c];
      if (ri < 0) return c;
      axpy(v, f_.neg(v[c]), rows_[ri], c);
    }
    return n_;
  }

  bool in_span(Word v) const { return reduce(v) == n_; }

  /// Adds v if independent; returns true if the rank grew.
  bool insert(Word v) {
    std::size_t c = reduce(v);
    if (c == n_) return false;
    Elem inv = f_.inv(v[c]);
    if (inv != 1)
      for (std::size_t t = c; t < n_; ++t) v[t] = f_.mul(v[t], inv);
    pivot_row_[c] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

  std::vector<std::size_t> pivots_sorted() const {
    std::vector<std::size_t> p;
    for (std::size_t c = 0; c < n_; ++c)
      if (pivot_row_[c] >= 0) p.push_back(c);
    return p;
  }

  std::vector<Word> rref(std::vector<std::size_t>* pivots_out = nullptr) const {
    std::vector<std::size_t> piv = pivots_sorted();
    std::vector<Word> out;
    out.reserve(piv.size());
    for (std::size_t c : piv) out.push_back(rows_[pivot_row_[c]]);
    for (std::size_t i = out.size(); i-- > 0;) {
      for (std::size_t j = 0; j < i; ++j) {
        Elem a = out[j][piv[i]];
        if (a != 0) axpy(out[j], f_.neg(a), out[i], piv[i]);
      }
    }
    if (pivots_out) *pivots_out = piv;
    return out;
  }

  /// v += a * row, touching columns >= from.
  void axpy(Word& v, Elem a, const Word& row, std::size_t from) const {
    if (a == 0) return;
    if (f_.p() == 2 && f_.r() == 1) {
      for (std::size_t t = from; t < n_; ++t) v[t] ^= row[t];
      return;
    }
    if (small_ && n_ - from > f_.q()) {
      scaled_.resize(f_.q());
      for (Elem x = 0; x < f_.q(); ++x) scaled_[x] = f_.mul(a, x);
      for (std::size_t t = from; t < n_; ++t)
        if (row[t] != 0) v[t] = f_.add(v[t], scaled_[row[t]]);
      return;
    }
    for (std::size_t t = from; t < n_; ++t)
      if (row[t] != 0) v[t] = f_.add(v[t], f_.mul(a, row[t]));
  }

 private:
  const GaloisField& f_;
  std::size_t n_;
  bool small_ = false;
  std::vector<Word> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> pivot_row_;
  mutable std::vector<Elem> scaled_;
};

using Bits = std::vector<std::uint64_t>;

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline Bits to_bits(const Word& w) {
  Bits b(words_for(w.size()), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) b[i >> 6] |= std::uint64_t{1} << (i & 63);
  return b;
}

inline Word from_bits(const Bits& b, std::size_t n) {
  Word w(n, 0);
  for (std::size_t i = 0; i < n; ++i) w[i] = (b[i >> 6] >> (i & 63)) & 1;
  return w;
}

inline bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }

inline std::size_t popcount(const Bits& b) {
  std::size_t s = 0;
  for (auto x : b) s += std::popcount(x);
  return s;
}

class BitEchelon {
 public:
  explicit BitEchelon(std::size_t n) : n_(n), w_(words_for(n)), pivot_row_(n, -1) {}

  std::size_t rank() const { return rows_.size(); }

  std::size_t reduce(Bits& v) const {
    for (std::size_t wi = 0; wi < w_; ++wi) {
      while (v[wi]) {
        std::size_t c = wi * 64 + std::countr_zero(v[wi]);
        int ri = pivot_row_[c];
        if (ri < 0) return c;
        const Bits& row = rows_[ri];
        for (std::size_t t = wi; t < w_; ++t) v[t] ^= row[t];
      }
    }
    return n_;
  }

  bool in_span(Bits v) const { return reduce(v) == n_; }

  bool insert(Bits v) {
    std::size_t c = reduce(v);
    if (c == n_) return false;
    pivot_row_[c] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  std::vector<Bits> rref(std::vector<std::size_t>* pivots_out = nullptr) const {
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < n_; ++c)
      if (pivot_row_[c] >= 0) piv.push_back(c);
    std::vector<Bits> out;
    out.reserve(piv.size());
    for (std::size_t c : piv) out.push_back(rows_[pivot_row_[c]]);
    for (std::size_t i = out.size(); i-- > 0;) {
      for (std::size_t j = 0; j < i; ++j) {
        if (test_bit(out[j], piv[i]))
          for (std::size_t t = piv[i] >> 6; t < w_; ++t) out[j][t] ^= out[i][t];
      }
    }
    if (pivots_out) *pivots_out = piv;
    return out;
  }

 private:
  std::size_t n_, w_;
  std::vector<Bits> rows_;
  std::vector<int> pivot_row_;
};

}  // namespace evalcode::detail
