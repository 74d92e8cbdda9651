#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evalcode/galois.hpp"

namespace evalcode {

using Elem = GaloisField::Elem;
using Word = std::vector<Elem>;

/// Linear code over GF(q), stored as its reduced row-echelon generator matrix.
/// Two codes are equal iff their RREFs are.
class LinearCode {
 public:
  /// Row space of `rows` (any spanning set, possibly dependent).
  LinearCode(FieldPtr field, std::size_t n, const std::vector<Word>& rows);
  static LinearCode zero(FieldPtr field, std::size_t n);
  static LinearCode full(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return gen_.size(); }
  const std::vector<Word>& generator() const { return gen_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool binary() const { return field_->q() == 2; }

  bool contains_word(std::span<const Elem> v) const;
  bool operator==(const LinearCode& o) const;

  /// "[n,k]_q"
  std::string summary() const;

 private:
  LinearCode(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}
  friend LinearCode make_rref_code(FieldPtr, std::size_t, std::vector<Word>, std::vector<std::size_t>);
  FieldPtr field_;
  std::size_t n_;
  std::vector<Word> gen_;
  std::vector<std::size_t> pivots_;
};

std::size_t weight(std::span<const Elem> v);

LinearCode dual(const LinearCode& c);
/// Span of all componentwise products of generator rows.
LinearCode schur(const LinearCode& c, const LinearCode& d);
LinearCode schur_square(const LinearCode& c);
bool contains(const LinearCode& outer, const LinearCode& inner);
/// GF(p^s)-subcode: codewords with all coordinates in GF(p^s), as a code over GF(p^s).
LinearCode subfield_subcode(const LinearCode& c, unsigned s);
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& positions);
LinearCode shorten(const LinearCode& c, const std::vector<std::size_t>& positions);
/// Applies a coordinate permutation: output position perm[i] receives input position i.
LinearCode permute(const LinearCode& c, const std::vector<std::size_t>& perm);

struct SearchBudget {
  std::uint64_t enumeration_cap = std::uint64_t{1} << 26;
  unsigned w_max = 6;
  std::uint64_t max_steps = 50'000'000;
  std::uint64_t seed = 0x5eed;
  /// Budget defaults, with EVALCODE_BUDGET_STEPS applied if set.
  static SearchBudget from_env();
};

struct DistanceResult {
  std::size_t lower = 1;
  std::size_t upper = 0;
  bool exact = false;
  std::string lower_source;  // what certified `lower`
  std::string upper_source;  // what produced the witness for `upper`
  Word witness;              // a codeword of weight `upper`
};

/// Extra knowledge a caller may hand to min_distance.
struct DistanceHints {
  std::size_t lower = 1;
  std::string lower_source;
  /// Candidate codewords; each is checked for membership before use.
  std::vector<Word> witnesses;
  /// The automorphism group is known to be transitive, so support search may
  /// fix the first position.
  bool transitive = false;
  /// Skip the generic searches and only combine hints with generator rows.
  bool hints_only = false;
};

DistanceResult min_distance(const LinearCode& c, const SearchBudget& budget = SearchBudget::from_env(),
                            const DistanceHints& hints = {});

// Individual certification tools, exposed for tests and for table code that
// wants a specific route.

/// Exact minimum distance by enumerating all q^k codewords. Returns nullopt if
/// q^k exceeds the cap.
std::optional<DistanceResult> exhaustive_distance(const LinearCode& c, std::uint64_t cap,
                                                  std::size_t stop_at = 0);

struct SupportSearchResult {
  bool complete = false;       // every support of size <= w_limit was examined
  std::size_t min_found = 0;   // 0 if no codeword found
  Word witness;
};
/// Depth-first search over column subsets of a parity-check matrix. If complete
/// and min_found == 0, every nonzero codeword has weight > w_limit.
SupportSearchResult support_search(const LinearCode& c, std::size_t w_limit, std::uint64_t max_steps,
                                   bool fix_first = false, std::size_t stop_at = 0);

/// Randomized information-set search for low-weight codewords (upper bounds only).
std::optional<Word> isd_search(const LinearCode& c, std::size_t target, std::uint64_t iterations,
                               std::uint64_t seed);

struct InfoSetBound {
  std::size_t lower = 1;
  std::size_t upper = 0;
  Word witness;
  bool finished = false;
};
/// Lower bound from enumerating low-weight combinations over disjoint
/// information sets. Stops at `stop_at` or when the step budget runs out.
InfoSetBound info_set_bound(const LinearCode& c, std::size_t stop_at, std::uint64_t max_steps);

}  // namespace evalcode
