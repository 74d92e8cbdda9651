#include "evalcode/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace evalcode {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTableLimit = u64{1} << 20;
constexpr u64 kAddTableLimit = 1024;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  for (u64 sp = 2; sp < 1000; ++sp) {
    if (n % sp == 0) {
      out.push_back(sp);
      while (n % sp == 0) n /= sp;
      factor_into(n, out);
      return;
    }
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Dense polynomials over GF(p), ascending degree, no trailing zeros.
using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 inv_lead = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    u64 c = mulmod(a.back(), inv_lead, p);
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly a, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  a = poly_mod(std::move(a), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, f, p);
    a = poly_mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly t = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Rabin's test for a monic f of degree r.
bool irreducible(const Poly& f, u64 p) {
  const std::size_t r = f.size() - 1;
  if (r == 1) return true;
  auto x_pow_pk = [&](std::size_t k) {
    Poly h{0, 1};
    for (std::size_t i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
    return h;
  };
  Poly h = x_pow_pk(r);
  if (!(h.size() == 2 && h[0] == 0 && h[1] == 1)) return false;
  for (u64 l : prime_factors(r)) {
    Poly g = x_pow_pk(r / l);
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly d = poly_gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

Poly least_irreducible(u64 p, unsigned r) {
  if (r == 1) return {0, 1};
  u64 count = 1;
  for (unsigned i = 0; i < r; ++i) count *= p;
  for (u64 v = 1; v < count; ++v) {
    if (v % p == 0) continue;  // constant term zero means x divides f
    Poly f(r + 1, 0);
    u64 t = v;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[r] = 1;
    if (irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) { return miller_rabin(n); }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<u64> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  auto f = prime_factors(q);
  if (f.size() != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  unsigned r = 0;
  while (q > 1) {
    q /= f[0];
    ++r;
  }
  return {f[0], r};
}

GaloisField::GaloisField(std::uint64_t p, unsigned r) : p_(p), r_(r) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (r < 1) throw std::invalid_argument("extension degree must be at least 1");
  u64 q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > (u64{1} << 63) / p) throw std::invalid_argument("field order p^r does not fit below 2^63");
    q *= p;
  }
  if (q >= (u64{1} << 63)) throw std::invalid_argument("field order p^r does not fit below 2^63");
  q_ = q;
  modulus_ = least_irreducible(p, r);
  factors_ = q_ > 2 ? prime_factors(q_ - 1) : std::vector<u64>{};

  // least element (by index) of order q-1
  if (q_ == 2) {
    primitive_ = 1;
  } else {
    // For r > 1 the constants lie in GF(p) and cannot be primitive.
    for (Elem g = r_ > 1 ? p_ : 2; g < q_; ++g) {
      bool ok = true;
      for (u64 l : factors_) {
        if (pow(g, (q_ - 1) / l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }
  if (q_ <= kTableLimit) build_tables();
}

void GaloisField::build_tables() {
  std::vector<std::uint32_t> e(q_ - 1), l(q_, 0);
  Elem x = 1;
  for (u64 i = 0; i + 1 < q_; ++i) {
    e[i] = static_cast<std::uint32_t>(x);
    l[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, primitive_);
  }
  if (p_ != 2 && r_ > 1) {
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) neg_table_[a] = static_cast<std::uint32_t>(add_digits(0, a, true));
    if (q_ <= kAddTableLimit) {
      add_table_.resize(q_ * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint32_t>(add_digits(a, b, false));
    }
  }
  exp_ = std::move(e);
  log_ = std::move(l);
}

GaloisField::Elem GaloisField::add_digits(Elem a, Elem b, bool negate_b) const {
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    u64 da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    if (negate_b) db = (p_ - db) % p_;
    out += ((da + db) % p_) * scale;
    scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (r_ == 1) return mulmod(a, b, p_);
  if (p_ == 2) {
    // carry-less multiply with interleaved reduction
    Elem poly = 0;
    for (unsigned i = 0; i < r_; ++i) poly |= modulus_[i] << i;
    Elem res = 0;
    const Elem top = Elem{1} << (r_ - 1);
    while (b) {
      if (b & 1) res ^= a;
      b >>= 1;
      bool carry = a & top;
      a = (a << 1) & ((Elem{1} << r_) - 1);
      if (carry) a ^= poly;
    }
    return res;
  }
  Poly pa = coefficients(a), pb = coefficients(b);
  trim(pa);
  trim(pb);
  Poly c = poly_mulmod(pa, pb, modulus_, p_);
  c.resize(r_, 0);
  return from_coefficients(c);
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[static_cast<u64>(static_cast<u128>(log_[a]) * (e % (q_ - 1)) % (q_ - 1))];
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

GaloisField::Elem GaloisField::frobenius(Elem x, unsigned k) const {
  k %= r_;
  for (unsigned i = 0; i < k; ++i) x = pow(x, p_);
  return x;
}

GaloisField::Elem GaloisField::relative_trace(Elem x, unsigned s) const {
  if (s == 0 || r_ % s != 0) throw std::invalid_argument("subfield degree must divide the extension degree");
  Elem acc = 0, y = x;
  for (unsigned t = 0; t < r_ / s; ++t) {
    acc = add(acc, y);
    y = frobenius(y, s);
  }
  return acc;
}

std::uint64_t GaloisField::order(Elem x) const {
  if (x == 0) throw std::domain_error("zero has no multiplicative order");
  u64 ord = q_ - 1;
  for (u64 l : factors_) {
    while (ord % l == 0 && pow(x, ord / l) == 1) ord /= l;
  }
  return ord;
}

std::uint64_t GaloisField::log(Elem x) const {
  if (x == 0) throw std::domain_error("log of zero");
  if (!exp_.empty()) return log_[x];
  throw std::domain_error("discrete log needs a table-backed field (q <= 2^20)");
}

std::vector<GaloisField::Elem> GaloisField::roots_of_unity(std::uint64_t n) const {
  if (n == 0 || (q_ - 1) % n != 0)
    throw std::invalid_argument(std::to_string(n) + " does not divide q-1 = " + std::to_string(q_ - 1));
  Elem h = pow(primitive_, (q_ - 1) / n);
  std::vector<Elem> out;
  out.reserve(n);
  Elem x = 1;
  for (u64 k = 0; k < n; ++k) {
    out.push_back(x);
    x = mul(x, h);
  }
  return out;
}

std::vector<std::uint64_t> GaloisField::coefficients(Elem x) const {
  std::vector<u64> c(r_);
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

GaloisField::Elem GaloisField::from_coefficients(std::span<const std::uint64_t> c) const {
  if (c.size() > r_) throw std::invalid_argument("too many coefficients");
  Elem out = 0, scale = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    out += c[i] * scale;
    scale *= p_;
  }
  return out;
}

std::string GaloisField::to_string(Elem x) const {
  if (r_ == 1) return std::to_string(x);
  if (x == 0) return "0";
  if (!exp_.empty()) {
    if (x == 1) return "1";
    return "g^" + std::to_string(log_[x]);
  }
  std::ostringstream os;
  auto c = coefficients(x);
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c[i] != 1 || i == 0) os << c[i];
    if (i >= 1) os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

FieldPtr GaloisField::make(std::uint64_t p, unsigned r) {
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, r);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const GaloisField>(p, r);
  cache.emplace(key, f);
  return f;
}

FieldPtr make_field(std::uint64_t p, unsigned r) { return GaloisField::make(p, r); }

FieldPtr make_field_of_order(std::uint64_t q) {
  auto [p, r] = prime_power(q);
  return GaloisField::make(p, r);
}

FieldElement::FieldElement(FieldPtr f, Elem v) : field_(std::move(f)), v_(v) {
  if (v_ >= field_->q()) throw std::invalid_argument("element index out of range");
}

FieldElement FieldElement::from_coefficients(FieldPtr f, std::span<const std::uint64_t> c) {
  Elem v = f->from_coefficients(c);
  return FieldElement(std::move(f), v);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw std::invalid_argument("field elements come from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(v_, o.v_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return v_ == o.v_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

FieldElement trace_to_prime(const FieldElement& x) { return {x.field(), x.field()->trace(x.value())}; }

FieldElement primitive_element(const FieldPtr& f) { return {f, f->primitive()}; }

std::vector<FieldElement> subgroup_roots(const FieldPtr& f, std::uint64_t n) {
  std::vector<FieldElement> out;
  for (auto v : f->roots_of_unity(n)) out.emplace_back(f, v);
  return out;
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr big, unsigned s) : big_(std::move(big)) {
  const unsigned r = big_->r();
  if (s == 0 || r % s != 0) throw std::invalid_argument("subfield degree must divide the extension degree");
  sub_ = make_field(big_->p(), s);
  const u64 qs = sub_->q();
  up_.resize(qs);
  if (s == r) {
    for (u64 x = 0; x < qs; ++x) up_[x] = x;
  } else if (s == 1) {
    for (u64 x = 0; x < qs; ++x) up_[x] = x;  // prime-field elements share indices
  } else {
    // least root of the subfield modulus inside the big field
    const auto& m = sub_->modulus();
    GaloisField::Elem root = 0;
    bool found = false;
    for (GaloisField::Elem y = 0; y < big_->q() && !found; ++y) {
      if (!big_->in_subfield(y, s)) continue;
      GaloisField::Elem acc = 0, pw = 1;
      for (u64 c : m) {
        acc = big_->add(acc, big_->mul(c % big_->p(), pw));
        pw = big_->mul(pw, y);
      }
      if (acc == 0) {
        root = y;
        found = true;
      }
    }
    if (!found) throw std::logic_error("subfield modulus has no root in the big field");
    for (u64 x = 0; x < qs; ++x) {
      auto c = sub_->coefficients(x);
      GaloisField::Elem acc = 0, pw = 1;
      for (u64 ci : c) {
        acc = big_->add(acc, big_->mul(ci, pw));
        pw = big_->mul(pw, root);
      }
      up_[x] = acc;
    }
  }
  if (big_->q() <= (u64{1} << 22)) {
    down_.assign(big_->q(), UINT32_MAX);
    for (u64 x = 0; x < qs; ++x) down_[up_[x]] = static_cast<std::uint32_t>(x);
  }
}

GaloisField::Elem SubfieldEmbedding::down(GaloisField::Elem y) const {
  if (!down_.empty()) {
    if (y < down_.size() && down_[y] != UINT32_MAX) return down_[y];
  } else {
    auto it = std::find(up_.begin(), up_.end(), y);
    if (it != up_.end()) return static_cast<GaloisField::Elem>(it - up_.begin());
  }
  throw std::domain_error("element does not lie in the subfield");
}

}  // namespace evalcode
