#include "arith/goedel_number.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>

namespace arith {

// ---------------------------------------------------------------------------
// Primes

std::uint64_t prime(std::size_t i) {
  if (i == 0) throw DomainError("prime index is 1-based");
  static std::mutex mu;
  static std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() < i) {
    std::uint64_t c = primes.back() + 2;
    for (;; c += 2) {
      bool is_prime = true;
      for (std::uint64_t p : primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          is_prime = false;
          break;
        }
      }
      if (is_prime) break;
    }
    primes.push_back(c);
  }
  return primes[i - 1];
}

// ---------------------------------------------------------------------------
// Certified logarithm comparison

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Interval [lo, hi] enclosing sum_i coeff_i * ln(p_i) (+ ln(extra) if given).
struct LogInterval {
  explicit LogInterval(mpfr_prec_t prec) : lo(prec), hi(prec) {
    mpfr_set_zero(lo.get(), 1);
    mpfr_set_zero(hi.get(), 1);
  }
  Mpfr lo, hi;
};

void add_term(LogInterval& acc, const mpz_class& coeff, std::uint64_t p, mpfr_prec_t prec) {
  if (coeff == 0) return;
  Mpfr ln_lo(prec), ln_hi(prec), t(prec);
  mpfr_set_ui(ln_lo.get(), p, MPFR_RNDN);  // exact: p < 2^64 and prec >= 64
  mpfr_set_ui(ln_hi.get(), p, MPFR_RNDN);
  mpfr_log(ln_lo.get(), ln_lo.get(), MPFR_RNDD);
  mpfr_log(ln_hi.get(), ln_hi.get(), MPFR_RNDU);
  if (coeff > 0) {
    mpfr_mul_z(t.get(), ln_lo.get(), coeff.get_mpz_t(), MPFR_RNDD);
    mpfr_add(acc.lo.get(), acc.lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul_z(t.get(), ln_hi.get(), coeff.get_mpz_t(), MPFR_RNDU);
    mpfr_add(acc.hi.get(), acc.hi.get(), t.get(), MPFR_RNDU);
  } else {
    mpfr_mul_z(t.get(), ln_hi.get(), coeff.get_mpz_t(), MPFR_RNDD);
    mpfr_add(acc.lo.get(), acc.lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul_z(t.get(), ln_lo.get(), coeff.get_mpz_t(), MPFR_RNDU);
    mpfr_add(acc.hi.get(), acc.hi.get(), t.get(), MPFR_RNDU);
  }
}

void sub_log_of(LogInterval& acc, const mpz_class& v, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_z(lo.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), v.get_mpz_t(), MPFR_RNDU);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_sub(acc.lo.get(), acc.lo.get(), hi.get(), MPFR_RNDD);
  mpfr_sub(acc.hi.get(), acc.hi.get(), lo.get(), MPFR_RNDU);
}

// Sign of sum_i d_i ln p_i - ln(v) (v omitted when null). The caller
// guarantees the quantity is nonzero, so refinement terminates.
int certified_sign(const std::vector<mpz_class>& d, const mpz_class* v) {
  std::size_t bits = 64;
  for (const auto& x : d) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  if (v) bits = std::max(bits, mpz_sizeinbase(v->get_mpz_t(), 2));
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
  for (int round = 0; round < 12; ++round, prec *= 2) {
    LogInterval acc(prec);
    for (std::size_t i = 0; i < d.size(); ++i) add_term(acc, d[i], prime(i + 1), prec);
    if (v) sub_log_of(acc, *v, prec);
    if (mpfr_sgn(acc.lo.get()) > 0) return 1;
    if (mpfr_sgn(acc.hi.get()) < 0) return -1;
  }
  throw DomainError("GoedelNumber ordering: logarithms could not be separated");
}

std::vector<mpz_class> explicit_exponents(const std::vector<GoedelNumber>& e) {
  std::vector<mpz_class> out;
  out.reserve(e.size());
  for (const auto& x : e) {
    if (!x.is_explicit()) {
      throw DomainError("ordering of codes beyond the second coding level is not supported");
    }
    out.push_back(x.value());
  }
  return out;
}

std::size_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

GoedelNumber::GoedelNumber() : value_(0) {}

GoedelNumber::GoedelNumber(std::uint64_t v) {
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

GoedelNumber::GoedelNumber(mpz_class v) : value_(std::move(v)) {
  if (value_ < 0) throw DomainError("GoedelNumber must be a natural number");
  if (bit_length(value_) > kExplicitBitLimit) {
    // Oversized sequence codes get the canonical sequence representation.
    if (auto seq = sequence_exponents()) {
      *this = sequence(std::move(*seq));
    }
  }
}

GoedelNumber GoedelNumber::sequence(std::vector<GoedelNumber> exponents) {
  if (exponents.empty()) throw DomainError("encode_seq: empty sequence");
  bool all_explicit = true;
  double est = 0.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i].is_zero()) throw DomainError("encode_seq: element " + std::to_string(i + 1) + " is zero");
    if (!exponents[i].is_explicit()) {
      all_explicit = false;
      continue;
    }
    est += exponents[i].value().get_d() * std::log2(static_cast<double>(prime(i + 1)));
  }
  GoedelNumber out;
  if (all_explicit && est <= static_cast<double>(kExplicitBitLimit) + 64.0) {
    mpz_class v = 1, pw;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      mpz_ui_pow_ui(pw.get_mpz_t(), prime(i + 1), exponents[i].value().get_ui());
      v *= pw;
    }
    if (bit_length(v) <= kExplicitBitLimit) {
      out.value_ = std::move(v);
      return out;
    }
  }
  out.value_ = 0;
  out.seq_ = std::make_shared<const std::vector<GoedelNumber>>(std::move(exponents));
  return out;
}

const mpz_class& GoedelNumber::value() const {
  if (seq_) throw DomainError("GoedelNumber has no positional representation (" + to_string() + ")");
  return value_;
}

bool GoedelNumber::is_zero() const noexcept { return !seq_ && value_ == 0; }

std::optional<std::uint64_t> GoedelNumber::to_u64() const {
  if (seq_ || bit_length(value_) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::optional<std::vector<GoedelNumber>> GoedelNumber::sequence_exponents() const {
  if (seq_) return *seq_;
  if (value_ < 2) return std::nullopt;
  std::vector<GoedelNumber> out;
  mpz_class rest = value_, p;
  for (std::size_t i = 1; rest > 1; ++i) {
    p = static_cast<unsigned long>(prime(i));
    const mp_bitcnt_t count = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (count == 0) return std::nullopt;
    out.emplace_back(static_cast<std::uint64_t>(count));
  }
  return out;
}

double GoedelNumber::approx_log2() const {
  if (!seq_) {
    if (value_ == 0) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    const double m = mpz_get_d_2exp(&exp, value_.get_mpz_t());
    return std::log2(m) + static_cast<double>(exp);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < seq_->size(); ++i) {
    const auto& e = (*seq_)[i];
    if (!e.is_explicit()) return std::numeric_limits<double>::infinity();
    sum += e.value().get_d() * std::log2(static_cast<double>(prime(i + 1)));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_exponent(const GoedelNumber& e, Render mode) {
  std::string s = e.to_string(mode);
  if (s.find('^') != std::string::npos) return "(" + s + ")";
  return s;
}

std::string render_sequence(const std::vector<GoedelNumber>& exps, Render mode) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += "·";
    out += std::to_string(prime(i + 1));
    out += '^';
    out += render_exponent(exps[i], mode);
  }
  return out;
}

}  // namespace

std::string GoedelNumber::to_string(Render mode) const {
  if (seq_) return render_sequence(*seq_, mode);
  if (mode == Render::Factored) {
    if (auto exps = sequence_exponents()) return render_sequence(*exps, mode);
  }
  return value_.get_str(10);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class NumberParser {
 public:
  explicit NumberParser(std::string_view s) : s_(s) {}

  GoedelNumber parse_all() {
    GoedelNumber g = expr();
    skip_ws();
    if (i_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  struct Factor {
    GoedelNumber base;
    GoedelNumber exponent;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse number: " + what + " at position " + std::to_string(i_));
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool product_sign() {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '*') {
      ++i_;
      return true;
    }
    if (s_.substr(i_, 2) == "·") {
      i_ += 2;
      return true;
    }
    return false;
  }

  GoedelNumber atom() {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '(') {
      ++i_;
      GoedelNumber g = expr();
      skip_ws();
      if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
      ++i_;
      return g;
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return GoedelNumber(mpz_class(std::string(s_.substr(start, i_ - start)), 10));
  }

  GoedelNumber expr() {
    std::vector<Factor> factors;
    do {
      Factor f{atom(), GoedelNumber(1)};
      skip_ws();
      if (i_ < s_.size() && s_[i_] == '^') {
        ++i_;
        f.exponent = atom();
      }
      factors.push_back(std::move(f));
    } while (product_sign());
    return combine(std::move(factors));
  }

  GoedelNumber combine(std::vector<Factor> factors) {
    double est = 0.0;
    bool small = true;
    for (const auto& f : factors) {
      if (!f.base.is_explicit() || !f.exponent.is_explicit()) {
        small = false;
        break;
      }
      if (f.base.is_zero()) continue;
      est += f.exponent.value().get_d() * f.base.approx_log2();
    }
    if (small && est <= 4.0 * GoedelNumber::kExplicitBitLimit) {
      mpz_class v = 1, pw;
      for (const auto& f : factors) {
        mpz_pow_ui(pw.get_mpz_t(), f.base.value().get_mpz_t(), f.exponent.value().get_ui());
        v *= pw;
      }
      return GoedelNumber(std::move(v));
    }
    // Large values must be written as prime powers over an initial segment.
    std::map<std::uint64_t, GoedelNumber> by_prime;
    for (auto& f : factors) {
      auto b = f.base.to_u64();
      if (!b || mpz_probab_prime_p(f.base.value().get_mpz_t(), 30) == 0) {
        fail("large values must be products of prime powers");
      }
      if (by_prime.contains(*b)) fail("repeated prime in large product");
      by_prime.emplace(*b, std::move(f.exponent));
    }
    std::vector<GoedelNumber> exps;
    std::size_t i = 1;
    for (auto& [p, e] : by_prime) {
      if (p != prime(i)) fail("prime support of a large value must be 2, 3, 5, ... without gaps");
      exps.push_back(std::move(e));
      ++i;
    }
    return GoedelNumber::sequence(std::move(exps));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

GoedelNumber GoedelNumber::parse(std::string_view text) { return NumberParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Comparison

bool operator==(const GoedelNumber& a, const GoedelNumber& b) {
  if (!a.seq_ && !b.seq_) return a.value_ == b.value_;
  if (a.seq_ && b.seq_) return a.seq_ == b.seq_ || *a.seq_ == *b.seq_;
  return false;
}

std::strong_ordering operator<=>(const GoedelNumber& a, const GoedelNumber& b) {
  if (!a.seq_ && !b.seq_) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (a == b) return std::strong_ordering::equal;
  if (!a.seq_) {
    if (bit_length(a.value_) <= GoedelNumber::kExplicitBitLimit) return std::strong_ordering::less;
    const auto d = explicit_exponents(*b.seq_);
    return certified_sign(d, &a.value_) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (!b.seq_) {
    return 0 <=> (b <=> a);
  }
  auto da = explicit_exponents(*a.seq_);
  const auto db = explicit_exponents(*b.seq_);
  da.resize(std::max(da.size(), db.size()));
  for (std::size_t i = 0; i < db.size(); ++i) da[i] -= db[i];
  return certified_sign(da, nullptr) > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::size_t GoedelNumber::hash() const noexcept {
  if (!seq_) {
    std::size_t h = 0x51ed27;
    const std::size_t n = mpz_size(value_.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(value_.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
  std::size_t h = 0xa11ce;
  for (const auto& e : *seq_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace arith
