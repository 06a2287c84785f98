#pragma once

// Exact scalars: rationals with an int64 fast path (GMP fallback on overflow)
// and residues modulo a runtime prime.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace whh {

struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct ScalarParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline unsigned __int128 abs_u128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

inline bool fits_i64(__int128 v) {
  return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX);
}

inline mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = abs_u128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace detail

class RationalField;

/// Reduced rational number. Values whose numerator and denominator fit in
/// int64 are stored inline; anything larger lives in a heap mpq_class.
class Rational {
 public:
  using Context = RationalField;

  Rational() = default;
  Rational(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) { assign(static_cast<__int128>(n), static_cast<__int128>(d)); }
  explicit Rational(const mpq_class& q) { assign_big(q); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_small() const { return !big_; }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
  }

  [[nodiscard]] std::string str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p" or "p/q" (q != 0), reducing to lowest terms.
  static Rational parse(std::string_view s) {
    std::string text(s);
    if (text.empty()) throw ScalarParseError("empty rational literal");
    auto slash = text.find('/');
    auto valid_int = [](const std::string& t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i >= t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    std::string ns = text.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(ns) || !valid_int(ds)) throw ScalarParseError("malformed rational literal '" + text + "'");
    if (ns[0] == '+') ns.erase(0, 1);
    if (ds[0] == '+') ds.erase(0, 1);
    mpz_class n(ns), d(ds);
    if (d == 0) throw ScalarParseError("zero denominator in rational literal '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.den_ == b.den_) {
        r.assign(static_cast<__int128>(a.num_) + b.num_, a.den_);
      } else {
        r.assign(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                 static_cast<__int128>(a.den_) * b.den_);
      }
      return r;
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        Rational r;
        r.assign(static_cast<__int128>(a.num_) * b.num_, 1);
        return r;
      }
      Rational r;
      r.assign(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    if (!a.big_ && !b.big_) {
      Rational r;
      r.assign(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
      return r;
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }
  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.assign(-static_cast<__int128>(num_), den_);
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a big value never fits in int64
  }

 private:
  void assign(__int128 n, __int128 d) {
    big_.reset();
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    if (d != 1) {
      auto g = detail::gcd_u128(detail::abs_u128(n), static_cast<unsigned __int128>(d));
      if (g != 1) {
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
      }
    }
    if (detail::fits_i64(n) && detail::fits_i64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      mpq_class q(detail::mpz_from_i128(n), detail::mpz_from_i128(d));
      big_ = std::make_unique<mpq_class>(q);
      num_ = 0;
      den_ = 0;
    }
  }

  void assign_big(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
      big_.reset();
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
    } else {
      big_ = std::make_unique<mpq_class>(q);
      num_ = 0;
      den_ = 0;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

class RationalField {
 public:
  using Scalar = Rational;
  [[nodiscard]] Rational zero() const { return Rational(); }
  [[nodiscard]] Rational one() const { return Rational(1); }
  [[nodiscard]] Rational from_int(std::int64_t v) const { return Rational(v); }
  [[nodiscard]] Rational parse(std::string_view s) const { return Rational::parse(s); }
  [[nodiscard]] std::string name() const { return "rational"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField;

/// Residue modulo a prime fixed at runtime. Arithmetic between residues of
/// different moduli throws FieldMismatch.
class ModP {
 public:
  using Context = PrimeField;

  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] std::uint64_t value() const { return v_; }
  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] std::string str() const { return std::to_string(v_); }

  friend ModP operator+(const ModP& a, const ModP& b) {
    auto p = common(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  friend ModP operator-(const ModP& a, const ModP& b) {
    auto p = common(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
  }
  friend ModP operator*(const ModP& a, const ModP& b) {
    auto p = common(a, b);
    return raw(static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v_) * b.v_) % p), p);
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }

  [[nodiscard]] ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero residue");
    // extended Euclid on signed 128-bit values
    __int128 t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      __int128 q = r / nr;
      __int128 tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return raw(static_cast<std::uint64_t>(t), p_);
  }

  friend bool operator==(const ModP& a, const ModP& b) {
    common(a, b);
    return a.v_ == b.v_;
  }

 private:
  static ModP raw(std::uint64_t v, std::uint64_t p) {
    ModP r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static std::uint64_t common(const ModP& a, const ModP& b) {
    if (a.p_ != b.p_)
      throw FieldMismatch("mixed ground fields: GF(" + std::to_string(a.p_) + ") vs GF(" + std::to_string(b.p_) + ")");
    return a.p_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

class PrimeField {
 public:
  using Scalar = ModP;
  PrimeField() = default;
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p) requires a prime modulus, got " + std::to_string(p));
  }
  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] ModP zero() const { return ModP(0, p_); }
  [[nodiscard]] ModP one() const { return ModP(1, p_); }
  [[nodiscard]] ModP from_int(std::int64_t v) const {
    auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return ModP(static_cast<std::uint64_t>(r), p_);
  }
  /// Accepts integers and "p/q" literals (interpreted as p * q^{-1}).
  [[nodiscard]] ModP parse(std::string_view s) const {
    Rational q = Rational::parse(s);
    mpq_class v = q.to_mpq();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class n = v.get_num() % pz, d = v.get_den() % pz;
    if (n < 0) n += pz;
    if (d == 0) throw ScalarParseError("denominator of '" + std::string(s) + "' vanishes mod " + std::to_string(p_));
    return ModP(n.get_ui(), p_) / ModP(d.get_ui(), p_);
  }
  [[nodiscard]] std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
      if (n % k == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_ = 2;
};

template <class F>
concept ExactField = requires(const F& a, const F& b, const typename F::Context& ctx) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { ctx.zero() } -> std::same_as<F>;
  { ctx.one() } -> std::same_as<F>;
  { ctx.from_int(std::int64_t{}) } -> std::same_as<F>;
  { ctx.name() } -> std::convertible_to<std::string>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<ModP>);

}  // namespace whh
