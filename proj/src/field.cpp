#include <sumprod/field.hpp>

#include <cmath>
#include <charconv>

namespace sumprod {

double log2_rational(const Rational& q) {
  if (sgn(q) <= 0)
    throw std::domain_error("log2_rational: argument must be positive");
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return (std::log2(mn) + static_cast<double>(en)) -
         (std::log2(md) + static_cast<double>(ed));
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw usage_error("empty rational literal");
  std::string s(text);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw usage_error("malformed rational literal: '" + s + "'");
  if (sgn(Rational(q.get_den())) == 0)
    throw usage_error("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p, base = a % p;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, base, p);
    base = mulmod_u64(base, base, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return powmod_u64(a % p, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This base set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw usage_error("FieldSpec: " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime_field, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "p=") {
    std::uint64_t p = 0;
    auto body = text.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc{} && ptr == body.data() + body.size())
      return prime(p);
  }
  throw usage_error("bad field spec '" + std::string(text) +
                    "' (expected 'Q' or 'p=<prime>')");
}

std::uint64_t FieldSpec::p() const {
  if (kind_ != Kind::prime_field)
    throw usage_error("FieldSpec: p() on the rational field");
  return p_;
}

std::string FieldSpec::str() const {
  return is_prime_field() ? "p=" + std::to_string(p_) : std::string("Q");
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
  if (!f.is_prime_field())
    throw usage_error("Scalar::residue requires a prime field");
  Scalar s(f);
  s.res_ = r % f.p();
  return s;
}

Scalar Scalar::rational(Rational q) {
  Scalar s(FieldSpec::rationals());
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
  if (f.is_prime_field()) {
    const auto p = f.p();
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return residue(f, static_cast<std::uint64_t>(r));
  }
  return rational(Rational(static_cast<long>(n)));
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  if (f.is_prime_field()) {
    // Negative literals are reduced at parse time.
    bool negate = !text.empty() && text.front() == '-';
    auto body = negate ? text.substr(1) : text;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc{} || ptr != body.data() + body.size() || body.empty())
      throw usage_error("bad F_p scalar literal '" + std::string(text) + "'");
    Scalar s = residue(f, v % f.p());
    return negate ? s.neg() : s;
  }
  return rational(parse_rational(text));
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  return rational_str(q_);
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? res_ == 0 : sgn(q_) == 0;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw usage_error("scalar field mismatch: " + field_.str() + " vs " +
                      o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s(field_);
  if (field_.is_prime_field()) {
    const auto p = field_.p();
    std::uint64_t t = p - o.res_;
    s.res_ = res_ >= t ? res_ - t : res_ + o.res_;
  } else {
    s.q_ = q_ + o.q_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + o.neg(); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s(field_);
  if (field_.is_prime_field())
    s.res_ = mulmod_u64(res_, o.res_, field_.p());
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::neg() const {
  Scalar s(field_);
  if (field_.is_prime_field())
    s.res_ = res_ == 0 ? 0 : field_.p() - res_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("Scalar::inv of zero");
  Scalar s(field_);
  if (field_.is_prime_field())
    s.res_ = invmod_u64(res_, field_.p());
  else
    s.q_ = 1 / q_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime_field() ? res_ == o.res_ : q_ == o.q_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_prime_field()) return res_ <=> o.res_;
  int c = cmp(q_, o.q_);
  return c < 0   ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

} // namespace sumprod
