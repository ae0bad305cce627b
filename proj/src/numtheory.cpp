#include "rsdeep/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "rsdeep/error.hpp"

namespace rsdeep {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ProductMismatch: return "ProductMismatch";
    case Errc::NoFactorization: return "NoFactorization";
    case Errc::Singular: return "Singular";
    case Errc::Exhausted: return "Exhausted";
    case Errc::ConstraintUnsatisfiable: return "ConstraintUnsatisfiable";
    case Errc::SubfieldGenerationFailure: return "SubfieldGenerationFailure";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> invmod(u64 a, u64 m) {
  if (m == 1) return 0;
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 quot = old_r / r;
    __int128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kSmall) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
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

namespace {

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, d = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += m;
      } while (k < r && d == 1);
      r <<= 1;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<u64> primes;
  for (u64 p = 2; p <= 1'000'000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, unsigned>> result;
  for (u64 p : primes) {
    if (!result.empty() && result.back().first == p)
      ++result.back().second;
    else
      result.emplace_back(p, 1);
  }
  return result;
}

std::optional<PrimePower> as_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::optional<u64> checked_mul(u64 a, u64 b) {
  u128 r = static_cast<u128>(a) * b;
  if (r > UINT64_MAX) return std::nullopt;
  return static_cast<u64>(r);
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

u64 nth_prime_power(u64 i) {
  if (i == 0) throw Error(Errc::InvalidArgument, "prime power index starts at 1");
  u64 n = 1;
  for (u64 seen = 0; seen < i;) {
    ++n;
    if (as_prime_power(n)) ++seen;
  }
  return n;
}

u64 next_prime_power(u64 n) {
  if (n < 2) n = 2;
  while (!as_prime_power(n)) ++n;
  return n;
}

mpz_class binomial(u64 n, u64 k) {
  mpz_class r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(u64 n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class ceil_sqrt(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) ++r;
  return r;
}

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

mpz_class ceil_q(const mpq_class& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

mpq_class parse_rational(const std::string& text) {
  auto bad = [&] { return Error(Errc::Parse, "not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  try {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      mpq_class r(text);
      if (r.get_den() == 0) throw bad();
      r.canonicalize();
      return r;
    }
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos)
      throw bad();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    mpq_class r(mpz_class(whole) * den + mpz_class(frac), den);
    r.canonicalize();
    return negative ? mpq_class(-r) : r;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

}  // namespace rsdeep
