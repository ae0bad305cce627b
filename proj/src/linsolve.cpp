#include "rsdeep/linsolve.hpp"

#include "rsdeep/error.hpp"

namespace rsdeep {

namespace {

std::vector<u64> solve_prime_power(std::vector<std::vector<u64>> a, std::vector<u64> b, std::size_t nvars, u64 p,
                                   u64 pe) {
  for (auto& row : a)
    for (auto& v : row) v %= pe;
  for (auto& v : b) v %= pe;

  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivot_row(nvars);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nvars; ++col) {
    std::size_t pick = nrows;
    for (std::size_t r = rank; r < nrows; ++r) {
      if (a[r][col] % p != 0) {
        pick = r;
        break;
      }
    }
    if (pick == nrows)
      throw Error(Errc::Singular, "unknown " + std::to_string(col) + " undetermined modulo " + std::to_string(p));
    std::swap(a[pick], a[rank]);
    std::swap(b[pick], b[rank]);
    const u64 inv = *invmod(a[rank][col], pe);
    for (auto& v : a[rank]) v = mulmod(v, inv, pe);
    b[rank] = mulmod(b[rank], inv, pe);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const u64 factor = a[r][col];
      for (std::size_t c = col; c < nvars; ++c) a[r][c] = (a[r][c] + pe - mulmod(factor, a[rank][c], pe)) % pe;
      b[r] = (b[r] + pe - mulmod(factor, b[rank], pe)) % pe;
    }
    pivot_row[col] = rank++;
  }
  for (std::size_t r = rank; r < nrows; ++r)
    if (b[r] != 0) throw Error(Errc::InvalidArgument, "inconsistent congruence system");

  std::vector<u64> x(nvars);
  for (std::size_t col = 0; col < nvars; ++col) x[col] = b[pivot_row[col]];
  return x;
}

}  // namespace

u64 crt_combine(const std::vector<u64>& residues, const std::vector<u64>& moduli) {
  u64 x = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const u64 mi = moduli[i];
    auto inv = invmod(m % mi, mi);
    if (!inv) throw Error(Errc::InvalidArgument, "CRT moduli are not coprime");
    const u64 diff = (residues[i] % mi + mi - x % mi) % mi;
    const u64 t = mulmod(diff, *inv, mi);
    x += m * t;  // < m * mi, fits since the product of moduli fits
    m *= mi;
  }
  return x;
}

std::vector<u64> solve_linear_mod(std::vector<std::vector<u64>> rows, std::vector<u64> rhs, std::size_t nvars,
                                  u64 modulus) {
  if (rows.size() != rhs.size()) throw Error(Errc::InvalidArgument, "row/rhs count mismatch");
  for (const auto& r : rows)
    if (r.size() != nvars) throw Error(Errc::InvalidArgument, "row length mismatch");
  if (modulus < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");

  std::vector<std::vector<u64>> parts;
  std::vector<u64> moduli;
  for (const auto& [p, e] : factorize(modulus)) {
    const u64 pe = *checked_pow(p, e);
    parts.push_back(solve_prime_power(rows, rhs, nvars, p, pe));
    moduli.push_back(pe);
  }
  std::vector<u64> x(nvars);
  std::vector<u64> residues(moduli.size());
  for (std::size_t v = 0; v < nvars; ++v) {
    for (std::size_t i = 0; i < moduli.size(); ++i) residues[i] = parts[i][v];
    x[v] = crt_combine(residues, moduli);
  }
  return x;
}

}  // namespace rsdeep
