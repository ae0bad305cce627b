#include "rsdeep/rs_code.hpp"

#include <algorithm>
#include <thread>

#include "rsdeep/error.hpp"

namespace rsdeep {

RSCode::RSCode(FieldCtx field, unsigned k) : field_(std::move(field)), k_(k) {
  if (k_ < 1 || k_ > field_.order())
    throw Error(Errc::InvalidParams, "dimension must satisfy 1 <= k <= q");
}

Word::Word(FieldCtx field, std::vector<Index> symbols) : field_(std::move(field)), symbols_(std::move(symbols)) {
  if (symbols_.size() != field_.order()) throw Error(Errc::InvalidArgument, "word length must equal q");
  for (Index s : symbols_)
    if (s >= field_.order()) throw Error(Errc::InvalidArgument, "symbol out of range");
}

Word encode(const RSCode& code, const Poly& message) {
  if (!(message.ctx() == code.field())) throw Error(Errc::ContextMismatch, "message over a different field");
  if (message.degree() >= static_cast<int>(code.dimension()))
    throw Error(Errc::DegreeTooHigh, "message degree " + std::to_string(message.degree()) + " >= k");
  std::vector<Index> out(code.length());
  for (Index i = 0; i < code.length(); ++i) out[i] = message.eval(i);
  return Word(code.field(), std::move(out));
}

std::size_t distance(const Word& u, const Word& v) {
  if (!(u.field() == v.field())) throw Error(Errc::ContextMismatch, "words over different fields");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

u64 message_count(const RSCode& code, u64 cap) {
  auto count = checked_pow(code.length(), code.dimension());
  if (!count || *count > cap)
    throw Error(Errc::CapExceeded, "q^k exceeds brute-force cap " + std::to_string(cap));
  return *count;
}

Poly message_from_index(const RSCode& code, u64 m) {
  std::vector<Index> c(code.dimension());
  for (auto& v : c) {
    v = m % code.length();
    m /= code.length();
  }
  return Poly(code.field(), std::move(c));
}

namespace {

// Distance from w to the codeword of coefficient vector c, or limit + 1 once
// the running count passes limit.
std::size_t bounded_distance(const FieldCtx& f, const std::vector<Index>& c, const Word& w, std::size_t limit) {
  std::size_t d = 0;
  const Index q = f.order();
  for (Index x = 0; x < q; ++x) {
    Index acc = 0;
    for (std::size_t j = c.size(); j-- > 0;) acc = f.add(f.mul(acc, x), c[j]);
    if (acc != w[x] && ++d > limit) return d;
  }
  return d;
}

void scan_range(const RSCode& code, const Word& w, std::size_t radius, u64 lo, u64 hi, std::vector<DecodeHit>& out) {
  std::vector<Index> c(code.dimension());
  for (u64 m = lo; m < hi; ++m) {
    u64 t = m;
    for (auto& v : c) {
      v = t % code.length();
      t /= code.length();
    }
    std::size_t d = bounded_distance(code.field(), c, w, radius);
    if (d <= radius) out.push_back({Poly(code.field(), c), d});
  }
}

}  // namespace

std::vector<DecodeHit> list_decode_brute(const RSCode& code, const Word& w, std::size_t radius, u64 cap,
                                         unsigned threads) {
  if (!(w.field() == code.field())) throw Error(Errc::ContextMismatch, "word over a different field");
  const u64 total = message_count(code, cap);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<u64>(total, 64))));
  std::vector<std::vector<DecodeHit>> parts(threads);
  if (threads == 1) {
    scan_range(code, w, radius, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      u64 lo = total * t / threads, hi = total * (t + 1) / threads;
      pool.emplace_back([&, lo, hi, t] { scan_range(code, w, radius, lo, hi, parts[t]); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<DecodeHit> hits;
  for (auto& part : parts)
    for (auto& h : part) hits.push_back(std::move(h));
  return hits;
}

MlResult ml_decode_brute(const RSCode& code, const Word& w, u64 cap) {
  if (!(w.field() == code.field())) throw Error(Errc::ContextMismatch, "word over a different field");
  const u64 total = message_count(code, cap);
  MlResult best{static_cast<std::size_t>(code.length()) + 1, {}};
  std::vector<Index> c(code.dimension());
  for (u64 m = 0; m < total; ++m) {
    u64 t = m;
    for (auto& v : c) {
      v = t % code.length();
      t /= code.length();
    }
    std::size_t d = bounded_distance(code.field(), c, w, best.distance);
    if (d < best.distance) {
      best.distance = d;
      best.nearest.clear();
    }
    if (d == best.distance) best.nearest.emplace_back(code.field(), c);
  }
  return best;
}

}  // namespace rsdeep
