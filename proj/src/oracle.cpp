#include "bbwt/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "bbwt/orders.hpp"

namespace bbwt {
namespace oracle {

namespace {

Bytes rotation(std::span<const Byte> text, std::size_t ibeg, std::size_t iend,
               std::size_t start) {
  // All positions 1-based; rotation of the factor [ibeg..iend] starting at start.
  Bytes out;
  out.reserve(iend - ibeg + 1);
  out.insert(out.end(), text.begin() + (start - 1), text.begin() + iend);
  out.insert(out.end(), text.begin() + (ibeg - 1), text.begin() + (start - 1));
  return out;
}

}  // namespace

CircularSuffixArray naive_csa(const ComposedFactorization& cf) {
  const std::size_t n = cf.reduced_text.size();
  std::vector<Bytes> conj(n);
  for (std::size_t x = 0; x < cf.spans.size(); ++x) {
    const FactorSpan& s = cf.spans[x];
    for (std::size_t i = s.begin; i <= s.end; ++i)
      conj[i - 1] = rotation(cf.reduced_text, s.begin, s.end, i);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return omega_compare(conj[a], conj[b]) == Ordering::Less;
  });
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (omega_compare(conj[order[k]], conj[order[k + 1]]) == Ordering::Equal)
      throw DuplicateConjugate();
  CircularSuffixArray out;
  out.entries = std::move(order);
  for (std::size_t& p : out.entries) ++p;
  return out;
}

Bytes naive_bbwt(std::span<const Byte> text) {
  const LyndonFactorization f = duval_factorize(text);
  std::vector<Bytes> conj;
  conj.reserve(text.size());
  for (const FactorSpan& s : f.spans)
    for (std::size_t i = s.begin; i <= s.end; ++i)
      conj.push_back(rotation(text, s.begin, s.end, i));
  std::stable_sort(conj.begin(), conj.end(), [](const Bytes& a, const Bytes& b) {
    return omega_compare(a, b) == Ordering::Less;
  });
  Bytes out;
  out.reserve(conj.size());
  for (const Bytes& c : conj) out.push_back(c.back());
  return out;
}

std::vector<std::size_t> naive_sa(std::span<const Byte> text) {
  const std::size_t n = text.size();
  std::vector<std::size_t> sa(n);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
    return lex_compare(text.subspan(a), text.subspan(b)) == Ordering::Less;
  });
  for (std::size_t& p : sa) ++p;
  return sa;
}

Bytes naive_bwt(std::span<const Byte> text) {
  const std::vector<std::size_t> sa = naive_sa(text);
  Bytes out;
  out.reserve(text.size());
  for (std::size_t p : sa) out.push_back(p == 1 ? text.back() : text[p - 2]);
  return out;
}

}  // namespace oracle
}  // namespace bbwt
