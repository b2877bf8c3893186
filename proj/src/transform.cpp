#include "bbwt/transform.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "bbwt/csais.hpp"
#include "bbwt/lyndon.hpp"
#include "bbwt/orders.hpp"

namespace bbwt {

TransformResult bbwt(std::span<const Byte> text, bool with_provenance) {
  const LyndonFactorization f = duval_factorize(text);
  const ComposedFactorization cf = compose(f, text);
  const CircularSuffixArray sa = circular_suffix_array(cf);
  TransformResult r;
  r.output.reserve(text.size());
  if (with_provenance) r.provenance.reserve(text.size());
  for (std::size_t i : sa.entries) {
    const FactorRef ref = cf.factor_of(i);
    const Byte ch = cf.reduced_text[cf.cyclic_prev(i) - 1];
    const std::size_t tau = cf.multiplicities[ref.factor - 1];
    r.output.insert(r.output.end(), tau, ch);
    if (with_provenance)
      r.provenance.insert(r.provenance.end(), tau,
                          TransformResult::Provenance{i, tau});
  }
  return r;
}

Bytes inverse_bbwt(std::span<const Byte> b) {
  const std::size_t n = b.size();
  if (n == 0) return {};

  // Standard permutation: position i maps to the slot of its character's
  // i-th occurrence in the sorted string.
  std::array<std::size_t, 256> count{};
  for (Byte ch : b) ++count[ch];
  std::array<std::size_t, 256> next{};
  for (std::size_t ch = 0, acc = 0; ch < 256; ++ch) {
    next[ch] = acc;
    acc += count[ch];
  }
  std::vector<std::size_t> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = next[b[i]]++;

  // Each cycle, read backwards, is one conjugate of a Lyndon factor.
  std::vector<bool> seen(n, false);
  std::vector<Bytes> words;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Bytes w;
    for (std::size_t j = i; !seen[j]; j = pi[j]) {
      seen[j] = true;
      w.push_back(b[j]);
    }
    std::reverse(w.begin(), w.end());
    std::rotate(w.begin(), w.begin() + min_conjugate(w), w.end());
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end(), [](const Bytes& a, const Bytes& c) {
    return lex_compare(a, c) == Ordering::Greater;
  });
  Bytes out;
  out.reserve(n);
  for (const Bytes& w : words) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::vector<std::size_t> suffix_array(std::span<const Byte> text) {
  const std::size_t n = text.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) rank[i] = text[i];
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t a) {
      const long long second = a + k < n ? static_cast<long long>(rank[a + k]) : -1;
      return std::pair<std::size_t, long long>(rank[a], second);
    };
    std::sort(sa.begin(), sa.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i)
      tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  for (std::size_t& p : sa) ++p;
  return sa;
}

Bytes bwt_baseline(std::span<const Byte> text) {
  const std::vector<std::size_t> sa = suffix_array(text);
  Bytes out;
  out.reserve(text.size());
  for (std::size_t p : sa) out.push_back(p == 1 ? text.back() : text[p - 2]);
  return out;
}

Bytes bwt_dollar(std::span<const Byte> text) {
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == 0) throw SentinelPresent(i + 1);
  Bytes t(text.begin(), text.end());
  t.push_back(0);
  const std::vector<std::size_t> sa = suffix_array(t);
  Bytes out;
  out.reserve(t.size());
  for (std::size_t p : sa) out.push_back(p == 1 ? t.back() : t[p - 2]);
  return out;
}

Bytes ebwt(const std::vector<Bytes>& strings) {
  std::vector<Bytes> words;
  words.reserve(strings.size());
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].empty()) throw EmptyString(i);
    if (!is_primitive(strings[i])) throw NonPrimitiveInput(i);
    Bytes w = strings[i];
    std::rotate(w.begin(), w.begin() + min_conjugate(w), w.end());
    words.push_back(std::move(w));
  }
  // Descending Lyndon words concatenate into a text whose factorization is
  // exactly this multiset.
  std::sort(words.begin(), words.end(), [](const Bytes& a, const Bytes& b) {
    return lex_compare(a, b) == Ordering::Greater;
  });
  Bytes text;
  for (const Bytes& w : words) text.insert(text.end(), w.begin(), w.end());
  return bbwt(text).output;
}

std::optional<std::uint64_t> bbwt_order(std::span<const Byte> text,
                                        std::uint64_t max_k) {
  assert(max_k >= 1);
  Bytes cur(text.begin(), text.end());
  for (std::uint64_t k = 1; k <= max_k; ++k) {
    cur = bbwt(cur).output;
    if (std::equal(cur.begin(), cur.end(), text.begin(), text.end())) return k;
  }
  return std::nullopt;
}

}  // namespace bbwt
