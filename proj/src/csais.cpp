#include "bbwt/csais.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace bbwt {
namespace {

using Sym = std::uint32_t;
constexpr std::uint32_t kNoRank = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kEmpty = std::numeric_limits<std::size_t>::max();

// One recursion level: symbols plus the factor tiling, everything 0-based.
struct Level {
  std::vector<Sym> sym;
  std::vector<std::size_t> fbeg, fend;  // inclusive, per factor
  std::vector<std::uint32_t> fid;       // factor index per position
  Sym sigma = 0;                        // strict upper bound on symbols
};

std::size_t prev_pos(const Level& lv, std::size_t i) {
  const std::uint32_t f = lv.fid[i];
  return i == lv.fbeg[f] ? lv.fend[f] : i - 1;
}

bool unit_factor(const Level& lv, std::uint32_t f) {
  return lv.fbeg[f] == lv.fend[f];
}

Level level_from(const ComposedFactorization& cf) {
  Level lv;
  lv.sym.assign(cf.reduced_text.begin(), cf.reduced_text.end());
  lv.fbeg.reserve(cf.spans.size());
  lv.fend.reserve(cf.spans.size());
  for (const FactorSpan& s : cf.spans) {
    lv.fbeg.push_back(s.begin - 1);
    lv.fend.push_back(s.end - 1);
  }
  lv.fid = cf.factor_ids;
  lv.sigma = 256;
  return lv;
}

std::vector<SuffixType> classify(const Level& lv) {
  std::vector<SuffixType> t(lv.sym.size(), SuffixType::S);
  for (std::size_t f = 0; f < lv.fbeg.size(); ++f) {
    const std::size_t b = lv.fbeg[f], e = lv.fend[f];
    if (b == e) {
      t[b] = SuffixType::Sstar;
      continue;
    }
    // The last symbol of a Lyndon word of length >= 2 exceeds its first, so
    // the scan can be seeded with L at the factor end.
    t[e] = SuffixType::L;
    for (std::size_t i = e; i-- > b;)
      t[i] = lv.sym[i] < lv.sym[i + 1]   ? SuffixType::S
             : lv.sym[i] > lv.sym[i + 1] ? SuffixType::L
                                         : t[i + 1];
    for (std::size_t i = e; i > b; --i)
      if (t[i] == SuffixType::S && t[i - 1] == SuffixType::L)
        t[i] = SuffixType::Sstar;
    assert(t[b] != SuffixType::L);
    t[b] = SuffixType::Sstar;
  }
  return t;
}

// All LMS inf-substrings in text order, contents materialized into one pool.
struct Carved {
  struct Item {
    std::size_t start;     // 0-based, type Sstar
    std::size_t end;       // 0-based last position before the closing Sstar
    std::uint32_t factor;  // 0-based
    std::size_t off, len;  // view into the pools, closing symbol included
  };
  std::vector<Item> items;
  std::vector<Sym> pool;
  std::vector<SuffixType> tpool;

  std::span<const Sym> content(std::size_t i) const {
    return {pool.data() + items[i].off, items[i].len};
  }
  std::span<const SuffixType> types(std::size_t i) const {
    return {tpool.data() + items[i].off, items[i].len};
  }
};

Carved carve(const Level& lv, const std::vector<SuffixType>& t) {
  Carved c;
  std::vector<std::size_t> stars;
  for (std::uint32_t f = 0; f < lv.fbeg.size(); ++f) {
    const std::size_t b = lv.fbeg[f], e = lv.fend[f];
    stars.clear();
    for (std::size_t i = b; i <= e; ++i)
      if (t[i] == SuffixType::Sstar) stars.push_back(i);
    for (std::size_t k = 0; k < stars.size(); ++k) {
      const bool wraps = k + 1 == stars.size();
      const std::size_t start = stars[k];
      const std::size_t end = wraps ? e : stars[k + 1] - 1;
      const std::size_t closer = wraps ? b : stars[k + 1];
      const std::size_t off = c.pool.size();
      for (std::size_t i = start; i <= end; ++i) {
        c.pool.push_back(lv.sym[i]);
        c.tpool.push_back(t[i]);
      }
      c.pool.push_back(lv.sym[closer]);
      c.tpool.push_back(t[closer]);  // always Sstar
      c.items.push_back({start, end, f, off, c.pool.size() - off});
    }
  }
  return c;
}

struct LmsRanking {
  std::vector<std::uint32_t> rank;  // per item; kNoRank for unit factors
  std::uint32_t distinct = 0;
  bool all_distinct = true;
};

LmsRanking rank_carved(const Level& lv, const Carved& c) {
  LmsRanking r;
  r.rank.assign(c.items.size(), kNoRank);
  std::vector<std::uint32_t> kept;
  for (std::uint32_t i = 0; i < c.items.size(); ++i)
    if (!unit_factor(lv, c.items[i].factor)) kept.push_back(i);
  std::sort(kept.begin(), kept.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lms_compare(c.content(a), c.types(a), c.content(b), c.types(b)) ==
           Ordering::Less;
  });
  std::uint32_t cur = 0;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (k > 0) {
      const Ordering ord = lms_compare(c.content(kept[k - 1]), c.types(kept[k - 1]),
                                       c.content(kept[k]), c.types(kept[k]));
      if (ord == Ordering::Equal)
        r.all_distinct = false;
      else
        ++cur;
    }
    r.rank[kept[k]] = cur;
  }
  r.distinct = kept.empty() ? 0 : cur + 1;
  return r;
}

std::vector<std::size_t> build_csa(const Level& lv, CsaisStats* stats);

std::vector<std::size_t> order_sstar(const Level& lv,
                                     const std::vector<SuffixType>& t,
                                     CsaisStats* stats) {
  const Carved c = carve(lv, t);
  const LmsRanking r = rank_carved(lv, c);

  std::size_t kept_total = 0;
  for (std::uint32_t rk : r.rank)
    if (rk != kNoRank) ++kept_total;
  if (stats)
    stats->levels.push_back({lv.sym.size(), kept_total, r.all_distinct});

  std::vector<std::size_t> kept_order;
  if (kept_total > 0) {
    if (r.all_distinct) {
      kept_order.assign(kept_total, 0);
      for (std::size_t i = 0; i < c.items.size(); ++i)
        if (r.rank[i] != kNoRank) kept_order[r.rank[i]] = c.items[i].start;
    } else {
      // The rank string keeps the factor borders of R, so it is the next
      // level's composed factorization (all multiplicities one).
      Level red;
      std::vector<std::size_t> back;
      red.sym.reserve(kept_total);
      back.reserve(kept_total);
      std::uint32_t cur_factor = std::numeric_limits<std::uint32_t>::max();
      for (std::size_t i = 0; i < c.items.size(); ++i) {
        if (r.rank[i] == kNoRank) continue;
        if (c.items[i].factor != cur_factor) {
          cur_factor = c.items[i].factor;
          red.fbeg.push_back(red.sym.size());
          red.fend.push_back(red.sym.size());
        } else {
          red.fend.back() = red.sym.size();
        }
        red.fid.push_back(static_cast<std::uint32_t>(red.fbeg.size() - 1));
        red.sym.push_back(r.rank[i]);
        back.push_back(c.items[i].start);
      }
      red.sigma = r.distinct;
#ifndef NDEBUG
      for (std::size_t f = 0; f + 1 < red.fbeg.size(); ++f) {
        const std::span<const Sym> a{red.sym.data() + red.fbeg[f],
                                     red.fend[f] - red.fbeg[f] + 1};
        const std::span<const Sym> b{red.sym.data() + red.fbeg[f + 1],
                                     red.fend[f + 1] - red.fbeg[f + 1] + 1};
        assert(lex_compare(a, b) == Ordering::Greater);
      }
#endif
      const std::vector<std::size_t> sub = build_csa(red, stats);
      kept_order.reserve(sub.size());
      for (std::size_t p : sub) kept_order.push_back(back[p]);
    }
  }

  // Reinsert the omitted unit factors. The factors of R are strictly
  // decreasing, so the unit symbols strictly increase when read backwards,
  // and a unit symbol precedes every longer inf-suffix with the same head.
  std::vector<std::pair<Sym, std::size_t>> units;
  for (const Carved::Item& it : c.items)
    if (unit_factor(lv, it.factor)) units.emplace_back(lv.sym[it.start], it.start);
  std::reverse(units.begin(), units.end());
#ifndef NDEBUG
  for (std::size_t k = 0; k + 1 < units.size(); ++k)
    assert(units[k].first < units[k + 1].first);
#endif
  std::vector<std::size_t> out;
  out.reserve(kept_order.size() + units.size());
  std::size_t ki = 0;
  for (const auto& [usym, upos] : units) {
    while (ki < kept_order.size() && lv.sym[kept_order[ki]] < usym)
      out.push_back(kept_order[ki++]);
    out.push_back(upos);
  }
  while (ki < kept_order.size()) out.push_back(kept_order[ki++]);
  return out;
}

std::vector<std::size_t> induce_from(const Level& lv,
                                     const std::vector<SuffixType>& t,
                                     std::span<const std::size_t> sstar,
                                     std::vector<std::size_t>* after_l) {
  const std::size_t n = lv.sym.size();
  std::vector<std::size_t> sa(n, kEmpty);
  std::vector<std::size_t> lstart(lv.sigma), sstart(lv.sigma), send(lv.sigma);
  {
    std::vector<std::size_t> lcnt(lv.sigma, 0), scnt(lv.sigma, 0);
    for (std::size_t i = 0; i < n; ++i)
      (t[i] == SuffixType::L ? lcnt : scnt)[lv.sym[i]]++;
    std::size_t acc = 0;
    for (Sym ch = 0; ch < lv.sigma; ++ch) {
      lstart[ch] = acc;
      acc += lcnt[ch];
      sstart[ch] = acc;
      acc += scnt[ch];
      send[ch] = acc;
    }
  }

  // Seed. A unit factor is the strict minimum of its symbol's S bucket and
  // nothing induces it (its predecessor is itself), so it goes straight to
  // the bucket head; everything else fills the tails in reverse order.
  {
    std::vector<std::size_t> tail(send);
    for (auto it = sstar.rbegin(); it != sstar.rend(); ++it) {
      const std::size_t p = *it;
      if (unit_factor(lv, lv.fid[p]))
        sa[sstart[lv.sym[p]]] = p;
      else
        sa[--tail[lv.sym[p]]] = p;
    }
  }

  {  // left-to-right: place L predecessors at bucket heads
    std::vector<std::size_t> head(lstart);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = sa[k];
      if (i == kEmpty) continue;
      const std::size_t j = prev_pos(lv, i);
      if (j != i && t[j] == SuffixType::L) sa[head[lv.sym[j]]++] = j;
    }
  }
  if (after_l) *after_l = sa;

  {  // right-to-left: place S predecessors at bucket tails
    std::vector<std::size_t> tail(send);
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t i = sa[k];
      if (i == kEmpty) continue;
      const std::size_t j = prev_pos(lv, i);
      if (j != i && t[j] != SuffixType::L) sa[--tail[lv.sym[j]]] = j;
    }
  }
#ifndef NDEBUG
  for (std::size_t k = 0; k < n; ++k) assert(sa[k] != kEmpty);
#endif
  return sa;
}

std::vector<std::size_t> build_csa(const Level& lv, CsaisStats* stats) {
  if (lv.sym.empty()) return {};
  const std::vector<SuffixType> t = classify(lv);
  const std::vector<std::size_t> ss = order_sstar(lv, t, stats);
  return induce_from(lv, t, ss, nullptr);
}

}  // namespace

TypeArray classify_inf_types(const ComposedFactorization& cf) {
  return classify(level_from(cf));
}

std::vector<LmsInfSubstring> lms_inf_substrings(const ComposedFactorization& cf,
                                                const TypeArray& types) {
  const Level lv = level_from(cf);
  const Carved c = carve(lv, types);
  std::vector<LmsInfSubstring> out;
  out.reserve(c.items.size());
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    const Carved::Item& it = c.items[i];
    LmsInfSubstring s;
    s.factor = it.factor + 1;
    s.start = it.start + 1;
    s.end = it.end + 1;
    const auto content = c.content(i);
    const auto ctypes = c.types(i);
    s.content.reserve(content.size());
    for (Sym v : content) s.content.push_back(static_cast<Byte>(v));
    s.content_types.assign(ctypes.begin(), ctypes.end());
    out.push_back(std::move(s));
  }
  return out;
}

LmsRanks rank_lms(const std::vector<LmsInfSubstring>& subs) {
  LmsRanks out;
  out.ranks.resize(subs.size());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (!is_unit(subs[i])) kept.push_back(i);
  auto cmp = [&](std::size_t a, std::size_t b) {
    return lms_compare(subs[a].content,
                       std::span<const SuffixType>(subs[a].content_types),
                       subs[b].content,
                       std::span<const SuffixType>(subs[b].content_types));
  };
  std::sort(kept.begin(), kept.end(),
            [&](std::size_t a, std::size_t b) { return cmp(a, b) == Ordering::Less; });
  std::uint32_t cur = 1;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (k > 0) {
      if (cmp(kept[k - 1], kept[k]) == Ordering::Equal)
        out.all_distinct = false;
      else
        ++cur;
    }
    out.ranks[kept[k]] = cur;
  }
  return out;
}

ReducedProblem build_reduced(const ComposedFactorization& cf,
                             const TypeArray& types, const LmsRanks& ranks) {
  const Level lv = level_from(cf);
  const Carved c = carve(lv, types);
  assert(ranks.ranks.size() == c.items.size());
  ReducedProblem out;
  std::uint32_t cur_factor = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    const Carved::Item& it = c.items[i];
    if (unit_factor(lv, it.factor)) {
      out.omitted.emplace_back(cf.reduced_text[it.start], it.factor + 1);
      continue;
    }
    if (it.factor != cur_factor) {
      cur_factor = it.factor;
      out.spans.push_back({out.ranks.size() + 1, out.ranks.size() + 1});
    } else {
      out.spans.back().end = out.ranks.size() + 1;
    }
    out.ranks.push_back(*ranks.ranks[i]);
    out.back_map.push_back(it.start + 1);
  }
  return out;
}

std::vector<std::size_t> solve_sstar_order(const ComposedFactorization& cf,
                                           const TypeArray& types) {
  const Level lv = level_from(cf);
  std::vector<std::size_t> out = order_sstar(lv, types, nullptr);
  for (std::size_t& p : out) ++p;
  return out;
}

CircularSuffixArray induce(const ComposedFactorization& cf,
                           const TypeArray& types,
                           std::span<const std::size_t> sstar_order,
                           InduceSnapshot* snapshot) {
  const Level lv = level_from(cf);
  std::vector<std::size_t> ss(sstar_order.begin(), sstar_order.end());
  for (std::size_t& p : ss) --p;
  std::vector<std::size_t> after_l;
  std::vector<std::size_t> sa =
      induce_from(lv, types, ss, snapshot ? &after_l : nullptr);
  if (snapshot) {
    snapshot->after_l_pass.assign(after_l.size(), 0);
    for (std::size_t k = 0; k < after_l.size(); ++k)
      if (after_l[k] != kEmpty) snapshot->after_l_pass[k] = after_l[k] + 1;
  }
  CircularSuffixArray out;
  out.entries = std::move(sa);
  for (std::size_t& p : out.entries) ++p;
  return out;
}

CircularSuffixArray circular_suffix_array(const ComposedFactorization& cf,
                                          CsaisStats* stats) {
  CircularSuffixArray out;
  out.entries = build_csa(level_from(cf), stats);
  for (std::size_t& p : out.entries) ++p;
  return out;
}

}  // namespace bbwt
