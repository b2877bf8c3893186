#include "bbwt/lyndon.hpp"

#include <algorithm>
#include <cassert>

namespace bbwt {

FactorRef ComposedFactorization::factor_of(std::size_t i) const {
  assert(i >= 1 && i <= reduced_text.size());
  const std::size_t f = factor_ids[i - 1];
  return {f + 1, spans[f].begin, spans[f].end};
}

std::size_t ComposedFactorization::cyclic_next(std::size_t i) const {
  const FactorSpan& s = spans[factor_ids[i - 1]];
  return i == s.end ? s.begin : i + 1;
}

std::size_t ComposedFactorization::cyclic_prev(std::size_t i) const {
  const FactorSpan& s = spans[factor_ids[i - 1]];
  return i == s.begin ? s.end : i - 1;
}

ComposedFactorization compose(const LyndonFactorization& f,
                              std::span<const Byte> text) {
  assert(f.text_length == text.size());
  ComposedFactorization cf;
  cf.origin_length = f.text_length;
  std::size_t x = 0;
  while (x < f.spans.size()) {
    const FactorSpan s = f.spans[x];
    std::size_t run = 1;
    while (x + run < f.spans.size()) {
      const FactorSpan t = f.spans[x + run];
      if (t.length() != s.length() ||
          !std::equal(text.begin() + (s.begin - 1), text.begin() + s.end,
                      text.begin() + (t.begin - 1)))
        break;
      ++run;
    }
    const std::size_t rb = cf.reduced_text.size() + 1;
    cf.reduced_text.insert(cf.reduced_text.end(),
                           text.begin() + (s.begin - 1), text.begin() + s.end);
    cf.spans.push_back({rb, cf.reduced_text.size()});
    cf.multiplicities.push_back(run);
    x += run;
  }
  cf.factor_ids.resize(cf.reduced_text.size());
  for (std::size_t fi = 0; fi < cf.spans.size(); ++fi)
    for (std::size_t p = cf.spans[fi].begin; p <= cf.spans[fi].end; ++p)
      cf.factor_ids[p - 1] = static_cast<std::uint32_t>(fi);
  return cf;
}

Bytes expand(const ComposedFactorization& cf) {
  Bytes out;
  out.reserve(cf.origin_length);
  for (std::size_t x = 0; x < cf.spans.size(); ++x) {
    const FactorSpan& s = cf.spans[x];
    for (std::size_t rep = 0; rep < cf.multiplicities[x]; ++rep)
      out.insert(out.end(), cf.reduced_text.begin() + (s.begin - 1),
                 cf.reduced_text.begin() + s.end);
  }
  return out;
}

std::vector<ComposedRun> composed_runs(const LyndonFactorization& f,
                                       std::span<const Byte> text) {
  std::vector<ComposedRun> out;
  std::size_t x = 0;
  while (x < f.spans.size()) {
    const FactorSpan s = f.spans[x];
    std::size_t run = 1;
    while (x + run < f.spans.size()) {
      const FactorSpan t = f.spans[x + run];
      if (t.length() != s.length() ||
          !std::equal(text.begin() + (s.begin - 1), text.begin() + s.end,
                      text.begin() + (t.begin - 1)))
        break;
      ++run;
    }
    out.push_back({s.begin, f.spans[x + run - 1].end, run});
    x += run;
  }
  return out;
}

}  // namespace bbwt
