#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bbwt/oracle.hpp"
#include "bbwt/orders.hpp"
#include "bbwt/transform.hpp"
#include "support/testutil.hpp"

using bbwt::Bytes;
using bbwt::to_bytes;
using testutil::for_each_string;

namespace {

const std::string kRunning = "cbbcacbbcadacbadacba";

// Direct definition of the extended BWT: sort all conjugates of all inputs
// by omega order (stable) and take last characters.
Bytes direct_ebwt(const std::vector<Bytes>& strings) {
  std::vector<Bytes> conj;
  for (const Bytes& s : strings)
    for (std::size_t r = 0; r < s.size(); ++r) {
      Bytes w(s.begin() + r, s.end());
      w.insert(w.end(), s.begin(), s.begin() + r);
      conj.push_back(std::move(w));
    }
  std::stable_sort(conj.begin(), conj.end(), [](const Bytes& a, const Bytes& b) {
    return bbwt::omega_compare(a, b) == bbwt::Ordering::Less;
  });
  Bytes out;
  for (const Bytes& c : conj) out.push_back(c.back());
  return out;
}

}  // namespace

TEST_CASE("bbwt golden vectors") {
  CHECK(bbwt::to_string(bbwt::bbwt(to_bytes(kRunning)).output) ==
        "abddbcccccbbbaaabcaa");
  CHECK(bbwt::to_string(bbwt::bbwt(to_bytes("a")).output) == "a");
  CHECK(bbwt::to_string(bbwt::bbwt(to_bytes("banana")).output) == "annbaa");
  CHECK(bbwt::bbwt(Bytes{}).output.empty());
}

TEST_CASE("bbwt provenance covers every output byte") {
  const Bytes t = to_bytes("banana");
  const auto r = bbwt::bbwt(t, /*with_provenance=*/true);
  REQUIRE(r.provenance.size() == r.output.size());
  // R = bana; the two outputs coming from the "an" factor carry tau = 2
  std::size_t doubled = 0;
  for (const auto& p : r.provenance) {
    CHECK(p.source >= 1);
    CHECK(p.source <= 4);
    if (p.multiplicity == 2) ++doubled;
  }
  CHECK(doubled == 4);
  CHECK(bbwt::bbwt(t, false).provenance.empty());
}

TEST_CASE("inverse_bbwt golden round trips") {
  CHECK(bbwt::to_string(bbwt::inverse_bbwt(to_bytes("abddbcccccbbbaaabcaa"))) ==
        kRunning);
  CHECK(bbwt::to_string(bbwt::inverse_bbwt(to_bytes("a"))) == "a");
  CHECK(bbwt::to_string(bbwt::inverse_bbwt(to_bytes("annbaa"))) == "banana");
  CHECK(bbwt::inverse_bbwt(Bytes{}).empty());
}

TEST_CASE("bbwt agrees with the naive oracle and round-trips exhaustively") {
  for_each_string("ab", 12, [&](const Bytes& s) {
    const Bytes out = bbwt::bbwt(s).output;
    REQUIRE(out == bbwt::oracle::naive_bbwt(s));
    REQUIRE(bbwt::inverse_bbwt(out) == s);
  });
  for_each_string("abc", 8, [&](const Bytes& s) {
    const Bytes out = bbwt::bbwt(s).output;
    REQUIRE(out == bbwt::oracle::naive_bbwt(s));
    REQUIRE(bbwt::inverse_bbwt(out) == s);
  });
}

TEST_CASE("bbwt round-trips on large random inputs") {
  std::mt19937_64 rng(47);
  for (int alphabet : {2, 4, 16, 256}) {
    for (int t = 0; t < 20; ++t) {
      Bytes s(5000 + rng() % 5000);
      for (auto& c : s) c = static_cast<bbwt::Byte>(rng() % alphabet);
      const Bytes out = bbwt::bbwt(s).output;
      REQUIRE(out.size() == s.size());
      REQUIRE(bbwt::inverse_bbwt(out) == s);
    }
  }
}

TEST_CASE("bbwt preserves the character multiset") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    Bytes s(rng() % 300);
    for (auto& c : s) c = static_cast<bbwt::Byte>(rng() & 0xFF);
    Bytes out = bbwt::bbwt(s).output;
    Bytes a = s, b = out;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a == b);
  }
}

TEST_CASE("bbwt is injective at fixed length") {
  std::set<Bytes> images;
  for_each_string("ab", 6, [&](const Bytes& s) {
    if (s.size() == 6) images.insert(bbwt::bbwt(s).output);
  });
  CHECK(images.size() == 64);
}

TEST_CASE("suffix_array and bwt_baseline reproduce the worked rows") {
  const Bytes t = to_bytes(kRunning);
  CHECK(bbwt::suffix_array(t) ==
        std::vector<std::size_t>{20, 17, 12, 5, 15, 10, 19, 14, 2, 7,
                                 3, 8, 4, 9, 18, 13, 1, 6, 16, 11});
  CHECK(bbwt::to_string(bbwt::bwt_baseline(t)) == "bddcbcccccbbbbaaaaaa");
  CHECK(bbwt::to_string(bbwt::bwt_baseline(to_bytes("a"))) == "a");
}

TEST_CASE("suffix_array equals the comparison-sort oracle") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> len(1, 400), ch('a', 'c');
  for (int t = 0; t < 150; ++t) {
    Bytes s(len(rng));
    for (auto& c : s) c = static_cast<bbwt::Byte>(ch(rng));
    REQUIRE(bbwt::suffix_array(s) == bbwt::oracle::naive_sa(s));
  }
}

TEST_CASE("bwt_dollar appends the sentinel and stays reversible-shaped") {
  const Bytes t = to_bytes(kRunning);
  const Bytes out = bbwt::bwt_dollar(t);
  std::string shown;
  for (bbwt::Byte c : out) shown += c == 0 ? '$' : static_cast<char>(c);
  CHECK(shown == "abddcbcccccbbbbaa$aaa");
  CHECK(out.size() == t.size() + 1);

  Bytes bad = to_bytes("ab");
  bad.push_back(0);
  bad.push_back('c');
  CHECK_THROWS_AS((void)bbwt::bwt_dollar(bad), bbwt::SentinelPresent);
  try {
    (void)bbwt::bwt_dollar(bad);
  } catch (const bbwt::SentinelPresent& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("ebwt golden values and rotation invariance") {
  CHECK(bbwt::to_string(bbwt::ebwt({to_bytes("a")})) == "a");
  CHECK(bbwt::to_string(bbwt::ebwt({to_bytes("ab"), to_bytes("b")})) == "bab");
  CHECK(bbwt::ebwt({to_bytes("ba"), to_bytes("cb")}) ==
        bbwt::ebwt({to_bytes("ab"), to_bytes("bc")}));
}

TEST_CASE("ebwt rejects bad inputs naming the index") {
  CHECK_THROWS_AS((void)bbwt::ebwt({to_bytes("ab"), to_bytes("abab")}),
                  bbwt::NonPrimitiveInput);
  try {
    (void)bbwt::ebwt({to_bytes("ab"), to_bytes("abab")});
  } catch (const bbwt::NonPrimitiveInput& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS((void)bbwt::ebwt({to_bytes("ab"), Bytes{}}), bbwt::EmptyString);
}

TEST_CASE("ebwt equals the direct conjugate-sort definition") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> nstr(1, 6), len(1, 10), ch('a', 'c');
  int done = 0;
  while (done < 300) {
    std::vector<Bytes> multiset(nstr(rng));
    bool ok = true;
    for (Bytes& s : multiset) {
      s.resize(len(rng));
      for (auto& c : s) c = static_cast<bbwt::Byte>(ch(rng));
      ok = ok && bbwt::is_primitive(s);
    }
    if (!ok) continue;
    ++done;
    REQUIRE(bbwt::ebwt(multiset) == direct_ebwt(multiset));
  }
}

TEST_CASE("bbwt_order finds the smallest fixed-point exponent") {
  CHECK(bbwt::bbwt_order(to_bytes("a"), 10) == 1);

  const Bytes ab = to_bytes("ab");
  const auto k = bbwt::bbwt_order(ab, 100);
  REQUIRE(k.has_value());
  Bytes cur = ab;
  for (std::uint64_t i = 0; i < *k; ++i) cur = bbwt::bbwt(cur).output;
  CHECK(cur == ab);
  CHECK(*k == 2);
  for (std::uint64_t i = 1; i < *k; ++i) {
    Bytes probe = ab;
    for (std::uint64_t j = 0; j < i; ++j) probe = bbwt::bbwt(probe).output;
    CHECK(probe != ab);
  }

  CHECK(!bbwt::bbwt_order(ab, 1).has_value());
}

TEST_CASE("bbwt_order terminates on every short binary string") {
  for_each_string("ab", 6, [&](const Bytes& s) {
    const auto k = bbwt::bbwt_order(s, 100000);
    REQUIRE(k.has_value());
    Bytes cur = s;
    for (std::uint64_t i = 0; i < *k; ++i) cur = bbwt::bbwt(cur).output;
    REQUIRE(cur == s);
  });
}
