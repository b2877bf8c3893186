#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bbwt/bench.hpp"
#include "bbwt/csais.hpp"
#include "bbwt/lyndon.hpp"
#include "bbwt/oracle.hpp"
#include "bbwt/transform.hpp"

namespace {

using bbwt::Byte;
using bbwt::Bytes;

Bytes read_input(const std::string& path) {
  Bytes data;
  std::FILE* f = path == "-" ? stdin : std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  char buf[1 << 16];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0)
    data.insert(data.end(), buf, buf + got);
  if (std::ferror(f)) {
    if (f != stdin) std::fclose(f);
    throw std::runtime_error("read failure on " + path);
  }
  if (f != stdin) std::fclose(f);
  return data;
}

void write_output(const std::string& path, const void* data, std::size_t n) {
  std::FILE* f = path == "-" ? stdout : std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path);
  if (n > 0 && std::fwrite(data, 1, n, f) != n) {
    if (f != stdout) std::fclose(f);
    throw std::runtime_error("write failure on " + path);
  }
  if (f != stdout)
    std::fclose(f);
  else
    std::fflush(f);
}

void write_output(const std::string& path, const Bytes& data) {
  write_output(path, data.data(), data.size());
}

void write_output(const std::string& path, const std::string& data) {
  write_output(path, data.data(), data.size());
}

std::string escape_byte(Byte c) {
  switch (c) {
    case '\t': return "\\t";
    case '\n': return "\\n";
    case '\r': return "\\r";
    case '\\': return "\\\\";
    default: break;
  }
  if (c >= 0x20 && c <= 0x7E) return std::string(1, static_cast<char>(c));
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02X", c);
  return buf;
}

std::string escape(const Bytes& b) {
  std::string out;
  for (Byte c : b) out += escape_byte(c);
  return out;
}

// 1 -> A, 26 -> Z, 27 -> AA, ...
std::string rank_letters(std::uint32_t rank) {
  std::string out;
  while (rank > 0) {
    rank -= 1;
    out.insert(out.begin(), static_cast<char>('A' + rank % 26));
    rank /= 26;
  }
  return out;
}

std::string type_token(bbwt::SuffixType t) {
  switch (t) {
    case bbwt::SuffixType::L: return "L";
    case bbwt::SuffixType::S: return "S";
    case bbwt::SuffixType::Sstar: return "S*";
  }
  return "?";
}

template <class Seq>
std::string tab_joined(const Seq& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += '\t';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string run_trace(const Bytes& text) {
  const bbwt::LyndonFactorization f = bbwt::duval_factorize(text);
  const bbwt::ComposedFactorization cf = bbwt::compose(f, text);
  const bbwt::TypeArray types = bbwt::classify_inf_types(cf);
  const auto subs = bbwt::lms_inf_substrings(cf, types);
  const auto ranks = bbwt::rank_lms(subs);
  const auto sstar = bbwt::solve_sstar_order(cf, types);
  const auto csa = bbwt::induce(cf, types, sstar);

  std::string out;
  out += "[factorization]\n";
  const auto runs = bbwt::composed_runs(f, text);
  for (const auto& r : runs) {
    const Bytes content(text.begin() + (r.begin - 1),
                        text.begin() + (r.begin - 1 + (r.end - r.begin + 1) / r.multiplicity));
    out += std::to_string(r.begin) + '\t' + std::to_string(r.end) + '\t' +
           std::to_string(r.multiplicity) + '\t' + escape(content) + '\n';
  }

  out += "[types]\n";
  if (!types.empty()) {
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (i) out += '\t';
      out += type_token(types[i]);
    }
    out += '\n';
  }

  out += "[lms]\n";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    out += std::to_string(subs[i].start) + '\t' + escape(subs[i].content) + '\t';
    out += ranks.ranks[i] ? rank_letters(*ranks.ranks[i]) : "-";
    out += '\n';
  }

  out += "[sstar_order]\n";
  if (!sstar.empty()) out += tab_joined(sstar) + '\n';

  out += "[buckets]\n";
  {
    std::size_t lcnt[256] = {0}, scnt[256] = {0};
    for (std::size_t i = 0; i < cf.reduced_text.size(); ++i)
      (types[i] == bbwt::SuffixType::L ? lcnt : scnt)[cf.reduced_text[i]]++;
    std::size_t at = 1;
    for (unsigned ch = 0; ch < 256; ++ch) {
      if (lcnt[ch]) {
        out += escape_byte(static_cast<Byte>(ch)) + "\tL\t" + std::to_string(at) +
               '\t' + std::to_string(at + lcnt[ch] - 1) + '\n';
        at += lcnt[ch];
      }
      if (scnt[ch]) {
        out += escape_byte(static_cast<Byte>(ch)) + "\tS\t" + std::to_string(at) +
               '\t' + std::to_string(at + scnt[ch] - 1) + '\n';
        at += scnt[ch];
      }
    }
  }

  out += "[csa]\n";
  if (!csa.entries.empty()) out += tab_joined(csa.entries) + '\n';

  out += "[csa_prev]\n";
  if (!csa.entries.empty()) {
    std::vector<std::size_t> prev;
    prev.reserve(csa.entries.size());
    for (std::size_t p : csa.entries) prev.push_back(cf.cyclic_prev(p));
    out += tab_joined(prev) + '\n';
  }

  out += "[bbwt]\n";
  out += escape(bbwt::bbwt(text).output) + '\n';
  return out;
}

const char* pattern_name(bbwt::BenchPattern p) {
  switch (p) {
    case bbwt::BenchPattern::Random: return "random";
    case bbwt::BenchPattern::Unary: return "unary";
    case bbwt::BenchPattern::Alternating: return "alternating";
    case bbwt::BenchPattern::Decreasing: return "decreasing";
  }
  return "?";
}

std::string run_bench(const bbwt::BenchConfig& cfg) {
  std::string out = "size,pattern,alphabet,rep,nanoseconds,bytes_per_second\n";
  for (std::size_t size : cfg.sizes) {
    const Bytes input = bbwt::bench_input(cfg.pattern, cfg.alphabet, size, cfg.seed);
    for (std::size_t rep = 1; rep <= cfg.repetitions; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      volatile std::size_t sink = bbwt::bbwt(input).output.size();
      const auto t1 = std::chrono::steady_clock::now();
      (void)sink;
      const auto ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      const double bps = ns > 0 ? size * 1e9 / static_cast<double>(ns) : 0.0;
      char row[160];
      std::snprintf(row, sizeof row, "%zu,%s,%u,%zu,%lld,%.0f\n", size,
                    pattern_name(cfg.pattern), cfg.alphabet, rep,
                    static_cast<long long>(ns), bps);
      out += row;
    }
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"bijective Burrows-Wheeler transform toolkit"};
  app.require_subcommand(1);

  std::string input = "-", output = "-";
  auto add_io = [&](CLI::App* sub, bool with_output = true) {
    sub->add_option("input", input, "input file, or - for stdin");
    if (with_output) sub->add_option("-o,--output", output, "output file, or - for stdout");
  };

  auto* enc = app.add_subcommand("encode", "forward transform, raw bytes in and out");
  add_io(enc);
  auto* dec = app.add_subcommand("decode", "inverse transform, raw bytes in and out");
  add_io(dec);
  auto* fac = app.add_subcommand("factorize", "composed factors as start/end/multiplicity lines");
  add_io(fac);

  auto* csa = app.add_subcommand("csa", "circular suffix array of the reduced text");
  add_io(csa);
  bool csa_binary = false;
  csa->add_flag("--binary", csa_binary, "64-bit little-endian entries instead of decimal lines");

  auto* bwt = app.add_subcommand("bwt", "traditional BWT baseline");
  add_io(bwt);
  bool dollar = false;
  bwt->add_flag("--dollar", dollar, "reversible variant over text plus sentinel");

  auto* ebw = app.add_subcommand("ebwt", "extended BWT of separator-delimited strings");
  add_io(ebw);
  unsigned sep = 0;
  ebw->add_option("--sep", sep, "separator byte value")->check(CLI::Range(0, 255));

  auto* ord = app.add_subcommand("order", "smallest k with the k-fold transform equal to the input");
  add_io(ord);
  std::uint64_t max_k = 1000000;
  ord->add_option("--max-k", max_k, "iteration cap")->check(CLI::PositiveNumber);

  auto* tra = app.add_subcommand("trace", "tab-separated construction tables");
  add_io(tra);

  auto* ben = app.add_subcommand("bench", "deterministic benchmark, CSV on stdout");
  bbwt::BenchConfig cfg;
  ben->add_option("--sizes", cfg.sizes, "input lengths")->required()->delimiter(',');
  ben->add_option("--seed", cfg.seed, "PRNG seed");
  ben->add_option("--alphabet", cfg.alphabet, "alphabet size")
      ->check(CLI::IsMember({2u, 4u, 16u, 256u}));
  std::string pattern = "random";
  ben->add_option("--pattern", pattern, "input family")
      ->check(CLI::IsMember({"random", "unary", "alternating", "decreasing"}));
  ben->add_option("--reps", cfg.repetitions, "repetitions per size")
      ->check(CLI::PositiveNumber);
  ben->add_option("-o,--output", output, "output file, or - for stdout");

  CLI11_PARSE(app, argc, argv);

  if (*enc) {
    write_output(output, bbwt::bbwt(read_input(input)).output);
  } else if (*dec) {
    write_output(output, bbwt::inverse_bbwt(read_input(input)));
  } else if (*fac) {
    const Bytes text = read_input(input);
    std::string out;
    for (const auto& r : bbwt::composed_runs(bbwt::duval_factorize(text), text))
      out += std::to_string(r.begin) + '\t' + std::to_string(r.end) + '\t' +
             std::to_string(r.multiplicity) + '\n';
    write_output(output, out);
  } else if (*csa) {
    const Bytes text = read_input(input);
    const auto cf = bbwt::compose(bbwt::duval_factorize(text), text);
    const auto sa = bbwt::circular_suffix_array(cf);
    if (csa_binary) {
      Bytes out;
      out.reserve(sa.entries.size() * 8);
      for (std::size_t p : sa.entries) {
        const std::uint64_t v = p;
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<Byte>(v >> (8 * b)));
      }
      write_output(output, out);
    } else {
      std::string out;
      for (std::size_t p : sa.entries) out += std::to_string(p) + '\n';
      write_output(output, out);
    }
  } else if (*bwt) {
    const Bytes text = read_input(input);
    write_output(output, dollar ? bbwt::bwt_dollar(text) : bbwt::bwt_baseline(text));
  } else if (*ebw) {
    const Bytes raw = read_input(input);
    std::vector<Bytes> strings;
    Bytes cur;
    for (Byte c : raw) {
      if (c == sep) {
        strings.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) strings.push_back(cur);
    try {
      write_output(output, bbwt::ebwt(strings));
    } catch (const bbwt::NonPrimitiveInput& e) {
      throw std::runtime_error("ebwt input #" + std::to_string(e.index() + 1) +
                               " is not primitive");
    } catch (const bbwt::EmptyString& e) {
      throw std::runtime_error("ebwt input #" + std::to_string(e.index() + 1) +
                               " is empty");
    }
  } else if (*ord) {
    const Bytes text = read_input(input);
    const auto k = bbwt::bbwt_order(text, max_k);
    write_output(output,
                 (k ? std::to_string(*k) : ">" + std::to_string(max_k)) + "\n");
  } else if (*tra) {
    write_output(output, run_trace(read_input(input)));
  } else if (*ben) {
    cfg.pattern = pattern == "unary"         ? bbwt::BenchPattern::Unary
                  : pattern == "alternating" ? bbwt::BenchPattern::Alternating
                  : pattern == "decreasing"  ? bbwt::BenchPattern::Decreasing
                                             : bbwt::BenchPattern::Random;
    write_output(output, run_bench(cfg));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    const char* color = std::getenv("BBWT_COLOR");
    const bool colored = color && std::string(color) == "1";
    std::cerr << (colored ? "\033[31merror:\033[0m " : "error: ") << e.what()
              << '\n';
    return 1;
  }
}
