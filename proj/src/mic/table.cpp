#include "mic/table.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace mic {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::vector<TableEntry> parse_table(std::istream& in, const std::string& source) {
  std::vector<TableEntry> out;
  std::optional<std::pair<FareyPair, std::size_t>> pending;
  auto fail = [&](std::size_t line, const std::string& why) -> void {
    throw ParseError(source + ":" + std::to_string(line) + ": " + why);
  };

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      if (pending) fail(lineno, "expected a poly line for the interval on line " + std::to_string(pending->second));
      continue;
    }
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    if (keyword == "interval") {
      if (pending) fail(lineno, "expected a poly line for the interval on line " + std::to_string(pending->second));
      std::string lo, hi, extra;
      if (!(words >> lo >> hi) || (words >> extra)) fail(lineno, "interval needs exactly two endpoints");
      try {
        pending.emplace(FareyPair::from_endpoints(parse_rational(lo), parse_rational(hi)), lineno);
      } catch (const std::exception& e) {
        fail(lineno, e.what());
      }
    } else if (keyword == "poly") {
      if (!pending) fail(lineno, "poly line without a preceding interval");
      IntPoly p;
      try {
        p = parse_int_poly(line);
      } catch (const std::exception& e) {
        fail(lineno, e.what());
      }
      if (p.is_zero()) fail(lineno, "witness polynomial is zero");
      out.push_back(TableEntry{pending->first, std::move(p), pending->second});
      pending.reset();
    } else {
      fail(lineno, "unknown record '" + keyword + "'");
    }
  }
  if (pending) fail(pending->second, "interval record has no poly line");
  return out;
}

std::vector<TableEntry> parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_table(in, path);
}

std::vector<EntryOutcome> verify_entries(const std::vector<TableEntry>& entries, unsigned threads,
                                         const CertifyOptions& options) {
  std::vector<EntryOutcome> out(entries.size(), EntryOutcome(std::string()));
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(entries.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        out[i] = verify_witness(entries[i].pair, entries[i].poly, options);
      } catch (const std::exception& e) {
        out[i] = std::string(e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace mic
