#include "divsum/factor_cache.hpp"

#include <fstream>
#include <mutex>

namespace divsum {

std::optional<Factorization> FactorCache::lookup(const Natural& n) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(n);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void FactorCache::store(const Natural& n, Factorization f) {
  std::unique_lock lock(mutex_);
  entries_.emplace(n, std::move(f));
}

Factorization FactorCache::factor(const Natural& n) {
  if (auto hit = lookup(n)) return *hit;
  Factorization f = divsum::factor(n);
  store(n, f);
  return f;
}

std::size_t FactorCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::string FactorCache::format_record(const Natural& n,
                                       const Factorization& f) {
  std::string line = to_decimal(n);
  line += '=';
  bool first = true;
  for (const auto& pp : f) {
    if (!first) line += '*';
    first = false;
    line += to_decimal(pp.prime);
    line += '^';
    line += std::to_string(pp.exponent);
  }
  return line;
}

std::pair<Natural, Factorization> FactorCache::parse_record(
    const std::string& line) {
  auto eq = line.find('=');
  if (eq == std::string::npos) {
    throw ParseError("cache record missing '=': " + line);
  }
  Natural n = parse_natural(std::string_view(line).substr(0, eq));
  Factorization f;
  std::size_t pos = eq + 1;
  while (pos < line.size()) {
    auto star = line.find('*', pos);
    if (star == std::string::npos) star = line.size();
    auto caret = line.find('^', pos);
    if (caret == std::string::npos || caret >= star) {
      throw ParseError("cache record missing '^': " + line);
    }
    PrimePower pp;
    pp.prime = parse_natural(std::string_view(line).substr(pos, caret - pos));
    Natural e =
        parse_natural(std::string_view(line).substr(caret + 1, star - caret - 1));
    if (e == 0 || !e.fits_uint_p()) {
      throw ParseError("cache record has bad exponent: " + line);
    }
    pp.exponent = static_cast<unsigned>(e.get_ui());
    f.push_back(std::move(pp));
    pos = star + 1;
  }
  if (!is_valid_factorization(f, n)) {
    throw ParseError("cache record failed revalidation: " + line);
  }
  return {std::move(n), std::move(f)};
}

std::size_t FactorCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cache file " + path.string());
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto [n, f] = parse_record(line);
    store(n, std::move(f));
    ++count;
  }
  return count;
}

void FactorCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  std::shared_lock lock(mutex_);
  for (const auto& [n, f] : entries_) {
    out << format_record(n, f) << '\n';
  }
}

}  // namespace divsum
