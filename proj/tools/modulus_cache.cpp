#include "modulus_cache.hpp"

#include <fstream>
#include <sstream>

namespace quintic::cli {

ModulusCache ModulusCache::load(const std::string& path, std::ostream& warnings) {
  ModulusCache cache;
  cache.path_ = path;
  std::ifstream in(path);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string r_text;
    long bits = 0;
    std::string k_text;
    std::string extra;
    try {
      if (!(fields >> r_text >> bits >> k_text) || (fields >> extra) || bits < 2) throw std::invalid_argument("");
      const Rational r = Rational::parse(r_text);
      const BigReal k = BigReal::parse(k_text, bits);
      if (!(k.sign() > 0 && k < 1)) throw std::invalid_argument("");
      cache.entries_.push_back(Entry{r, bits, k_text});
    } catch (const std::exception&) {
      warnings << "warning: " << path << ":" << lineno << ": skipping unrecognised cache line\n";
    }
  }
  cache.loaded_ = cache.entries_.size();
  return cache;
}

std::optional<BigReal> ModulusCache::lookup(const Rational& r, long bits) const {
  const Entry* best = nullptr;
  for (const auto& e : entries_) {
    if (e.r == r && e.bits >= bits && (!best || e.bits > best->bits)) best = &e;
  }
  if (!best) return std::nullopt;
  return BigReal::parse(best->k_decimal, best->bits).at_precision(bits);
}

void ModulusCache::store(const Rational& r, const BigReal& k) {
  entries_.push_back(Entry{r, static_cast<long>(k.precision()), k.to_exact_string()});
}

void ModulusCache::flush() const {
  if (path_.empty() || loaded_ == entries_.size()) return;
  std::ofstream out(path_, std::ios::app);
  for (std::size_t i = loaded_; i < entries_.size(); ++i) {
    out << entries_[i].r.num() << '/' << entries_[i].r.den() << ' ' << entries_[i].bits << ' ' << entries_[i].k_decimal << '\n';
  }
}

}  // namespace quintic::cli
