#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rummy/card.hpp"
#include "rummy/mindist.hpp"
#include "rummy/parallel.hpp"

namespace rummy {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform integer in [0, n). std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries, so rejection sampling is done here.
inline std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = eng();
  while (x >= limit);
  return x % n;
}

struct Sample {
  Card wcj;
  Hand hand;
  DeckConfig deck;
  JokerContext ctx() const { return JokerContext(wcj, deck); }
};

/// Sample `index` of the stream named by `seed`: a uniform wildcard card, then
/// a uniform 13-card hand from the rest of the deck (printed jokers included).
/// Each index has its own generator, so samples do not depend on evaluation order.
inline Sample draw_sample(std::uint64_t seed, std::uint64_t index, const DeckConfig& deck = {}) {
  std::mt19937_64 eng(splitmix64(seed ^ splitmix64(index)));
  const Card wcj = Card::from_code(static_cast<int>(uniform_below(eng, kNumNaturals)));
  std::vector<Card> pool;
  for (int code = 0; code < kNumNaturals; ++code)
    if (code != wcj.code()) pool.push_back(Card::from_code(code));
  for (int i = 0; i < deck.printed_jokers; ++i) pool.push_back(Card::printed_joker());
  for (int i = 0; i < kHandSize; ++i) {
    const auto j = i + static_cast<int>(uniform_below(eng, pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(kHandSize);
  return Sample{wcj, Hand::from_cards(std::move(pool), deck), deck};
}

struct DistributionReport {
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;
  std::map<int, std::uint64_t> histogram;
  double mass_2_to_4 = 0.0;
  int max_observed = 0;
  std::string max_hand;  // first sample attaining max_observed
  std::string max_wcj;
};

inline DistributionReport sample_distribution(std::uint64_t n, std::uint64_t seed, int workers = 1) {
  if (n == 0) throw std::invalid_argument("sample size must be at least 1");
  constexpr std::uint64_t kChunk = 128;
  const std::size_t chunks = static_cast<std::size_t>((n + kChunk - 1) / kChunk);
  const auto parts = map_chunks<std::vector<int>>(chunks, workers, [&](std::size_t c) {
    std::vector<int> values;
    for (std::uint64_t i = c * kChunk; i < std::min(n, (c + 1) * kChunk); ++i) {
      const Sample s = draw_sample(seed, i);
      values.push_back(min_dist_value(s.hand, s.ctx()));
    }
    return values;
  });

  DistributionReport r;
  r.sample_size = n;
  r.seed = seed;
  std::uint64_t mid = 0;
  std::uint64_t index = 0;
  std::uint64_t max_index = 0;
  for (const auto& part : parts) {
    for (int v : part) {
      ++r.histogram[v];
      if (v >= 2 && v <= 4) ++mid;
      if (index == 0 || v > r.max_observed) {
        r.max_observed = v;
        max_index = index;
      }
      ++index;
    }
  }
  r.mass_2_to_4 = static_cast<double>(mid) / static_cast<double>(n);
  const Sample worst = draw_sample(seed, max_index);
  r.max_hand = worst.hand.render();
  r.max_wcj = worst.wcj.token();
  return r;
}

inline std::string histogram_csv(const DistributionReport& r) {
  std::ostringstream out;
  out << "value,count\n";
  for (const auto& [v, c] : r.histogram) out << v << ',' << c << '\n';
  return out.str();
}

}  // namespace rummy
