#pragma once

// Hand generators shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rummy/card.hpp"
#include "rummy/declare.hpp"
#include "rummy/meld.hpp"
#include "rummy/montecarlo.hpp"

namespace rummy::fixtures {

struct Case {
  std::string hand;
  std::string wcj;
  std::string label;
};

inline constexpr const char* kDeclarableHand = "2H 3H 4H 5H 5C 6C 7C 9S 9D 9H JS JD JC";

// Twenty hand-picked hands: joker-heavy, near-declarable, single-suit, and a
// few shapes that stress the dual ace and wildcard-value naturals.
inline std::vector<Case> edge_cases() {
  return {
      {"2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD", "AH", "extremal"},
      {kDeclarableHand, "AD", "declarable"},
      {"2H 3H 4H 5C 6C 7C 9S 9D 9H JS JD JC KS", "AD", "one away"},
      {"AH 2H 3H 4H 5H 6H 7H 8H 9H TH JH QH KH", "AD", "all hearts"},
      {"AS 2S 3S 4S 5S 6S 7S 8S 9S TS JS QS KS", "2H", "all spades, wild 2 inside"},
      {"2C 4C 6C 8C TC QC AC 3D 7D JD 5S 9S KS", "AH", "alternating clubs"},
      {"JK 5C 5D 5S 2H 9C KD 7S 3D JH 8C 4S QH", "5H", "four jokers"},
      {"JK 7C 7D 7S AH 2C 3D 4S 5H 6C 8D 9S TH", "7H", "four jokers, scattered"},
      {"JK 3H 3C 3D 8S 8H KC KD 5S TH QC 2D 6S", "3S", "jokers and pairs"},
      {"2H 2C 2D 2S 5H 5C 5D 5S 9H 9C 9D 9S KH", "AS", "sets only"},
      {"5C 6C 7C 7D 7S 2H 3H 4H 9S TS JS QS KS", "7H", "wild value at face"},
      {"QH KH AH 2H 3H QC KC AC 2C 3C 9D 9S 4D", "5S", "aces at both ends"},
      {"AH 2H 3H 4H 5H 6H 7H 8H 9H TH JH QH JK", "KS", "twelve hearts and a joker"},
      {"2H 3H 5H 6H 8H 9H JH QH 2C 3C 5C 6C 8C", "AD", "broken pairs"},
      {"AH AC AD KH KC KD QH QC QD JH JC JD TS", "9S", "high sets"},
      {"2D 3D 4D 6D 7D 8D TD JD QD 4C 8C QC AS", "5H", "three runs one suit"},
      {"AS 4S 7S TS AC 4C 7C TC AD 4D 7D TD KH", "2H", "gap-two spread"},
      {"3H 4H 5H 6H 7H 8H 9H 3C 4C 5C 6C 7C 8C", "AD", "two suits"},
      {"2H 3H 4H 2C 3C 4C 2D 3D 4D KS KH KC JK", "AD", "declarable with joker"},
      {"9H TH JH QH 9C TC JC QC 9D TD JD QD 2S", "AS", "three four-runs"},
  };
}

inline Case random_case(std::uint64_t seed, std::uint64_t index) {
  const Sample s = draw_sample(seed, index);
  return Case{s.hand.render(), s.wcj.token(), "random #" + std::to_string(index)};
}

// Builds a random declarable hand directly as a declaration: one pure
// sequence, a second sequence, then sequences or sets, some impure.
inline Case constructed_declarable(std::mt19937_64& rng) {
  static const std::vector<std::vector<int>> kShapes = {
      {10, 3}, {9, 4}, {8, 5}, {7, 6}, {7, 3, 3}, {6, 4, 3}, {5, 5, 3}, {5, 4, 4}, {4, 3, 3, 3},
      {3, 3, 7}, {3, 4, 3, 3}, {3, 3, 4, 3}, {3, 3, 3, 4}, {4, 4, 5}, {3, 5, 5}};
  auto pick = [&](int n) { return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))); };
  while (true) {
    const Card wcj = Card::from_code(pick(kNumNaturals));
    const JokerContext ctx(wcj);
    const auto& shape = kShapes[static_cast<std::size_t>(pick(static_cast<int>(kShapes.size())))];
    std::uint64_t used = bit_of(wcj);
    int printed = 0;
    std::vector<Card> cards;
    bool ok = true;
    // Spare jokers still available: the printed joker and wild-value cards.
    auto take_joker = [&]() -> bool {
      if (printed < ctx.deck().printed_jokers && pick(2) == 0) {
        ++printed;
        cards.push_back(Card::printed_joker());
        return true;
      }
      for (Suit s : kAllSuits) {
        const Card c = Card::natural(ctx.wild_value(), s);
        if (!(used & bit_of(c))) {
          used |= bit_of(c);
          cards.push_back(c);
          return true;
        }
      }
      return false;
    };
    for (std::size_t m = 0; m < shape.size() && ok; ++m) {
      const int len = shape[m];
      const bool sequence = m < 2 || len > kMaxSetSize || pick(2) == 0;
      const bool pure = m == 0;
      if (sequence) {
        const Suit s = suit_from_index(pick(kNumSuits));
        const int start = kMinPosition + pick(kMaxPosition - len + 1);
        int naturals = 0;
        for (int p = start; p < start + len && ok; ++p) {
          const Card c = Card::natural(value_at(p), s);
          const bool joker_slot = !pure && pick(5) == 0 && naturals + (start + len - p) > 1;
          if (!joker_slot && !(used & bit_of(c))) {
            used |= bit_of(c);
            cards.push_back(c);
            ++naturals;
          } else if (pure || !take_joker()) {
            ok = false;
          }
        }
        ok = ok && naturals > 0;
      } else {
        const Value v = value_from_ordinal(1 + pick(kNumValues));
        int naturals = 0;
        for (Suit s : kAllSuits) {
          const Card c = Card::natural(v, s);
          if (naturals < len && !(used & bit_of(c)) && pick(4) != 0) {
            used |= bit_of(c);
            cards.push_back(c);
            ++naturals;
          }
        }
        for (int i = naturals; i < len && ok; ++i) ok = take_joker();
        ok = ok && naturals > 0;
      }
    }
    if (!ok || cards.size() != kHandSize) continue;
    return Case{Hand::from_cards(cards).render(), wcj.token(), "constructed declarable"};
  }
}

// No suit holds three naturals on consecutive positions, so no pure sequence
// (and hence no declaration) can be formed from the hand's own cards.
inline bool has_pure_triple(const Hand& h) {
  for (Suit s : kAllSuits) {
    std::uint32_t cells = 0;
    for (Card c : h.cards())
      if (c.is_natural() && c.suit() == s)
        for (int p : positions(c.value())) cells |= 1u << p;
    if (cells & (cells >> 1) & (cells >> 2)) return true;
  }
  return false;
}

// Draws from the sampler's stream until a hand without a pure triple turns up.
inline Case constructed_non_declarable(std::uint64_t seed, std::uint64_t& counter) {
  while (true) {
    const Sample s = draw_sample(seed, counter++);
    if (!has_pure_triple(s.hand)) return Case{s.hand.render(), s.wcj.token(), "no pure triple"};
  }
}

}  // namespace rummy::fixtures
