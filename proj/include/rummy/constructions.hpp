#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rummy/card.hpp"
#include "rummy/declare.hpp"
#include "rummy/meld.hpp"
#include "rummy/mindist.hpp"

namespace rummy {

enum class BoundSource : std::uint8_t { Prop1, Prop2, Prop3 };

inline const char* to_string(BoundSource b) {
  switch (b) {
    case BoundSource::Prop1: return "prop1";
    case BoundSource::Prop2: return "prop2";
    case BoundSource::Prop3: return "prop3";
  }
  return "unknown";
}

// Largest distance each construction may claim.
inline int bound_of(BoundSource b) {
  switch (b) {
    case BoundSource::Prop1: return 9;
    case BoundSource::Prop2: return 8;
    case BoundSource::Prop3: return 7;
  }
  return kHandSize;
}

// Which branch of the three-way case split produced a prop3 certificate.
enum class SplitCase : std::uint8_t { None, TwoPairs, LongSuit, ThreeThreeThreeTwo, Other };

inline const char* to_string(SplitCase c) {
  switch (c) {
    case SplitCase::None: return "none";
    case SplitCase::TwoPairs: return "two_pairs";
    case SplitCase::LongSuit: return "long_suit";
    case SplitCase::ThreeThreeThreeTwo: return "3332";
    case SplitCase::Other: return "other";
  }
  return "unknown";
}

struct Certificate {
  BoundSource source = BoundSource::Prop1;
  Hand target;
  Declaration witness;
  int claimed_distance = 0;
  std::vector<Card> kept;
  std::vector<std::pair<Card, Card>> replacements;
  SplitCase split = SplitCase::None;
  bool fallback = false;  // prop3 fell back to the prop2 construction
};

enum class CertificateFault : std::uint8_t {
  None,
  TargetHoldsWildcard,
  InvalidWitness,
  DistanceMismatch,
  BoundExceeded,
};

inline const char* to_string(CertificateFault f) {
  switch (f) {
    case CertificateFault::None: return "none";
    case CertificateFault::TargetHoldsWildcard: return "target_holds_wildcard_card";
    case CertificateFault::InvalidWitness: return "invalid_witness";
    case CertificateFault::DistanceMismatch: return "distance_mismatch";
    case CertificateFault::BoundExceeded: return "bound_exceeded";
  }
  return "unknown";
}

struct CertificateCheck {
  bool valid = false;
  CertificateFault fault = CertificateFault::None;
  DeclarationCheck witness;  // set when fault == InvalidWitness

  explicit operator bool() const { return valid; }
};

/// Re-checks a certificate from scratch with the declaration validator and
/// the hand distance.
inline CertificateCheck verify_certificate(const Hand& h, const Certificate& c, const JokerContext& ctx) {
  CertificateCheck out;
  if (c.target.contains(ctx.wcj())) {
    out.fault = CertificateFault::TargetHoldsWildcard;
    return out;
  }
  out.witness = validate_declaration_of(c.witness, c.target, ctx);
  if (!out.witness) {
    out.fault = CertificateFault::InvalidWitness;
    return out;
  }
  if (distance(h, c.target) != c.claimed_distance) {
    out.fault = CertificateFault::DistanceMismatch;
    return out;
  }
  if (c.claimed_distance > bound_of(c.source)) {
    out.fault = CertificateFault::BoundExceeded;
    return out;
  }
  out.valid = true;
  return out;
}

// ---------------------------------------------------------------------------
// Plans

/// A meld shape with its natural cards fixed: a sequence window, or a set
/// of one value over chosen suits.
struct PlanMeld {
  bool sequence = true;
  Suit suit = Suit::Hearts;
  int start = kMinPosition;
  int length = kMinMeldSize;
  Value value = Value::Ace;
  std::vector<Suit> set_suits;

  static PlanMeld window(Suit s, int start, int length) { return PlanMeld{true, s, start, length, Value::Ace, {}}; }
  static PlanMeld set(Value v, std::vector<Suit> suits) {
    const int n = static_cast<int>(suits.size());
    return PlanMeld{false, Suit::Hearts, 0, n, v, std::move(suits)};
  }

  std::vector<Card> naturals() const {
    std::vector<Card> out;
    if (sequence) {
      for (int p = start; p < start + length; ++p) out.push_back(Card::natural(value_at(p), suit));
    } else {
      for (Suit s : set_suits) out.push_back(Card::natural(value, s));
    }
    return out;
  }
};

namespace detail {

inline std::uint64_t card_mask(const std::vector<Card>& cards) {
  std::uint64_t m = 0;
  for (Card c : cards)
    if (c.is_natural()) m |= bit_of(c);
  return m;
}

// Fills a plan with concrete cards. Slots whose natural is the face-up
// wildcard card or already taken get a joker. Hand jokers are then swapped
// in for replacement cards, never inside the first all-natural sequence and
// only inside melds allowed by `joker_melds` (empty = any).
inline std::optional<Certificate> realize(const Hand& h, const JokerContext& ctx, const std::vector<PlanMeld>& plan,
                                          BoundSource source, const std::vector<int>& joker_melds = {}) {
  std::uint64_t used = 0;
  std::vector<std::vector<Card>> slots(plan.size());
  std::vector<std::vector<bool>> need_joker(plan.size());
  for (std::size_t m = 0; m < plan.size(); ++m) {
    for (Card c : plan[m].naturals()) {
      const bool take = !ctx.is_wcj(c) && !(used & bit_of(c));
      if (take) used |= bit_of(c);
      slots[m].push_back(c);
      need_joker[m].push_back(!take);
    }
  }

  // Joker cards: the hand's own first, then drawable ones.
  std::vector<Card> hand_jokers;
  for (Card c : h.cards())
    if (ctx.is_joker(c) && !(c.is_natural() && (used & bit_of(c)))) hand_jokers.push_back(c);
  std::vector<Card> pool_jokers;
  for (int i = h.printed_jokers(); i < ctx.deck().printed_jokers; ++i) pool_jokers.push_back(Card::printed_joker());
  for (Suit s : kAllSuits) {
    const Card c = Card::natural(ctx.wild_value(), s);
    if (!h.contains(c) && !ctx.is_wcj(c) && !(used & bit_of(c))) pool_jokers.push_back(c);
  }
  std::size_t next_hand = 0, next_pool = 0;
  for (std::size_t m = 0; m < plan.size(); ++m) {
    for (std::size_t i = 0; i < slots[m].size(); ++i) {
      if (!need_joker[m][i]) continue;
      if (next_hand < hand_jokers.size()) slots[m][i] = hand_jokers[next_hand++];
      else if (next_pool < pool_jokers.size()) slots[m][i] = pool_jokers[next_pool++];
      else return std::nullopt;
    }
  }

  int pure_index = -1;
  for (std::size_t m = 0; m < plan.size() && pure_index < 0; ++m)
    if (plan[m].sequence && std::none_of(need_joker[m].begin(), need_joker[m].end(), [](bool b) { return b; }))
      pure_index = static_cast<int>(m);

  auto allowed = [&](std::size_t m) {
    if (static_cast<int>(m) == pure_index) return false;
    return joker_melds.empty() || std::find(joker_melds.begin(), joker_melds.end(), static_cast<int>(m)) != joker_melds.end();
  };
  for (; next_hand < hand_jokers.size(); ++next_hand) {
    bool placed = false;
    for (std::size_t m = 0; m < plan.size() && !placed; ++m) {
      if (!allowed(m)) continue;
      const std::vector<Card> nat = plan[m].naturals();
      int naturals = 0;
      for (std::size_t i = 0; i < slots[m].size(); ++i) naturals += slots[m][i] == nat[i] ? 1 : 0;
      for (std::size_t i = 0; i < slots[m].size() && !placed; ++i) {
        const Card c = slots[m][i];
        if (h.contains(c)) continue;
        const bool is_natural_slot = c == nat[i];
        if (is_natural_slot && naturals <= 1) continue;  // keep one natural
        slots[m][i] = hand_jokers[next_hand];
        placed = true;
      }
    }
    if (!placed) break;
  }

  Certificate cert;
  cert.source = source;
  for (std::size_t m = 0; m < plan.size(); ++m) {
    const PlanMeld& pm = plan[m];
    cert.witness.melds.push_back(pm.sequence ? Meld::sequence(pm.suit, pm.start, slots[m])
                                             : Meld::set(pm.value, slots[m]));
  }
  cert.witness = canonicalize(std::move(cert.witness), ctx);
  try {
    cert.target = Hand::from_cards(cert.witness.cards(), ctx.deck());
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (!validate_declaration_of(cert.witness, cert.target, ctx)) return std::nullopt;
  cert.claimed_distance = distance(h, cert.target);
  fill_replacements(h, cert.target, cert.kept, cert.replacements);
  return cert;
}

inline bool better(const std::optional<Certificate>& a, const std::optional<Certificate>& b) {
  return a && (!b || a->claimed_distance < b->claimed_distance);
}

// Hand naturals that are not jokers.
inline std::vector<Card> plain_naturals(const Hand& h, const JokerContext& ctx) {
  std::vector<Card> out;
  for (Card c : h.cards())
    if (c.is_natural() && !ctx.is_joker(c)) out.push_back(c);
  return out;
}

// Values held at least twice among non-joker naturals, lowest position first.
inline std::vector<Value> paired_values(const Hand& h, const JokerContext& ctx) {
  std::vector<Value> out;
  for (Value v : kAllValues) {
    if (v == ctx.wild_value()) continue;
    int n = 0;
    for (Suit s : kAllSuits) n += h.contains(Card::natural(v, s)) ? 1 : 0;
    if (n >= 2) out.push_back(v);
  }
  return out;
}

// A set over the hand's cards of value v, topped up with the lowest free
// suits to `size` (never past the four suits).
inline PlanMeld set_for(const Hand& h, Value v, int size, std::uint64_t avoid = 0) {
  std::vector<Suit> suits;
  for (Suit s : kAllSuits)
    if (h.contains(Card::natural(v, s))) suits.push_back(s);
  for (Suit s : kAllSuits) {
    if (static_cast<int>(suits.size()) >= size) break;
    const Card c = Card::natural(v, s);
    if (h.contains(c) || (avoid & bit_of(c))) continue;
    suits.push_back(s);
  }
  for (Suit s : kAllSuits) {  // last resort: a slot that will take a joker
    if (static_cast<int>(suits.size()) >= size) break;
    if (std::find(suits.begin(), suits.end(), s) == suits.end()) suits.push_back(s);
  }
  if (static_cast<int>(suits.size()) > size) suits.resize(static_cast<std::size_t>(size));
  std::sort(suits.begin(), suits.end());
  return PlanMeld::set(v, std::move(suits));
}

struct Window {
  Suit suit;
  int start;
  int length;
  std::uint64_t cards;
  int kept;
};

inline std::vector<Window> all_windows(const Hand& h, int length) {
  std::vector<Window> out;
  for (Suit s : kAllSuits) {
    for (int start = kMinPosition; start + length - 1 <= kMaxPosition; ++start) {
      const PlanMeld pm = PlanMeld::window(s, start, length);
      const std::uint64_t m = card_mask(pm.naturals());
      out.push_back(Window{s, start, length, m, __builtin_popcountll(m & h.natural_mask())});
    }
  }
  return out;
}

// Card-disjoint windows of the given lengths avoiding `blocked`, with the
// most hand cards; ties go to the first found in (suit, start) order.
inline std::optional<std::vector<Window>> best_windows(const Hand& h, const std::vector<int>& lengths,
                                                       std::uint64_t blocked) {
  std::vector<std::vector<Window>> options;
  for (int len : lengths) options.push_back(all_windows(h, len));
  std::vector<int> upper(lengths.size() + 1, 0);
  for (std::size_t i = lengths.size(); i-- > 0;) {
    int best = 0;
    for (const Window& w : options[i]) best = std::max(best, w.kept);
    upper[i] = upper[i + 1] + best;
  }
  std::vector<Window> cur, best;
  int best_kept = -1;
  auto rec = [&](auto&& self, std::size_t i, std::size_t from, std::uint64_t taken, int kept) -> void {
    if (i == lengths.size()) {
      if (kept > best_kept) {
        best_kept = kept;
        best = cur;
      }
      return;
    }
    if (kept + upper[i] <= best_kept) return;
    // Equal lengths in a row are unordered: keep their indices increasing.
    const std::size_t lo = (i > 0 && lengths[i] == lengths[i - 1]) ? from : 0;
    for (std::size_t k = lo; k < options[i].size(); ++k) {
      const Window& w = options[i][k];
      if (w.cards & (taken | blocked)) continue;
      cur.push_back(w);
      self(self, i + 1, k + 1, taken | w.cards, kept + w.kept);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0, 0);
  if (best_kept < 0) return std::nullopt;
  return best;
}

// Sets first, then the best windows for the remaining slots.
inline std::optional<Certificate> sets_and_windows(const Hand& h, const JokerContext& ctx,
                                                   const std::vector<PlanMeld>& sets, const std::vector<int>& lengths,
                                                   BoundSource source) {
  std::uint64_t blocked = 0;
  for (const PlanMeld& s : sets) blocked |= card_mask(s.naturals()) & h.natural_mask();
  const auto windows = best_windows(h, lengths, blocked);
  if (!windows) return std::nullopt;
  std::uint64_t taken = 0;
  std::vector<PlanMeld> plan;
  for (const Window& w : *windows) {
    plan.push_back(PlanMeld::window(w.suit, w.start, w.length));
    taken |= w.cards;
  }
  // Re-pick set fillers away from the window cards.
  for (const PlanMeld& s : sets) plan.push_back(set_for(h, s.value, s.length, taken));
  return realize(h, ctx, plan, source);
}

}  // namespace detail

/// Whole-suit construction: the 13 cards of the hand's most populous suit as
/// pure runs 2-4, 5-7 and 8-A. Hand jokers go into one of the three runs.
inline Certificate construct_prop1(const Hand& h, const JokerContext& ctx) {
  Suit best = Suit::Hearts;
  int best_count = -1;
  for (Suit s : kAllSuits) {
    int n = 0;
    for (Value v : kAllValues) n += h.contains(Card::natural(v, s)) ? 1 : 0;
    if (n > best_count) {
      best = s;
      best_count = n;
    }
  }
  const std::vector<PlanMeld> plan = {PlanMeld::window(best, 2, 3), PlanMeld::window(best, 5, 3),
                                              PlanMeld::window(best, 8, 7)};
  std::optional<Certificate> out;
  for (int m = 0; m < static_cast<int>(plan.size()); ++m) {
    auto c = detail::realize(h, ctx, plan, BoundSource::Prop1, {m});
    if (detail::better(c, out)) out = std::move(c);
  }
  if (!out) throw std::logic_error("whole-suit construction failed");
  return *out;
}

/// Pair construction: a duplicated value as a four-card set plus three
/// three-card runs, each anchored on a further hand card.
inline Certificate construct_prop2(const Hand& h, const JokerContext& ctx) {
  const std::vector<Value> pairs = detail::paired_values(h, ctx);
  const std::vector<Card> plain = detail::plain_naturals(h, ctx);
  Value v{};
  if (!pairs.empty()) {
    v = pairs.front();
  } else if (!plain.empty()) {
    v = plain.front().value();  // a hand joker stands in for the partner
  } else {
    v = ctx.wild_value() == Value::Two ? Value::Three : Value::Two;
  }
  std::vector<PlanMeld> plan{detail::set_for(h, v, kMaxSetSize)};
  std::uint64_t taken = detail::card_mask(plan[0].naturals());

  // Greedy anchors in canonical order.
  std::vector<detail::Window> chosen;
  for (Card a : plain) {
    if (chosen.size() == 3) break;
    if (taken & bit_of(a)) continue;
    std::optional<detail::Window> pick;
    for (int p : positions(a.value())) {
      for (int start = p - 2; start <= p; ++start) {
        if (start < kMinPosition || start + 2 > kMaxPosition) continue;
        const PlanMeld pm = PlanMeld::window(a.suit(), start, 3);
        const std::uint64_t m = detail::card_mask(pm.naturals());
        if (m & taken) continue;
        const int kept = __builtin_popcountll(m & h.natural_mask());
        if (!pick || kept > pick->kept) pick = detail::Window{a.suit(), start, 3, m, kept};
      }
    }
    if (!pick) continue;
    chosen.push_back(*pick);
    taken |= pick->cards;
  }
  // Unanchored runs if the hand ran out of usable anchors.
  for (const detail::Window& w : detail::all_windows(h, 3)) {
    if (chosen.size() == 3) break;
    if (w.cards & taken) continue;
    chosen.push_back(w);
    taken |= w.cards;
  }
  for (const detail::Window& w : chosen) plan.push_back(PlanMeld::window(w.suit, w.start, w.length));
  auto out = detail::realize(h, ctx, plan, BoundSource::Prop2);
  if (!out) throw std::logic_error("pair construction failed");
  return *out;
}

/// Which branch of the case split a hand falls in, after removing the
/// lowest paired value.
inline SplitCase classify_split(const Hand& h, const JokerContext& ctx) {
  const std::vector<Value> pairs = detail::paired_values(h, ctx);
  if (pairs.size() >= 2) return SplitCase::TwoPairs;
  if (pairs.empty() || h.joker_count(ctx) > 0) return SplitCase::Other;
  std::array<int, kNumSuits> per_suit{};
  int rest = 0;
  for (Card c : detail::plain_naturals(h, ctx)) {
    if (c.value() == pairs.front()) continue;
    ++per_suit[static_cast<std::size_t>(index_of(c.suit()))];
    ++rest;
  }
  if (*std::max_element(per_suit.begin(), per_suit.end()) >= 4) return SplitCase::LongSuit;
  std::sort(per_suit.begin(), per_suit.end());
  if (rest == 11 && per_suit == std::array<int, 4>{2, 3, 3, 3}) return SplitCase::ThreeThreeThreeTwo;
  return SplitCase::Other;
}

/// Case-split construction:
///   two paired values   -> two 3-sets plus runs of 4 and 3;
///   a suit with >= 4    -> 3-set, a run of 4 over a close pair, two runs of 3;
///   3-3-3-2 suit split  -> 3-set and two runs of 5 holding two cards each.
/// Every branch also tries the other shapes and keeps the best result; if
/// none reaches the bound the pair construction is returned, flagged.
inline Certificate construct_prop3(const Hand& h, const JokerContext& ctx) {
  const SplitCase split = classify_split(h, ctx);
  const std::vector<Value> pairs = detail::paired_values(h, ctx);

  // Set values to try: paired values, else each held value (jokers pair up).
  std::vector<Value> set_values = pairs;
  if (set_values.empty())
    for (Card c : detail::plain_naturals(h, ctx))
      if (std::find(set_values.begin(), set_values.end(), c.value()) == set_values.end())
        set_values.push_back(c.value());

  struct Shape {
    std::vector<int> sets;     // set sizes
    std::vector<int> lengths;  // run lengths
  };
  std::vector<Shape> shapes;
  switch (split) {
    case SplitCase::TwoPairs: shapes.push_back({{3, 3}, {4, 3}}); break;
    case SplitCase::LongSuit: shapes.push_back({{3}, {4, 3, 3}}); break;
    case SplitCase::ThreeThreeThreeTwo: shapes.push_back({{3}, {5, 5}}); break;
    default: break;
  }
  const std::vector<Shape> others = {{{3}, {5, 5}}, {{3}, {4, 3, 3}}, {{3, 3}, {4, 3}}, {{4}, {3, 3, 3}},
                                     {{4}, {5, 4}}, {{4, 3}, {3, 3}}, {{3}, {7, 3}}, {{3}, {6, 4}}};
  shapes.insert(shapes.end(), others.begin(), others.end());

  std::optional<Certificate> best;
  for (const Shape& shape : shapes) {
    // Distinct set values in increasing order of the list.
    std::vector<std::size_t> idx(shape.sets.size());
    auto rec = [&](auto&& self, std::size_t k, std::size_t from) -> void {
      if (k == idx.size()) {
        std::vector<PlanMeld> sets;
        for (std::size_t i = 0; i < idx.size(); ++i)
          sets.push_back(detail::set_for(h, set_values[idx[i]], shape.sets[i]));
        auto c = detail::sets_and_windows(h, ctx, sets, shape.lengths, BoundSource::Prop3);
        if (detail::better(c, best)) best = std::move(c);
        return;
      }
      for (std::size_t i = from; i < set_values.size(); ++i) {
        idx[k] = i;
        self(self, k + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  if (best && best->claimed_distance <= bound_of(BoundSource::Prop3)) {
    best->split = split;
    return *best;
  }
  Certificate fb = construct_prop2(h, ctx);
  fb.source = BoundSource::Prop3;
  fb.split = split;
  fb.fallback = true;
  return fb;
}

}  // namespace rummy
