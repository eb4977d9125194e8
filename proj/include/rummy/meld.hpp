#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "rummy/card.hpp"

namespace rummy {

/// Number of cards strictly between two distinct same-suit values along
/// A 2 ... K A, taking the closer ace when either value is an ace.
inline int gap(Value a, Value b) {
  if (a == b) throw std::domain_error("gap is defined only for distinct values");
  int best = kMaxPosition;
  for (int pa : positions(a))
    for (int pb : positions(b)) best = std::min(best, std::abs(pa - pb) - 1);
  return best;
}

enum class MeldKind : std::uint8_t { Sequence, Set };

inline constexpr int kMinMeldSize = 3;
inline constexpr int kMaxSetSize = 4;

struct Meld {
  MeldKind kind = MeldKind::Sequence;
  Suit suit = Suit::Hearts;   // sequences only
  int start = kMinPosition;   // sequences only: position of slots[0]
  Value value = Value::Ace;   // sets only
  std::vector<Card> slots;

  static Meld sequence(Suit s, int start, std::vector<Card> cards) {
    return Meld{MeldKind::Sequence, s, start, Value::Ace, std::move(cards)};
  }
  static Meld set(Value v, std::vector<Card> cards) {
    return Meld{MeldKind::Set, Suit::Hearts, 0, v, std::move(cards)};
  }

  bool is_sequence() const { return kind == MeldKind::Sequence; }
  int size() const { return static_cast<int>(slots.size()); }
  int last() const { return start + size() - 1; }

  // True when the card in slot i is the natural the slot stands for.
  bool face_fit(int i) const {
    const Card c = slots[static_cast<std::size_t>(i)];
    if (!c.is_natural()) return false;
    if (kind == MeldKind::Set) return c.value() == value;
    const int p = start + i;
    if (p < kMinPosition || p > kMaxPosition) return false;
    return c == Card::natural(value_at(p), suit);
  }

  bool operator==(const Meld&) const = default;
};

enum class MeldFault : std::uint8_t {
  None,
  Undersized,
  Oversized,
  BadSpan,
  WrongCard,
  DuplicateCard,
  DuplicateSuit,
  NoNatural,
  WildcardInPlay,
};

inline const char* to_string(MeldFault f) {
  switch (f) {
    case MeldFault::None: return "none";
    case MeldFault::Undersized: return "undersized";
    case MeldFault::Oversized: return "oversized";
    case MeldFault::BadSpan: return "bad_span";
    case MeldFault::WrongCard: return "non_joker_in_joker_slot";
    case MeldFault::DuplicateCard: return "duplicate_card";
    case MeldFault::DuplicateSuit: return "duplicate_suit_in_set";
    case MeldFault::NoNatural: return "no_natural_card";
    case MeldFault::WildcardInPlay: return "face_up_wildcard_in_meld";
  }
  return "unknown";
}

struct MeldCheck {
  bool valid = false;
  bool pure = false;
  MeldFault fault = MeldFault::None;

  explicit operator bool() const { return valid; }
};

inline MeldCheck validate_meld(const Meld& m, const JokerContext& ctx) {
  auto fail = [](MeldFault f) { return MeldCheck{false, false, f}; };
  if (m.size() < kMinMeldSize) return fail(MeldFault::Undersized);
  if (m.kind == MeldKind::Set && m.size() > kMaxSetSize) return fail(MeldFault::Oversized);
  // A sequence may not run past either end of A..K..A; the only span touching
  // both ace positions is the full 1..14 line, whose two aces are distinct
  // slots and so need a joker in one of them.
  if (m.kind == MeldKind::Sequence && (m.start < kMinPosition || m.last() > kMaxPosition))
    return fail(MeldFault::BadSpan);

  std::uint64_t seen = 0;
  int printed = 0;
  int naturals = 0;
  unsigned set_suits = 0;
  bool pure = true;
  for (int i = 0; i < m.size(); ++i) {
    const Card c = m.slots[static_cast<std::size_t>(i)];
    if (ctx.is_wcj(c)) return fail(MeldFault::WildcardInPlay);
    if (c.is_printed_joker()) {
      if (++printed > ctx.deck().printed_jokers) return fail(MeldFault::DuplicateCard);
    } else {
      if (seen & bit_of(c)) return fail(MeldFault::DuplicateCard);
      seen |= bit_of(c);
    }
    if (m.face_fit(i)) {
      ++naturals;
      if (m.kind == MeldKind::Set) {
        const unsigned sb = 1u << index_of(c.suit());
        if (set_suits & sb) return fail(MeldFault::DuplicateSuit);
        set_suits |= sb;
      }
    } else if (ctx.is_joker(c)) {
      pure = false;
    } else {
      return fail(MeldFault::WrongCard);
    }
  }
  if (naturals == 0) return fail(MeldFault::NoNatural);
  return MeldCheck{true, pure, MeldFault::None};
}

inline std::string render_meld(const Meld& m, const JokerContext& ctx) {
  std::string out = m.is_sequence() ? "SEQ" + std::string(suit_symbol(m.suit))
                                    : "SET" + value_token(m.value);
  std::vector<Card> shown = m.slots;
  if (!m.is_sequence()) std::sort(shown.begin(), shown.end());
  out += '[';
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i) out += ' ';
    out += shown[i].token();
  }
  out += ']';
  const MeldCheck chk = validate_meld(m, ctx);
  out += chk.valid ? (chk.pure ? " pure" : " impure") : " invalid";
  return out;
}

/// A meld shape without slot contents.
struct MeldTemplate {
  MeldKind kind = MeldKind::Sequence;
  Suit suit = Suit::Hearts;  // sequences
  int start = 0;             // sequences
  int length = 0;
  Value value = Value::Ace;  // sets
  unsigned suit_mask = 0;    // sets: suits of the natural slots
  bool covers_wcj = false;   // some slot's natural is the face-up wildcard card

  int last() const { return start + length - 1; }
};

/// Every sequence span (suit, start, length 3..14, no wrap) followed by every
/// set template (value, 3- or 4-suit subset), in a fixed order.
inline std::vector<MeldTemplate> enumerate_melds(const JokerContext& ctx) {
  std::vector<MeldTemplate> out;
  const Card w = ctx.wcj();
  const PositionSet wp = positions(w.value());
  for (Suit s : kAllSuits) {
    for (int start = kMinPosition; start + kMinMeldSize - 1 <= kMaxPosition; ++start) {
      for (int len = kMinMeldSize; start + len - 1 <= kMaxPosition; ++len) {
        MeldTemplate t{MeldKind::Sequence, s, start, len, Value::Ace, 0, false};
        t.covers_wcj = w.suit() == s && std::any_of(wp.begin(), wp.end(), [&](int p) {
          return p >= start && p <= t.last();
        });
        out.push_back(t);
      }
    }
  }
  for (Value v : kAllValues) {
    for (unsigned mask = 1; mask < 16; ++mask) {
      const int n = __builtin_popcount(mask);
      if (n < kMinMeldSize) continue;
      MeldTemplate t{MeldKind::Set, Suit::Hearts, 0, n, v, mask, false};
      t.covers_wcj = v == w.value() && (mask & (1u << index_of(w.suit())));
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace rummy
