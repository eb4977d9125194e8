#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rummy/card.hpp"
#include "rummy/meld.hpp"

namespace rummy {

inline constexpr int kMinSequences = 2;

/// A partition of a hand into melds. The slots of the melds are the
/// provenance: every card of the hand sits in exactly one slot.
struct Declaration {
  std::vector<Meld> melds;

  std::vector<Card> cards() const {
    std::vector<Card> out;
    for (const auto& m : melds) out.insert(out.end(), m.slots.begin(), m.slots.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  int size() const {
    int n = 0;
    for (const auto& m : melds) n += m.size();
    return n;
  }
};

enum class DeclarationFault : std::uint8_t {
  None,
  InvalidMeld,
  WrongSize,
  CardReuse,
  TooFewSequences,
  NoPureSequence,
  CardsMismatch,
};

inline const char* to_string(DeclarationFault f) {
  switch (f) {
    case DeclarationFault::None: return "none";
    case DeclarationFault::InvalidMeld: return "invalid_meld";
    case DeclarationFault::WrongSize: return "wrong_size";
    case DeclarationFault::CardReuse: return "card_reused";
    case DeclarationFault::TooFewSequences: return "too_few_sequences";
    case DeclarationFault::NoPureSequence: return "no_pure_sequence";
    case DeclarationFault::CardsMismatch: return "cards_do_not_match_hand";
  }
  return "unknown";
}

struct DeclarationCheck {
  bool valid = false;
  DeclarationFault fault = DeclarationFault::None;
  int meld_index = -1;
  MeldFault meld_fault = MeldFault::None;

  explicit operator bool() const { return valid; }
};

/// Checks meld validity, physical card uniqueness across melds, the 13-card
/// total and the two-sequence rule (one pure sequence plus another sequence).
inline DeclarationCheck validate_declaration(const Declaration& d, const JokerContext& ctx) {
  auto fail = [](DeclarationFault f, int idx = -1, MeldFault mf = MeldFault::None) {
    return DeclarationCheck{false, f, idx, mf};
  };
  if (d.size() != kHandSize) return fail(DeclarationFault::WrongSize);
  int sequences = 0;
  bool pure_sequence = false;
  for (std::size_t i = 0; i < d.melds.size(); ++i) {
    const MeldCheck chk = validate_meld(d.melds[i], ctx);
    if (!chk) return fail(DeclarationFault::InvalidMeld, static_cast<int>(i), chk.fault);
    if (d.melds[i].is_sequence()) {
      ++sequences;
      pure_sequence = pure_sequence || chk.pure;
    }
  }
  std::uint64_t seen = 0;
  int printed = 0;
  for (Card c : d.cards()) {
    if (c.is_printed_joker()) {
      if (++printed > ctx.deck().printed_jokers) return fail(DeclarationFault::CardReuse);
    } else {
      if (seen & bit_of(c)) return fail(DeclarationFault::CardReuse);
      seen |= bit_of(c);
    }
  }
  if (sequences < kMinSequences) return fail(DeclarationFault::TooFewSequences);
  if (!pure_sequence) return fail(DeclarationFault::NoPureSequence);
  return DeclarationCheck{true};
}

inline DeclarationCheck validate_declaration_of(const Declaration& d, const Hand& h,
                                                const JokerContext& ctx) {
  DeclarationCheck chk = validate_declaration(d, ctx);
  if (!chk) return chk;
  if (d.cards() != h.cards()) return DeclarationCheck{false, DeclarationFault::CardsMismatch};
  return chk;
}

inline int joker_substitutions(const Declaration& d) {
  int n = 0;
  for (const auto& m : d.melds)
    for (int i = 0; i < m.size(); ++i) n += m.face_fit(i) ? 0 : 1;
  return n;
}

/// Melds rendered and sorted; this ordering is the canonical form.
inline std::vector<std::string> render_declaration(const Declaration& d, const JokerContext& ctx) {
  std::vector<std::string> out;
  for (const auto& m : d.melds) out.push_back(render_meld(m, ctx));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string render_joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " | ";
    out += p;
  }
  return out;
}

inline Declaration canonicalize(Declaration d, const JokerContext& ctx) {
  for (auto& m : d.melds)
    if (!m.is_sequence()) std::sort(m.slots.begin(), m.slots.end());
  std::sort(d.melds.begin(), d.melds.end(), [&](const Meld& a, const Meld& b) {
    return render_meld(a, ctx) < render_meld(b, ctx);
  });
  return d;
}

struct DeclareResult {
  bool declarable = false;
  std::optional<Declaration> witness;
};

namespace detail {

// Exhaustive partition of the hand into melds built from its own cards.
// Every declaration is visited once per distinct meld choice; branches that
// cannot complete are remembered by (remaining cards, sequence count, pure).
class DeclareSearch {
 public:
  DeclareSearch(const Hand& h, const JokerContext& ctx) : ctx_(ctx), cards_(h.cards()) {
    n_ = static_cast<int>(cards_.size());
  }

  DeclareResult run() {
    search(full_mask(), 0, false);
    DeclareResult r;
    if (best_) {
      r.declarable = true;
      r.witness = canonicalize(*best_, ctx_);
    }
    return r;
  }

 private:
  using Mask = std::uint32_t;

  Mask full_mask() const { return (Mask{1} << n_) - 1; }

  bool search(Mask remaining, int sequences, bool pure) {
    if (remaining == 0) {
      if (sequences >= kMinSequences && pure) {
        offer();
        return true;
      }
      return false;
    }
    const std::uint64_t key = (std::uint64_t{remaining} << 3) |
                              (static_cast<std::uint64_t>(std::min(sequences, 2)) << 1) |
                              (pure ? 1u : 0u);
    if (dead_.count(key)) return false;

    // Anchor on the first non-joker natural; jokers go last.
    int anchor = -1;
    for (int i = 0; i < n_; ++i)
      if ((remaining >> i & 1) && !ctx_.is_joker(cards_[i])) { anchor = i; break; }
    if (anchor < 0)
      for (int i = 0; i < n_; ++i)
        if (remaining >> i & 1) { anchor = i; break; }

    bool any = false;
    for_each_meld(remaining, anchor, [&](const Meld& m, Mask used) {
      const MeldCheck chk = validate_meld(m, ctx_);
      if (!chk) return;
      path_.push_back(m);
      const bool ok = search(remaining & ~used, sequences + (m.is_sequence() ? 1 : 0),
                             pure || (m.is_sequence() && chk.pure));
      path_.pop_back();
      any = any || ok;
    });
    if (!any) dead_.insert(key);
    return any;
  }

  void offer() {
    Declaration d{path_};
    const int jokers = joker_substitutions(d);
    const std::string text = render_joined(render_declaration(d, ctx_));
    if (!best_ || jokers < best_jokers_ || (jokers == best_jokers_ && text < best_text_)) {
      best_ = d;
      best_jokers_ = jokers;
      best_text_ = text;
    }
  }

  bool fits_sequence_slot(Card c, Suit s, int p) const {
    return c == Card::natural(value_at(p), s) || ctx_.is_joker(c);
  }

  template <typename F>
  void for_each_meld(Mask remaining, int anchor, F&& emit) {
    const Card a = cards_[anchor];
    const int avail = __builtin_popcount(remaining);
    const bool anchor_is_joker = ctx_.is_joker(a);

    // Sequences.
    for (Suit s : kAllSuits) {
      if (!anchor_is_joker && a.suit() != s) continue;
      for (int start = kMinPosition; start + kMinMeldSize - 1 <= kMaxPosition; ++start) {
        for (int len = kMinMeldSize; len <= avail && start + len - 1 <= kMaxPosition; ++len) {
          bool anchor_fits = false;
          for (int p = start; p < start + len; ++p) anchor_fits = anchor_fits || fits_sequence_slot(a, s, p);
          if (!anchor_fits) continue;
          std::vector<Card> slots(static_cast<std::size_t>(len));
          fill_sequence(remaining, anchor, s, start, len, 0, 0, false, slots, emit);
        }
      }
    }

    // Sets: the anchor plus a subset of other fitting cards.
    for (Value v : kAllValues) {
      if (!anchor_is_joker && a.value() != v) continue;
      std::vector<int> pool;
      for (int i = 0; i < n_; ++i) {
        if (i == anchor || !(remaining >> i & 1)) continue;
        const Card c = cards_[i];
        if ((c.is_natural() && c.value() == v) || ctx_.is_joker(c)) pool.push_back(i);
      }
      for (int extra = kMinMeldSize - 1; extra <= kMaxSetSize - 1; ++extra) {
        choose_subsets(pool, extra, [&](const std::vector<int>& pick) {
          std::vector<Card> slots{a};
          Mask used = Mask{1} << anchor;
          for (int i : pick) {
            slots.push_back(cards_[i]);
            used |= Mask{1} << i;
          }
          emit(Meld::set(v, std::move(slots)), used);
        });
      }
    }
  }

  template <typename F>
  void fill_sequence(Mask remaining, int anchor, Suit s, int start, int len, int slot, Mask used,
                     bool anchor_placed, std::vector<Card>& slots, F&& emit) {
    if (slot == len) {
      if (anchor_placed) emit(Meld::sequence(s, start, slots), used);
      return;
    }
    const int p = start + slot;
    // Slots left must still be able to hold the anchor if it is not yet placed.
    std::uint64_t tried = 0;
    for (int i = 0; i < n_; ++i) {
      if (!(remaining >> i & 1) || (used >> i & 1)) continue;
      const Card c = cards_[i];
      if (!fits_sequence_slot(c, s, p)) continue;
      // Identical printed jokers are interchangeable.
      const std::uint64_t id = c.is_printed_joker() ? (std::uint64_t{1} << 63) : bit_of(c);
      if (tried & id) continue;
      tried |= id;
      slots[static_cast<std::size_t>(slot)] = c;
      fill_sequence(remaining, anchor, s, start, len, slot + 1, used | (Mask{1} << i),
                    anchor_placed || i == anchor, slots, emit);
    }
  }

  template <typename F>
  void choose_subsets(const std::vector<int>& pool, int k, F&& emit) {
    std::vector<int> pick;
    std::unordered_set<std::string> seen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(pick.size()) == k) {
        std::string sig;
        for (int i : pick) sig += static_cast<char>(cards_[i].code());
        if (seen.insert(sig).second) emit(pick);
        return;
      }
      for (std::size_t j = from; j < pool.size(); ++j) {
        pick.push_back(pool[j]);
        self(self, j + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }

  const JokerContext& ctx_;
  std::vector<Card> cards_;
  int n_ = 0;
  std::vector<Meld> path_;
  std::unordered_set<std::uint64_t> dead_;
  std::optional<Declaration> best_;
  int best_jokers_ = 0;
  std::string best_text_;
};

}  // namespace detail

/// Decides whether the hand itself partitions into a valid declaration.
/// The witness prefers fewer joker substitutions, then the lexicographically
/// smallest canonical rendering.
inline DeclareResult is_declarable(const Hand& h, const JokerContext& ctx) {
  return detail::DeclareSearch(h, ctx).run();
}

}  // namespace rummy
