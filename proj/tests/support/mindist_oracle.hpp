#pragma once

// Reference MinDist for tests. Tries every subset K of the hand, largest
// first, and asks whether some declarable hand contains K. Completion is a
// plain backtracking search over concrete meld shapes and concrete cards;
// the only cuts are slot and card availability.

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "rummy/card.hpp"
#include "rummy/meld.hpp"

namespace rummy::oracle {

class Completion {
 public:
  Completion(const Hand& h, const JokerContext& ctx) : ctx_(ctx), hand_(h.cards()) {
    for (const MeldTemplate& t : enumerate_melds(ctx))
      if (t.kind == MeldKind::Sequence) shapes_.push_back(Shape{true, t.suit, t.start, t.length, Value::Ace});
    for (Value v : kAllValues)
      for (int n = kMinMeldSize; n <= kMaxSetSize; ++n) shapes_.push_back(Shape{false, Suit::Hearts, 0, n, v});
  }

  // Largest number of hand cards some declarable hand shares with this one.
  int max_kept() {
    const int n = static_cast<int>(hand_.size());
    for (int k = n; k >= 0; --k) {
      bool found = false;
      for_each_subset(n, k, [&](std::uint32_t mask) {
        if (!found && completes(mask)) found = true;
      });
      if (found) return k;
    }
    return 0;
  }

 private:
  struct Shape {
    bool sequence;
    Suit suit;
    int start;
    int length;
    Value value;
  };

  // Outside cards taken so far. Outside jokers are interchangeable, so only
  // their number is tracked; the wildcard-value naturals they may be drawn
  // from are limited by those taken at face.
  struct Used {
    std::uint64_t naturals = 0;
    int jokers = 0;
  };

  template <typename F>
  void for_each_subset(int n, int k, F&& f) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
      if (static_cast<int>(pick.size()) == k) {
        std::uint32_t mask = 0;
        for (int i : pick) mask |= 1u << i;
        f(mask);
        return;
      }
      for (int i = from; i < n; ++i) {
        // Printed jokers are identical: take them in index order.
        if (i > from && hand_[i].is_printed_joker() && hand_[i - 1].is_printed_joker()) continue;
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }

  bool completes(std::uint32_t keep) {
    keep_naturals_ = 0;
    int keep_printed = 0;
    for (int i = 0; i < static_cast<int>(hand_.size()); ++i) {
      if (!(keep >> i & 1)) continue;
      if (hand_[i].is_printed_joker()) ++keep_printed;
      else keep_naturals_ |= bit_of(hand_[i]);
    }
    outside_printed_ = ctx_.deck().printed_jokers - keep_printed;
    dead_place_.clear();
    dead_free_.clear();
    return place(keep, Used{}, 0, 0, false);
  }

  bool outside_natural_free(Card c, const Used& u) const {
    return !ctx_.is_wcj(c) && !(keep_naturals_ & bit_of(c)) && !(u.naturals & bit_of(c));
  }

  // Outside jokers taken must not exceed those still drawable.
  bool jokers_fit(const Used& u) const {
    int avail = outside_printed_;
    for (Suit s : kAllSuits)
      avail += outside_natural_free(Card::natural(ctx_.wild_value(), s), u) ? 1 : 0;
    return u.jokers <= avail;
  }

  // Search states that already failed, per K.
  struct Key {
    std::uint64_t naturals;
    std::uint64_t rest;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.naturals * 0x9E3779B97F4A7C15ull ^ k.rest; }
  };
  static Key make_key(const Used& u, int slots, int sequences, bool pure, std::uint32_t extra) {
    const std::uint64_t rest = (std::uint64_t{extra} << 16) | (static_cast<std::uint64_t>(u.jokers) << 8) |
                               (static_cast<std::uint64_t>(slots) << 3) |
                               (static_cast<std::uint64_t>(std::min(sequences, 2)) << 1) | (pure ? 1u : 0u);
    return Key{u.naturals, rest};
  }

  bool shape_holds(const Shape& sh, Card a) const {
    if (ctx_.is_joker(a)) return true;
    if (!sh.sequence) return a.value() == sh.value;
    if (a.suit() != sh.suit) return false;
    for (int p : positions(a.value()))
      if (p >= sh.start && p < sh.start + sh.length) return true;
    return false;
  }

  // Place the remaining K cards, one meld per lowest unplaced card.
  bool place(std::uint32_t left, const Used& used, int slots, int sequences, bool pure) {
    if (left == 0) return fill_free(used, slots, sequences, pure, 0);
    const Key key = make_key(used, slots, sequences, pure, left);
    if (dead_place_.count(key)) return false;
    const int anchor = __builtin_ctz(left);
    for (const Shape& sh : shapes_) {
      if (slots + sh.length > kHandSize || !shape_holds(sh, hand_[anchor])) continue;
      // Outside cards this meld may take without crowding out K.
      const int room = kHandSize - slots - __builtin_popcount(left);
      Fill f{std::vector<Card>(static_cast<std::size_t>(sh.length)), 0, 0};
      const bool ok = fill_shape(sh, 0, f, left, 0, used, room, [&](std::uint32_t placed, const Used& u2) {
        if (!(placed >> anchor & 1) || f.naturals == 0) return false;
        return place(left & ~placed, u2, slots + sh.length, sequences + (sh.sequence ? 1 : 0),
                     pure || (sh.sequence && f.jokers == 0));
      });
      if (ok) return true;
    }
    dead_place_.insert(key);
    return false;
  }

  // Melds made only of outside cards, in shape order.
  bool fill_free(const Used& used, int slots, int sequences, bool pure, std::size_t from) {
    if (slots == kHandSize) return sequences >= kMinSequences && pure;
    const Key key = make_key(used, slots, sequences, pure, static_cast<std::uint32_t>(from));
    if (dead_free_.count(key)) return false;
    for (std::size_t k = from; k < shapes_.size(); ++k) {
      const Shape& sh = shapes_[k];
      if (slots + sh.length > kHandSize) continue;
      Fill f{std::vector<Card>(static_cast<std::size_t>(sh.length)), 0, 0};
      const bool ok = fill_shape(sh, 0, f, 0, 0, used, sh.length, [&](std::uint32_t, const Used& u2) {
        if (f.naturals == 0) return false;
        return fill_free(u2, slots + sh.length, sequences + (sh.sequence ? 1 : 0),
                         pure || (sh.sequence && f.jokers == 0), k);
      });
      if (ok) return true;
    }
    dead_free_.insert(key);
    return false;
  }

  // Slot contents of the meld being built; outside jokers are left as
  // printed-joker placeholders.
  struct Fill {
    std::vector<Card> slots;
    int naturals;
    int jokers;
  };

  // Assign every slot of a shape. K cards come from `left`; at most `room`
  // slots take outside cards. `placed` collects the K cards used.
  template <typename F>
  bool fill_shape(const Shape& sh, int i, Fill& f, std::uint32_t left, std::uint32_t placed,
                  const Used& used, int room, F&& done) {
    if (i == sh.length) return done(placed, used);
    auto put = [&](Card c, bool face, std::uint32_t placed2, const Used& u2, int room2) {
      f.slots[static_cast<std::size_t>(i)] = c;
      (face ? f.naturals : f.jokers) += 1;
      const bool ok = fill_shape(sh, i + 1, f, left, placed2, u2, room2, done);
      (face ? f.naturals : f.jokers) -= 1;
      return ok;
    };
    // Face cards for this slot; set naturals go in ascending suit order.
    std::vector<Card> faces;
    if (sh.sequence) {
      faces.push_back(Card::natural(value_at(sh.start + i), sh.suit));
    } else {
      int lowest = 0;
      for (int j = 0; j < i; ++j) {
        const Card c = f.slots[static_cast<std::size_t>(j)];
        if (c.is_natural() && c.value() == sh.value) lowest = std::max(lowest, index_of(c.suit()) + 1);
      }
      for (int s = lowest; s < kNumSuits; ++s) faces.push_back(Card::natural(sh.value, suit_from_index(s)));
    }
    auto is_face = [&](Card c) { return std::find(faces.begin(), faces.end(), c) != faces.end(); };
    for (int j = 0; j < static_cast<int>(hand_.size()); ++j) {
      if (!(left >> j & 1) || (placed >> j & 1)) continue;
      const Card c = hand_[j];
      const bool face = is_face(c);
      if (!face && !ctx_.is_joker(c)) continue;
      if (c.is_printed_joker() && j > 0 && hand_[j - 1].is_printed_joker() && (left >> (j - 1) & 1) &&
          !(placed >> (j - 1) & 1))
        continue;
      if (put(c, face, placed | (1u << j), used, room)) return true;
    }
    if (room == 0) return false;
    for (Card c : faces) {
      if (!outside_natural_free(c, used)) continue;
      Used u2 = used;
      u2.naturals |= bit_of(c);
      if (!jokers_fit(u2)) continue;
      if (put(c, true, placed, u2, room - 1)) return true;
    }
    Used u2 = used;
    ++u2.jokers;
    if (jokers_fit(u2) && put(Card::printed_joker(), false, placed, u2, room - 1)) return true;
    return false;
  }

  const JokerContext& ctx_;
  std::vector<Card> hand_;
  std::vector<Shape> shapes_;
  std::uint64_t keep_naturals_ = 0;
  int outside_printed_ = 0;
  std::unordered_set<Key, KeyHash> dead_place_;
  std::unordered_set<Key, KeyHash> dead_free_;
};

inline int min_dist_oracle(const Hand& h, const JokerContext& ctx) {
  h.require_playable(ctx);
  return kHandSize - Completion(h, ctx).max_kept();
}

}  // namespace rummy::oracle
