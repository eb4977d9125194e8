#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rummy/card.hpp"
#include "rummy/declare.hpp"
#include "rummy/meld.hpp"

namespace rummy {

/// Number of cards of h that must be replaced to obtain h2 (multiset
/// difference).
inline int distance(const Hand& h, const Hand& h2) {
  int common = __builtin_popcountll(h.natural_mask() & h2.natural_mask());
  common += std::min(h.printed_jokers(), h2.printed_jokers());
  return kHandSize - common;
}

struct MinDistResult {
  int value = 0;
  Declaration witness;
  Hand target;
  std::vector<Card> kept;
  std::vector<std::pair<Card, Card>> replacements;  // (removed, added)
};

// Kept/replacement bookkeeping shared by every producer of target hands.
inline void fill_replacements(const Hand& h, const Hand& target, std::vector<Card>& kept,
                              std::vector<std::pair<Card, Card>>& replacements) {
  kept.clear();
  replacements.clear();
  std::vector<Card> removed;
  std::vector<Card> added;
  for (Card c : h.cards())
    if (c.is_natural() && target.contains(c)) kept.push_back(c);
  const int common_jokers = std::min(h.printed_jokers(), target.printed_jokers());
  for (int i = 0; i < common_jokers; ++i) kept.push_back(Card::printed_joker());
  for (Card c : h.cards())
    if (c.is_natural() && !target.contains(c)) removed.push_back(c);
  for (int i = common_jokers; i < h.printed_jokers(); ++i) removed.push_back(Card::printed_joker());
  for (Card c : target.cards())
    if (c.is_natural() && !h.contains(c)) added.push_back(c);
  for (int i = common_jokers; i < target.printed_jokers(); ++i) added.push_back(Card::printed_joker());
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < removed.size(); ++i) replacements.emplace_back(removed[i], added[i]);
}

namespace detail {

// Sweep over positions 1..14. At each position every suit decides, for its
// natural card, whether it feeds a run slot, a set of that value, or nothing,
// and which active runs continue, end, or start. Sets of a value are closed
// after the four suits have been visited. The memo keys on everything the
// remaining positions can observe.
class MinDistSolver {
 public:
  MinDistSolver(const Hand& h, const JokerContext& ctx) : hand_(h), ctx_(ctx) {
    const Card w = ctx.wcj();
    for (int s = 0; s < kNumSuits; ++s) {
      for (int p = kMinPosition; p <= kMaxPosition; ++p) {
        const Card c = Card::natural(value_at(p), suit_from_index(s));
        cell_[s][p] = c == w ? kAbsent : (h.contains(c) ? kInHand : kInPool);
      }
    }
    hand_jokers_ = h.joker_count(ctx);
    joker_supply_ = ctx.joker_supply();
    // An ace counts as ahead until its high (position 14) cell is swept.
    for (int step = kTerminalStep - 1; step >= 0; --step) {
      const int p = step / kStepsPerPosition + 1;
      const int sub = step % kStepsPerPosition;
      int here = 0;
      if (sub < kNumSuits && p != kMinPosition) {
        const Card c = Card::natural(value_at(p), suit_from_index(sub));
        here = h.contains(c) && !ctx.is_joker(c) ? 1 : 0;
      }
      ahead_[static_cast<std::size_t>(step)] = ahead_[static_cast<std::size_t>(step) + 1] + here;
    }
    build_reach();
  }

  // Iterative deepening on the replacement budget: the first budget that
  // admits a declaration is the minimum.
  int solve() {
    for (int budget = 0; budget <= kHandSize; ++budget) {
      path_.clear();
      if (feasible(0, State{}, kHandSize - budget)) {
        best_ = kHandSize - budget;
        return best_;
      }
    }
    throw std::logic_error("no declaration reachable from hand");
  }

  MinDistResult witness() {
    if (best_ < 0) solve();
    return replay();
  }

 private:
  static constexpr int kAbsent = 0;
  static constexpr int kInHand = 1;
  static constexpr int kInPool = 2;
  static constexpr int kStepsPerPosition = kNumSuits + 1;
  static constexpr int kTerminalStep = (kMaxPosition - 1) * kStepsPerPosition + kNumSuits;
  static constexpr int kMaxRunsPerSuit = 2;
  static constexpr int kNeg = -100;

  // Run codes: 0 = none, otherwise 1 + (min(len,3) - 1) * 3 + status.
  enum Status { kPure = 0, kImpure = 1, kNoNatural = 2 };
  static constexpr int code(int len, int status) { return 1 + (std::min(len, 3) - 1) * 3 + status; }
  static constexpr int len_of(int c) { return (c - 1) / 3 + 1; }
  static constexpr int status_of(int c) { return (c - 1) % 3; }

  struct State {
    std::array<std::uint8_t, 4> runs{};  // per suit: a*10 + b with a <= b
    std::uint8_t ace_used = 0;
    std::uint8_t slots = 0;
    std::uint8_t jokers = 0;
    std::uint8_t face_hand = 0;  // wildcard-value hand cards used at face
    std::uint8_t face_pool = 0;  // wildcard-value pool cards used at face
    std::uint8_t run_count = 0;  // capped at 2
    std::uint8_t set_naturals = 0;
    bool pure = false;

    std::uint64_t pack(int step) const {
      std::uint64_t k = static_cast<std::uint64_t>(step);
      for (auto r : runs) k = (k << 7) | r;
      k = (k << 4) | ace_used;
      k = (k << 4) | slots;
      k = (k << 3) | jokers;
      k = (k << 2) | face_hand;
      k = (k << 2) | face_pool;
      k = (k << 2) | run_count;
      k = (k << 3) | set_naturals;
      k = (k << 1) | (pure ? 1 : 0);
      return k;
    }
  };

  struct Codes {
    std::array<int, 2> c{};
    int n = 0;
  };

  static Codes decode(std::uint8_t packed) {
    Codes out;
    const int a = packed / 10, b = packed % 10;
    if (a) out.c[out.n++] = a;
    if (b) out.c[out.n++] = b;
    return out;
  }
  static std::uint8_t encode(Codes codes) {
    if (codes.n == 0) return 0;
    if (codes.n == 1) return static_cast<std::uint8_t>(codes.c[0]);
    int a = codes.c[0], b = codes.c[1];
    if (a > b) std::swap(a, b);
    return static_cast<std::uint8_t>(a * 10 + b);
  }

  // One way of handling a single (suit, position) cell.
  struct SuitOption {
    std::array<bool, 2> keep{};  // existing run i continues
    int fresh = 0;               // runs started here
    int natural_to = -1;         // -1 unused, -2 set, else index among runs at p
    Codes next;                  // codes of runs at p: continuing first, then fresh
    bool closes_pure = false;
    int jokers = 0;
    int slots = 0;
  };

  static constexpr int kToSet = -2;

  template <typename F>
  void suit_options(const Codes& cur, int p, int cell, bool sets_here, F&& emit) const {
    const int combos = 1 << cur.n;
    for (int mask = 0; mask < combos; ++mask) {
      SuitOption base;
      bool ok = true;
      int kept_runs = 0;
      for (int i = 0; i < cur.n; ++i) {
        const bool cont = mask >> i & 1;
        base.keep[static_cast<std::size_t>(i)] = cont;
        if (cont) {
          ++kept_runs;
        } else {
          if (len_of(cur.c[i]) < 3 || status_of(cur.c[i]) == kNoNatural) ok = false;
          if (status_of(cur.c[i]) == kPure) base.closes_pure = true;
        }
      }
      if (!ok) continue;
      const int max_fresh = p <= kMaxPosition - 2 ? kMaxRunsPerSuit - kept_runs : 0;
      for (int fresh = 0; fresh <= max_fresh; ++fresh) {
        const int at_p = kept_runs + fresh;
        // natural_to: -1, -2 (set), or a run index; skip the symmetric
        // duplicate of giving it to the second fresh run.
        for (int target = kToSet; target < at_p; ++target) {
          if (target == kToSet && (!sets_here || cell == kAbsent)) continue;
          if (target >= 0 && cell == kAbsent) continue;
          if (target >= 0 && fresh == 2 && target == at_p - 1) continue;
          SuitOption opt = base;
          opt.fresh = fresh;
          opt.natural_to = target;
          opt.slots = at_p + (target == kToSet ? 1 : 0);
          opt.next.n = 0;
          int idx = 0;
          auto push = [&](int len, int status) {
            const bool nat = idx == target;
            int st = status;
            if (nat) {
              if (st == kNoNatural) st = kImpure;
            } else {
              ++opt.jokers;
              if (st == kPure) st = kImpure;
            }
            opt.next.c[opt.next.n++] = code(len, st);
            ++idx;
          };
          for (int i = 0; i < cur.n; ++i)
            if (opt.keep[static_cast<std::size_t>(i)]) push(len_of(cur.c[i]) + 1, status_of(cur.c[i]));
          for (int f = 0; f < fresh; ++f) {
            // A fresh run is pure if it opens on a natural, else natural-less.
            const int st = (idx == target) ? kPure : kNoNatural;
            const bool nat = idx == target;
            if (!nat) ++opt.jokers;
            opt.next.c[opt.next.n++] = code(1, st);
            ++idx;
          }
          emit(opt);
        }
      }
    }
  }

  // Returns false if the option violates a bound.
  bool apply_suit(State& st, int s, int p, const SuitOption& opt, int& kept) const {
    const int cell = cell_[s][p];
    st.runs[static_cast<std::size_t>(s)] = encode(opt.next);
    st.pure = st.pure || opt.closes_pure;
    st.slots = static_cast<std::uint8_t>(st.slots + opt.slots);
    st.jokers = static_cast<std::uint8_t>(st.jokers + opt.jokers);
    st.run_count = static_cast<std::uint8_t>(std::min(2, st.run_count + opt.fresh));
    kept = 0;
    if (opt.natural_to != -1) {
      if (cell == kInHand) kept = 1;
      if (value_at(p) == ctx_.wild_value()) {
        if (cell == kInHand) ++st.face_hand;
        else ++st.face_pool;
      }
      if (p == kMinPosition) st.ace_used = static_cast<std::uint8_t>(st.ace_used | (1u << s));
      if (opt.natural_to == kToSet) ++st.set_naturals;
    }
    return within_bounds(st);
  }

  bool within_bounds(const State& st) const {
    if (st.slots > kHandSize) return false;
    if (st.jokers + st.face_hand + st.face_pool > joker_supply_) return false;
    int owed = 0;
    for (auto r : st.runs) {
      const Codes cs = decode(r);
      for (int i = 0; i < cs.n; ++i) owed += 3 - len_of(cs.c[i]);
    }
    return st.slots + owed <= kHandSize;
  }

  struct SetOption {
    int jokers = 0;
    int sets = 0;  // 0, 1 or 2
    int size = 0;  // total slots of the sets
  };

  template <typename F>
  static void set_options(int k, F&& emit) {
    if (k == 0) {
      emit(SetOption{0, 0, 0});
      return;
    }
    for (int t = std::max(kMinMeldSize, k); t <= kMaxSetSize; ++t) emit(SetOption{t - k, 1, t});
    if (k >= 2)
      for (int t = 2 * kMinMeldSize; t <= 2 * kMaxSetSize; ++t) emit(SetOption{t - k, 2, t});
  }

  struct Decision {
    SuitOption suit;
    SetOption set;
  };

  int cell_state(int s, int p, const State& st) const {
    int cell = cell_[s][p];
    if (p == kMaxPosition && (st.ace_used >> s & 1)) cell = kAbsent;
    return cell;
  }

  int terminal(const State& st) const {
    bool pure = st.pure;
    for (auto r : st.runs) {
      const Codes cs = decode(r);
      for (int i = 0; i < cs.n; ++i) {
        if (len_of(cs.c[i]) < 3 || status_of(cs.c[i]) == kNoNatural) return kNeg;
        if (status_of(cs.c[i]) == kPure) pure = true;
      }
    }
    if (st.slots != kHandSize || st.run_count < kMinSequences || !pure) return kNeg;
    if (st.jokers + st.face_hand + st.face_pool > joker_supply_) return kNeg;
    return std::min<int>(st.jokers, hand_jokers_ - st.face_hand);
  }

  // Slot cost bound. Every meld the remaining sweep can still touch is a run
  // continuing from the next unswept cell of its suit, a fresh run, or a set
  // whose value is not yet closed. Charge each hand natural ahead the least
  // (meld size / hand naturals in that meld) over such melds; the charges of
  // the kept cards of one meld never exceed its remaining slots, so the kept
  // naturals fit inside the free slots by total charge.
  static constexpr std::int64_t kScale = 360360;  // lcm(1..14)

  void build_reach() {
    auto hand_natural = [&](int s, int q) {
      return cell_[s][q] == kInHand && !ctx_.is_joker(Card::natural(value_at(q), suit_from_index(s)));
    };
    for (int step = 0; step <= kTerminalStep; ++step) {
      const int p = step / kStepsPerPosition + 1;
      const int sub = step % kStepsPerPosition;
      std::array<int, kNumSuits> next{};
      for (int s = 0; s < kNumSuits; ++s) next[s] = (sub < kNumSuits && s >= sub) ? p : p + 1;
      if (step == kTerminalStep) next.fill(kMaxPosition + 1);

      auto span_cost = [&](int s, int a, int b) -> std::int64_t {
        int n = 0;
        for (int q = a; q <= b; ++q) n += hand_natural(s, q) ? 1 : 0;
        return n ? (b - a + 1) * kScale / n : std::numeric_limits<std::int64_t>::max();
      };
      // Cards ahead: suit, fresh-meld charge, continuation charge.
      struct Ahead {
        int suit;
        std::int64_t fresh;
        std::int64_t cont;
      };
      constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
      std::vector<Ahead> cards;
      for (int s = 0; s < kNumSuits; ++s) {
        for (int q = kMinPosition + 1; q <= kMaxPosition; ++q) {
          if (!hand_natural(s, q)) continue;
          // An ace may still sit at 1 if its suit has not been swept at 1.
          std::vector<int> at;
          if (q >= next[s]) at.push_back(q);
          if (q == kMaxPosition && kMinPosition >= next[s]) at.push_back(kMinPosition);
          if (at.empty()) continue;
          Ahead c{s, kNone, kNone};
          for (int pos : at) {
            for (int a = next[s]; a <= pos; ++a)
              for (int b = std::max(pos, a + kMinMeldSize - 1); b <= kMaxPosition; ++b)
                c.fresh = std::min(c.fresh, span_cost(s, a, b));
            for (int b = pos; b <= kMaxPosition; ++b) c.cont = std::min(c.cont, span_cost(s, next[s], b));
          }
          const int vp = positions(value_at(q)).min();  // where its set closes
          if (vp == p && sub < kNumSuits && s >= sub) {
            c.fresh = std::min(c.fresh, kScale);  // may join a set already holding naturals
          } else if (vp > p) {
            int n = 0;
            for (int t = 0; t < kNumSuits; ++t) n += hand_natural(t, q) ? 1 : 0;
            c.fresh = std::min<std::int64_t>(c.fresh, std::max(kMinMeldSize, n) * kScale / n);
          }
          c.cont = std::min(c.cont, c.fresh);
          cards.push_back(c);
        }
      }
      for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<std::int64_t> cost;
        for (const Ahead& c : cards) cost.push_back((mask >> c.suit & 1) ? c.cont : c.fresh);
        std::sort(cost.begin(), cost.end());
        for (int f = 0; f <= kHandSize; ++f) {
          std::int64_t left = f * kScale;
          int k = 0;
          while (k < static_cast<int>(cost.size()) && cost[static_cast<std::size_t>(k)] <= left)
            left -= cost[static_cast<std::size_t>(k++)];
          reach_[static_cast<std::size_t>(step)][mask][static_cast<std::size_t>(f)] = static_cast<std::uint8_t>(k);
        }
      }
    }
  }

  // Upper bound on kept cards still obtainable from this state. Hand jokers
  // share melds with the charged naturals, so they only compete for the
  // slots the naturals leave over.
  int optimistic(int step, const State& st) const {
    const int free_jokers = hand_jokers_ - st.face_hand;
    const int committed = std::min<int>(st.jokers, free_jokers);
    const int by_cards = ahead_[static_cast<std::size_t>(step)] + free_jokers;
    const int slots_left = kHandSize - st.slots;
    unsigned mask = 0;
    for (int s = 0; s < kNumSuits; ++s)
      if (st.runs[static_cast<std::size_t>(s)]) mask |= 1u << s;
    const int naturals = reach_[static_cast<std::size_t>(step)][mask][static_cast<std::size_t>(slots_left)];
    const int future = naturals + std::min(free_jokers - committed, slots_left - naturals);
    return std::min(by_cards, committed + future);
  }

  // Can the sweep be completed with at least `need` more kept cards?
  bool feasible(int step, const State& st, int need) {
    if (step == kTerminalStep) return terminal(st) >= need;
    if (optimistic(step, st) < need) return false;
    const std::uint64_t key = st.pack(step);
    auto it = failed_.find(key);
    if (it != failed_.end() && need >= it->second) return false;

    const int p = step / kStepsPerPosition + 1;
    const int sub = step % kStepsPerPosition;
    bool found = false;
    if (sub < kNumSuits) {
      const Codes cur = decode(st.runs[static_cast<std::size_t>(sub)]);
      const int cell = cell_state(sub, p, st);
      std::array<SuitOption, 64> opts;
      std::size_t n = 0;
      suit_options(cur, p, cell, p < kMaxPosition, [&](const SuitOption& opt) { opts[n++] = opt; });
      // Try options that keep the hand card first.
      std::stable_sort(opts.begin(), opts.begin() + static_cast<std::ptrdiff_t>(n),
                       [&](const SuitOption& a, const SuitOption& b) {
                         const bool ka = a.natural_to != -1, kb = b.natural_to != -1;
                         if (ka != kb) return cell == kInHand ? ka : kb;
                         return a.jokers < b.jokers;
                       });
      for (std::size_t i = 0; i < n && !found; ++i) {
        State next = st;
        int kept = 0;
        if (!apply_suit(next, sub, p, opts[i], kept)) continue;
        path_.push_back(Decision{opts[i], {}});
        found = feasible(step + 1, next, need - kept);
        if (!found) path_.pop_back();
      }
    } else {
      set_options(st.set_naturals, [&](const SetOption& opt) {
        if (found) return;
        State next = st;
        next.set_naturals = 0;
        next.slots = static_cast<std::uint8_t>(next.slots + opt.jokers);
        next.jokers = static_cast<std::uint8_t>(next.jokers + opt.jokers);
        if (!within_bounds(next)) return;
        path_.push_back(Decision{{}, opt});
        found = feasible(step + 1, next, need);
        if (!found) path_.pop_back();
      });
    }
    if (!found) {
      if (it == failed_.end()) failed_.emplace(key, need);
      else it->second = std::min<int>(it->second, need);
    }
    return found;
  }

  // ---- witness reconstruction -------------------------------------------

  struct LiveRun {
    int start = 0;
    std::vector<bool> natural;  // per slot
    int code = 0;
  };
  struct DoneSet {
    Value value;
    std::vector<Suit> naturals;
    SetOption shape;
  };

  // Re-applies the recorded decisions to concrete runs and sets.
  MinDistResult replay() const {
    std::array<std::vector<LiveRun>, 4> live;
    std::vector<std::pair<Suit, LiveRun>> done_runs;
    std::vector<DoneSet> done_sets;
    std::vector<Suit> set_suits;
    if (path_.size() != static_cast<std::size_t>(kTerminalStep))
      throw std::logic_error("min-dist decision path incomplete");

    for (int step = 0; step < kTerminalStep; ++step) {
      const int p = step / kStepsPerPosition + 1;
      const int sub = step % kStepsPerPosition;
      const Decision& d = path_[static_cast<std::size_t>(step)];
      if (sub < kNumSuits) {
        const SuitOption& opt = d.suit;
        auto& runs = live[static_cast<std::size_t>(sub)];
        std::vector<LiveRun> at_p;
        for (std::size_t i = 0; i < runs.size(); ++i) {
          if (opt.keep[i]) at_p.push_back(runs[i]);
          else done_runs.emplace_back(suit_from_index(sub), runs[i]);
        }
        for (int f = 0; f < opt.fresh; ++f) at_p.push_back(LiveRun{p, {}, 0});
        for (std::size_t i = 0; i < at_p.size(); ++i) {
          at_p[i].natural.push_back(static_cast<int>(i) == opt.natural_to);
          at_p[i].code = opt.next.c[i];
        }
        std::stable_sort(at_p.begin(), at_p.end(),
                         [](const LiveRun& a, const LiveRun& b) { return a.code < b.code; });
        runs = std::move(at_p);
        if (opt.natural_to == kToSet) set_suits.push_back(suit_from_index(sub));
      } else {
        if (d.set.sets > 0) done_sets.push_back(DoneSet{value_at(p), set_suits, d.set});
        set_suits.clear();
      }
    }
    for (int s = 0; s < kNumSuits; ++s)
      for (auto& r : live[static_cast<std::size_t>(s)]) done_runs.emplace_back(suit_from_index(s), r);
    return materialize(done_runs, done_sets);
  }

  MinDistResult materialize(const std::vector<std::pair<Suit, LiveRun>>& runs,
                            const std::vector<DoneSet>& sets) const {
    // Joker cards: hand jokers first so that they count as kept.
    std::vector<Card> used_face;
    for (const auto& [s, r] : runs)
      for (std::size_t i = 0; i < r.natural.size(); ++i)
        if (r.natural[i]) used_face.push_back(Card::natural(value_at(r.start + static_cast<int>(i)), s));
    for (const auto& ds : sets)
      for (Suit s : ds.naturals) used_face.push_back(Card::natural(ds.value, s));
    auto face_used = [&](Card c) { return std::find(used_face.begin(), used_face.end(), c) != used_face.end(); };

    std::vector<Card> joker_cards;
    for (int i = 0; i < hand_.printed_jokers(); ++i) joker_cards.push_back(Card::printed_joker());
    for (Card c : hand_.cards())
      if (c.is_natural() && ctx_.is_joker(c) && !face_used(c)) joker_cards.push_back(c);
    for (int i = hand_.printed_jokers(); i < ctx_.deck().printed_jokers; ++i)
      joker_cards.push_back(Card::printed_joker());
    for (Suit s : kAllSuits) {
      const Card c = Card::natural(ctx_.wild_value(), s);
      if (!hand_.contains(c) && !ctx_.is_wcj(c) && !face_used(c)) joker_cards.push_back(c);
    }
    std::size_t next_joker = 0;
    auto take_joker = [&]() {
      if (next_joker >= joker_cards.size()) throw std::logic_error("joker supply exhausted");
      return joker_cards[next_joker++];
    };

    MinDistResult out;
    for (const auto& [s, r] : runs) {
      std::vector<Card> slots;
      for (std::size_t i = 0; i < r.natural.size(); ++i)
        slots.push_back(r.natural[i] ? Card::natural(value_at(r.start + static_cast<int>(i)), s) : take_joker());
      out.witness.melds.push_back(Meld::sequence(s, r.start, std::move(slots)));
    }
    for (const auto& ds : sets) {
      std::vector<Card> naturals;
      for (Suit s : ds.naturals) naturals.push_back(Card::natural(ds.value, s));
      const int k = static_cast<int>(naturals.size());
      if (ds.shape.sets == 1) {
        std::vector<Card> slots = naturals;
        for (int i = k; i < ds.shape.size; ++i) slots.push_back(take_joker());
        out.witness.melds.push_back(Meld::set(ds.value, std::move(slots)));
      } else {
        const int first = ds.shape.size - kMinMeldSize > kMinMeldSize ? kMaxSetSize : kMinMeldSize;
        const int second = ds.shape.size - first;
        const int k1 = std::max(1, k - second);
        std::vector<Card> a(naturals.begin(), naturals.begin() + k1);
        std::vector<Card> b(naturals.begin() + k1, naturals.end());
        while (static_cast<int>(a.size()) < first) a.push_back(take_joker());
        while (static_cast<int>(b.size()) < second) b.push_back(take_joker());
        out.witness.melds.push_back(Meld::set(ds.value, std::move(a)));
        out.witness.melds.push_back(Meld::set(ds.value, std::move(b)));
      }
    }
    out.witness = canonicalize(std::move(out.witness), ctx_);
    out.target = Hand::from_cards(out.witness.cards(), ctx_.deck());
    out.value = distance(hand_, out.target);
    fill_replacements(hand_, out.target, out.kept, out.replacements);
    if (out.value != kHandSize - best_) throw std::logic_error("min-dist witness does not attain optimum");
    return out;
  }

  const Hand& hand_;
  const JokerContext& ctx_;
  std::array<std::array<int, kMaxPosition + 1>, kNumSuits> cell_{};
  int hand_jokers_ = 0;
  int joker_supply_ = 0;
  std::array<int, kTerminalStep + 1> ahead_{};
  std::array<std::array<std::array<std::uint8_t, kHandSize + 1>, 16>, kTerminalStep + 1> reach_{};
  int best_ = -1;
  std::vector<Decision> path_;
  std::unordered_map<std::uint64_t, std::int8_t> failed_;  // state -> smallest infeasible need
};

}  // namespace detail

/// Exact minimum number of replacements that turn h into a declarable hand.
inline int min_dist_value(const Hand& h, const JokerContext& ctx) {
  h.require_playable(ctx);
  detail::MinDistSolver solver(h, ctx);
  return kHandSize - solver.solve();
}

/// As min_dist_value, with a target declaration attaining the minimum.
inline MinDistResult min_dist(const Hand& h, const JokerContext& ctx) {
  h.require_playable(ctx);
  detail::MinDistSolver solver(h, ctx);
  solver.solve();
  return solver.witness();
}

}  // namespace rummy
